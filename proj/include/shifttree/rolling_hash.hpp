#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace shifttree {

using HashValue = std::uint64_t;
using Letter = std::uint64_t;

/// Rabin-Karp polynomial hashing over Z_p: h(s) = sum s[i] * r^i mod p.
/// A single letter hashes to itself, so letters must be smaller than p.
/// Immutable after construction.
class HashContext {
public:
    static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
    /// Largest string length for which p >= max_len^3 still holds with p = 2^61-1.
    static constexpr std::size_t kMaxLength = std::size_t{1} << 20;

    /// p = 2^61-1, r drawn uniformly from [0, p) by a generator seeded with `seed`.
    static HashContext make(std::size_t max_len, std::uint64_t seed);

    /// Explicit parameters; `prime` must be a prime below 2^62 and `point` < prime.
    HashContext(std::uint64_t prime, std::uint64_t point, std::size_t max_len);

    std::uint64_t prime() const noexcept { return prime_; }
    std::uint64_t point() const noexcept { return point_; }
    std::size_t max_length() const noexcept { return powers_.size() - 1; }

    /// r^i mod p for i <= max_length().
    std::uint64_t power(std::size_t i) const noexcept { return powers_[i]; }

    /// Hash of s1 s2 given h(s1), h(s2) and |s1|.
    HashValue combine(HashValue h1, HashValue h2, std::size_t len1) const noexcept {
        return add(h1, mul(h2, powers_[len1]));
    }

    /// Direct evaluation of the polynomial; throws if some letter is >= p.
    HashValue hash_string(std::span<const Letter> s) const;

    bool valid_letter(Letter x) const noexcept { return x < prime_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const std::uint64_t sum = a + b;
        return sum >= prime_ ? sum - prime_ : sum;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        const unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
        if (prime_ == kMersenne61) {
            const std::uint64_t folded = static_cast<std::uint64_t>(product & kMersenne61) +
                                         static_cast<std::uint64_t>(product >> 61);
            return folded >= kMersenne61 ? folded - kMersenne61 : folded;
        }
        return static_cast<std::uint64_t>(product % prime_);
    }

private:
    std::uint64_t prime_;
    std::uint64_t point_;
    std::vector<std::uint64_t> powers_;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n) noexcept;

}  // namespace shifttree
