#include "shifttree/rolling_hash.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace shifttree {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t p : kBases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

HashContext HashContext::make(std::size_t max_len, std::uint64_t seed) {
    if (max_len > kMaxLength) {
        throw std::invalid_argument("HashContext: length exceeds the supported maximum");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> draw(0, kMersenne61 - 1);
    return HashContext(kMersenne61, draw(rng), max_len);
}

HashContext::HashContext(std::uint64_t prime, std::uint64_t point, std::size_t max_len)
    : prime_(prime), point_(point) {
    if (max_len < 1) {
        throw std::invalid_argument("HashContext: max_len must be positive");
    }
    if (prime >= (std::uint64_t{1} << 62) || !is_prime(prime)) {
        throw std::invalid_argument("HashContext: modulus must be a prime below 2^62");
    }
    if (point >= prime) {
        throw std::invalid_argument("HashContext: evaluation point must be below the modulus");
    }
    powers_.resize(max_len + 1);
    powers_[0] = 1 % prime_;
    for (std::size_t i = 1; i <= max_len; ++i) {
        powers_[i] = mul(powers_[i - 1], point_);
    }
}

HashValue HashContext::hash_string(std::span<const Letter> s) const {
    HashValue h = 0;
    HashValue rp = 1 % prime_;
    for (Letter x : s) {
        if (!valid_letter(x)) {
            throw std::invalid_argument("hash_string: letter not below the modulus");
        }
        h = add(h, mul(x, rp));
        rp = mul(rp, point_);
    }
    return h;
}

}  // namespace shifttree
