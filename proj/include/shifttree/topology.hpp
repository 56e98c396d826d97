#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace shifttree {

/// Implicit perfect binary tree over 2^n leaves whose child links are skewed by
/// a cyclic shift offset `delta`.
///
/// Nodes are numbered 1 .. 2^{n+1}-1; level k occupies [2^k, 2^{k+1}-1] for every
/// value of delta. Only the links change when delta changes, never the node
/// storage, so a cyclic shift by k only invalidates the levels above the 2-adic
/// valuation of k.
class Topology {
public:
    static constexpr unsigned kMaxDepth = 40;

    constexpr Topology() = default;

    explicit constexpr Topology(unsigned depth, std::uint64_t delta = 0) : depth_(depth), delta_(0) {
        if (depth > kMaxDepth) {
            throw std::invalid_argument("Topology: depth too large");
        }
        set_delta(delta);
    }

    constexpr unsigned depth() const noexcept { return depth_; }
    constexpr std::uint64_t delta() const noexcept { return delta_; }
    constexpr std::size_t leaf_count() const noexcept { return std::size_t{1} << depth_; }
    /// One past the largest node index.
    constexpr std::size_t node_end() const noexcept { return std::size_t{2} << depth_; }

    constexpr void set_delta(std::uint64_t delta) noexcept { delta_ = delta & (leaf_count() - 1); }

    /// Adds a (possibly negative) offset to delta, reducing into [0, 2^n).
    constexpr void advance(std::int64_t offset) noexcept {
        set_delta(delta_ + static_cast<std::uint64_t>(offset));
    }

    static constexpr unsigned level(std::size_t node) noexcept {
        assert(node >= 1);
        return static_cast<unsigned>(std::bit_width(node)) - 1;
    }

    constexpr bool is_leaf(std::size_t node) const noexcept { return node >= leaf_count(); }

    /// The (n-k)-th least significant bit of delta.
    constexpr unsigned skew(unsigned k) const noexcept {
        assert(k <= depth_);
        return static_cast<unsigned>((delta_ >> (depth_ - k)) & 1u);
    }

    constexpr std::size_t left_child(std::size_t node) const noexcept {
        assert(node >= 1 && node < leaf_count());
        const std::size_t width = std::size_t{2} << level(node);
        return ((2 * node - skew(level(node) + 1)) & (width - 1)) + width;
    }

    constexpr std::size_t right_child(std::size_t node) const noexcept {
        assert(node >= 1 && node < leaf_count());
        const std::size_t width = std::size_t{2} << level(node);
        return ((2 * node + 1 - skew(level(node) + 1)) & (width - 1)) + width;
    }

    constexpr std::size_t parent(std::size_t node) const noexcept {
        assert(node > 1 && node < node_end());
        const unsigned k = level(node);
        const std::size_t width = std::size_t{1} << k;
        return (((node + skew(k)) & (width - 1)) + width) / 2;
    }

    /// Leaf node holding string position `pos`.
    constexpr std::size_t leaf_of_position(std::size_t pos) const {
        if (pos >= leaf_count()) {
            throw std::out_of_range("Topology::leaf_of_position: position out of range");
        }
        return ((pos - delta_) & (leaf_count() - 1)) + leaf_count();
    }

    /// Inverse of leaf_of_position.
    constexpr std::size_t position_of_leaf(std::size_t leaf) const noexcept {
        assert(is_leaf(leaf) && leaf < node_end());
        return ((leaf - leaf_count()) + delta_) & (leaf_count() - 1);
    }

    /// Number of leaves below a node at level k.
    constexpr std::size_t span_at_level(unsigned k) const noexcept { return std::size_t{1} << (depth_ - k); }

    friend constexpr bool operator==(const Topology&, const Topology&) = default;

private:
    unsigned depth_ = 0;
    std::uint64_t delta_ = 0;
};

/// Depth n such that 2^n == length; throws if length is not a power of two.
inline unsigned depth_for_length(std::size_t length) {
    if (length == 0 || !std::has_single_bit(length)) {
        throw std::invalid_argument("string length must be a positive power of two");
    }
    return static_cast<unsigned>(std::countr_zero(length));
}

/// 2^j for the largest j with 2^j | offset, after reducing offset into [0, 2^depth).
/// Returns 0 when offset is a multiple of 2^depth.
inline std::uint64_t shift_granularity(std::int64_t offset, unsigned depth) noexcept {
    const std::uint64_t mask = (std::uint64_t{1} << depth) - 1;
    const std::uint64_t k = static_cast<std::uint64_t>(offset) & mask;
    return k & ~(k - 1);
}

}  // namespace shifttree
