#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "shifttree/counters.hpp"
#include "shifttree/rolling_hash.hpp"
#include "shifttree/topology.hpp"

namespace shifttree {

/// Randomized shift-tree: a string of length 2^n supporting point assignment,
/// cyclic shift by k in O(2^n / 2^j) where 2^j is the largest power of two
/// dividing k, and listing of differences against another tree in
/// O((d+1) log m).
///
/// Leaves store letters, inner nodes store the polynomial hash of the string
/// they span. Trees compared with diff() must share the same HashContext.
class HashedShiftTree {
public:
    /// All-zero string of length 2^depth.
    HashedShiftTree(std::shared_ptr<const HashContext> ctx, unsigned depth);
    /// Tree over `s`; |s| must be a power of two.
    HashedShiftTree(std::shared_ptr<const HashContext> ctx, std::span<const Letter> s);

    void init(std::span<const Letter> s);
    void set(std::size_t pos, Letter x);
    /// Replaces s by s rotated right by `offset` positions.
    void shift(std::int64_t offset);

    /// Ascending positions x in [a, b] where this string and `other` differ.
    /// Exact unless two different substrings collide under the hash. When `visits`
    /// is given, the number of recursive node-pair visits is added to it.
    std::vector<std::size_t> diff(const HashedShiftTree& other, std::size_t a, std::size_t b,
                                  std::uint64_t* visits = nullptr) const;

    Letter at(std::size_t pos) const { return nodes_[topo_.leaf_of_position(pos)]; }
    std::vector<Letter> materialize() const;
    /// The string spanned by a node, read through the current links.
    std::vector<Letter> associated_string(std::size_t node) const;

    HashValue node_value(std::size_t node) const { return nodes_[node]; }
    HashValue root_hash() const { return nodes_[1]; }

    const Topology& topology() const noexcept { return topo_; }
    std::size_t size() const noexcept { return topo_.leaf_count(); }
    const HashContext& context() const noexcept { return *ctx_; }
    const std::shared_ptr<const HashContext>& context_ptr() const noexcept { return ctx_; }

    const TreeCounters& counters() const noexcept { return counters_; }
    void reset_counters() noexcept { counters_ = {}; }

private:
    void update(std::size_t node);
    void find_differences(const HashedShiftTree& other, std::size_t a, std::size_t b, std::size_t i, std::size_t j,
                          std::size_t x, std::size_t y, std::vector<std::size_t>& out, std::uint64_t& visits) const;
    void collect(std::size_t node, std::vector<Letter>& out) const;

    std::shared_ptr<const HashContext> ctx_;
    Topology topo_;
    std::vector<HashValue> nodes_;  // index 0 unused
    TreeCounters counters_;
};

}  // namespace shifttree
