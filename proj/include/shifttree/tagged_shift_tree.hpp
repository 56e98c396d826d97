#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shifttree/counters.hpp"
#include "shifttree/tag_store.hpp"
#include "shifttree/topology.hpp"

namespace shifttree {

/// Deterministic shift-tree. Same layout and operations as HashedShiftTree,
/// but each inner node holds a tag from a TagStore shared by all comparable
/// trees. Equal tags (under the store's relation) always span equal strings;
/// diff() learns new equalities as it proves them and records them with a
/// union, so repeated comparisons get cheaper.
///
/// Letters are only ever compared for equality.
template <std::equality_comparable LetterT>
class TaggedShiftTree {
public:
    using letter_type = LetterT;

    TaggedShiftTree(std::shared_ptr<TagStore> store, std::span<const LetterT> s)
        : store_(std::move(store)), topo_(depth_for_length(s.size())) {
        if (!store_) {
            throw std::invalid_argument("TaggedShiftTree: null tag store");
        }
        tags_.assign(topo_.leaf_count(), TagId{});
        init(s);
    }

    TaggedShiftTree(const TaggedShiftTree&) = delete;
    TaggedShiftTree& operator=(const TaggedShiftTree&) = delete;

    TaggedShiftTree(TaggedShiftTree&& other) noexcept
        : store_(std::move(other.store_)),
          topo_(other.topo_),
          letters_(std::move(other.letters_)),
          tags_(std::move(other.tags_)),
          counters_(other.counters_) {}

    TaggedShiftTree& operator=(TaggedShiftTree&& other) noexcept {
        if (this != &other) {
            release();
            store_ = std::move(other.store_);
            topo_ = other.topo_;
            letters_ = std::move(other.letters_);
            tags_ = std::move(other.tags_);
            counters_ = other.counters_;
        }
        return *this;
    }

    ~TaggedShiftTree() { release(); }

    void init(std::span<const LetterT> s) {
        if (s.size() != topo_.leaf_count()) {
            throw std::invalid_argument("TaggedShiftTree::init: string length does not match the tree");
        }
        topo_.set_delta(0);
        letters_.assign(s.begin(), s.end());
        for (std::size_t i = topo_.leaf_count() - 1; i >= 1; --i) {
            update(i);
        }
    }

    void set(std::size_t pos, const LetterT& x) {
        std::size_t node = topo_.leaf_of_position(pos);
        letters_[node - topo_.leaf_count()] = x;
        while (node != 1) {
            node = topo_.parent(node);
            update(node);
        }
    }

    void shift(std::int64_t offset) {
        const std::uint64_t granularity = shift_granularity(offset, topo_.depth());
        if (granularity == 0) {
            return;
        }
        topo_.advance(offset);
        for (std::size_t i = topo_.leaf_count() / granularity - 1; i >= 1; --i) {
            update(i);
        }
    }

    /// Ascending positions x in [a, b] where this string and `other` differ.
    /// Always exact. Mutates the shared store (unions, path compression).
    std::vector<std::size_t> diff(const TaggedShiftTree& other, std::size_t a, std::size_t b,
                                  std::uint64_t* visits = nullptr) {
        if (other.topo_.depth() != topo_.depth()) {
            throw std::invalid_argument("diff: trees have different sizes");
        }
        if (other.store_ != store_) {
            throw std::invalid_argument("diff: trees use different tag stores");
        }
        if (a > b || b >= topo_.leaf_count()) {
            throw std::out_of_range("diff: invalid interval");
        }
        std::vector<std::size_t> out;
        std::uint64_t count = 0;
        find_differences(other, a, b, 1, 1, 0, topo_.leaf_count() - 1, out, count);
        if (visits != nullptr) {
            *visits += count;
        }
        return out;
    }

    const LetterT& at(std::size_t pos) const { return letters_[topo_.leaf_of_position(pos) - topo_.leaf_count()]; }

    std::vector<LetterT> materialize() const {
        std::vector<LetterT> out;
        out.reserve(topo_.leaf_count());
        for (std::size_t pos = 0; pos < topo_.leaf_count(); ++pos) {
            out.push_back(at(pos));
        }
        return out;
    }

    std::vector<LetterT> associated_string(std::size_t node) const {
        if (node < 1 || node >= topo_.node_end()) {
            throw std::out_of_range("associated_string: node index out of range");
        }
        std::vector<LetterT> out;
        collect(node, out);
        return out;
    }

    /// Tag of an inner node.
    TagId tag(std::size_t node) const { return tags_.at(node); }

    const Topology& topology() const noexcept { return topo_; }
    std::size_t size() const noexcept { return topo_.leaf_count(); }
    TagStore& store() const noexcept { return *store_; }
    const std::shared_ptr<TagStore>& store_ptr() const noexcept { return store_; }

    const TreeCounters& counters() const noexcept { return counters_; }
    void reset_counters() noexcept { counters_ = {}; }

private:
    void update(std::size_t node) {
        ++counters_.updates;
        if (!tags_[node].is_null()) {
            store_->delete_tag(tags_[node]);
        }
        tags_[node] = store_->new_tag();
    }

    void find_differences(const TaggedShiftTree& other, std::size_t a, std::size_t b, std::size_t i, std::size_t j,
                          std::size_t x, std::size_t y, std::vector<std::size_t>& out, std::uint64_t& visits) {
        ++visits;
        if (y < a || b < x) {
            return;
        }
        if (x == y) {
            if (!(letters_[i - topo_.leaf_count()] == other.letters_[j - other.topo_.leaf_count()])) {
                out.push_back(x);
            }
            return;
        }
        if (store_->find(tags_[i]) == store_->find(other.tags_[j])) {
            return;
        }
        const std::size_t found_before = out.size();
        const std::size_t z = (x + y + 1) / 2;
        find_differences(other, a, b, topo_.left_child(i), other.topo_.left_child(j), x, z - 1, out, visits);
        find_differences(other, a, b, topo_.right_child(i), other.topo_.right_child(j), z, y, out, visits);
        if (out.size() == found_before && a <= x && y <= b) {
            store_->unite(tags_[i], other.tags_[j]);
        }
    }

    void collect(std::size_t node, std::vector<LetterT>& out) const {
        if (topo_.is_leaf(node)) {
            out.push_back(letters_[node - topo_.leaf_count()]);
            return;
        }
        collect(topo_.left_child(node), out);
        collect(topo_.right_child(node), out);
    }

    void release() noexcept {
        if (!store_) {
            return;
        }
        for (std::size_t i = 1; i < tags_.size(); ++i) {
            if (!tags_[i].is_null()) {
                store_->delete_tag(tags_[i]);
            }
        }
        tags_.clear();
        store_.reset();
    }

    std::shared_ptr<TagStore> store_;
    Topology topo_;
    std::vector<LetterT> letters_;  // leaf node v holds letters_[v - 2^n]
    std::vector<TagId> tags_;       // inner nodes 1 .. 2^n-1; index 0 unused
    TreeCounters counters_;
};

}  // namespace shifttree
