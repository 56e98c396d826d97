#include "shifttree/hashed_shift_tree.hpp"

#include <stdexcept>
#include <utility>

namespace shifttree {

HashedShiftTree::HashedShiftTree(std::shared_ptr<const HashContext> ctx, unsigned depth)
    : ctx_(std::move(ctx)), topo_(depth) {
    if (!ctx_) {
        throw std::invalid_argument("HashedShiftTree: null hash context");
    }
    if (ctx_->max_length() < topo_.leaf_count()) {
        throw std::invalid_argument("HashedShiftTree: hash context power table too short");
    }
    // All-zero letters hash to zero at every node.
    nodes_.assign(topo_.node_end(), 0);
}

HashedShiftTree::HashedShiftTree(std::shared_ptr<const HashContext> ctx, std::span<const Letter> s)
    : HashedShiftTree(std::move(ctx), depth_for_length(s.size())) {
    init(s);
}

void HashedShiftTree::update(std::size_t node) {
    ++counters_.updates;
    const std::size_t left_len = topo_.span_at_level(Topology::level(node) + 1);
    nodes_[node] = ctx_->combine(nodes_[topo_.left_child(node)], nodes_[topo_.right_child(node)], left_len);
}

void HashedShiftTree::init(std::span<const Letter> s) {
    if (s.size() != topo_.leaf_count()) {
        throw std::invalid_argument("HashedShiftTree::init: string length does not match the tree");
    }
    for (Letter x : s) {
        if (!ctx_->valid_letter(x)) {
            throw std::invalid_argument("HashedShiftTree::init: letter not below the hash modulus");
        }
    }
    topo_.set_delta(0);
    const std::size_t m = topo_.leaf_count();
    for (std::size_t i = 0; i < m; ++i) {
        nodes_[m + i] = s[i];
    }
    for (std::size_t i = m - 1; i >= 1; --i) {
        update(i);
    }
}

void HashedShiftTree::set(std::size_t pos, Letter x) {
    if (!ctx_->valid_letter(x)) {
        throw std::invalid_argument("HashedShiftTree::set: letter not below the hash modulus");
    }
    std::size_t node = topo_.leaf_of_position(pos);
    nodes_[node] = x;
    while (node != 1) {
        node = topo_.parent(node);
        update(node);
    }
}

void HashedShiftTree::shift(std::int64_t offset) {
    const std::uint64_t granularity = shift_granularity(offset, topo_.depth());
    if (granularity == 0) {
        return;
    }
    topo_.advance(offset);
    // Subtrees below level n-j keep their shape; rebuild the 2^{n-j}-1 nodes above.
    for (std::size_t i = topo_.leaf_count() / granularity - 1; i >= 1; --i) {
        update(i);
    }
}

std::vector<std::size_t> HashedShiftTree::diff(const HashedShiftTree& other, std::size_t a, std::size_t b,
                                               std::uint64_t* visits) const {
    if (other.topo_.depth() != topo_.depth()) {
        throw std::invalid_argument("diff: trees have different sizes");
    }
    if (other.ctx_ != ctx_) {
        throw std::invalid_argument("diff: trees use different hash contexts");
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

void HashedShiftTree::find_differences(const HashedShiftTree& other, std::size_t a, std::size_t b, std::size_t i,
                                       std::size_t j, std::size_t x, std::size_t y, std::vector<std::size_t>& out,
                                       std::uint64_t& visits) const {
    ++visits;
    if (y < a || b < x || nodes_[i] == other.nodes_[j]) {
        return;
    }
    if (x == y) {
        out.push_back(x);
        return;
    }
    const std::size_t z = (x + y + 1) / 2;
    find_differences(other, a, b, topo_.left_child(i), other.topo_.left_child(j), x, z - 1, out, visits);
    find_differences(other, a, b, topo_.right_child(i), other.topo_.right_child(j), z, y, out, visits);
}

std::vector<Letter> HashedShiftTree::materialize() const {
    std::vector<Letter> out(topo_.leaf_count());
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        out[pos] = nodes_[topo_.leaf_of_position(pos)];
    }
    return out;
}

std::vector<Letter> HashedShiftTree::associated_string(std::size_t node) const {
    if (node < 1 || node >= topo_.node_end()) {
        throw std::out_of_range("associated_string: node index out of range");
    }
    std::vector<Letter> out;
    collect(node, out);
    return out;
}

void HashedShiftTree::collect(std::size_t node, std::vector<Letter>& out) const {
    if (topo_.is_leaf(node)) {
        out.push_back(nodes_[node]);
        return;
    }
    collect(topo_.left_child(node), out);
    collect(topo_.right_child(node), out);
}

}  // namespace shifttree
