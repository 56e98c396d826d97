#include "shifttree/tag_store.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace shifttree {

TagId TagStore::new_tag() {
    ++stats_.new_tags;
    std::uint32_t id;
    if (!freelist_.empty()) {
        id = freelist_.back();
        freelist_.pop_back();
    } else {
        if (slots_.size() >= kMaxSlots) {
            throw std::length_error("TagStore: slot space exhausted");
        }
        id = static_cast<std::uint32_t>(slots_.size());
        slots_.push_back({});
    }
    slots_[id] = Slot{id, 1, State::live};
    ++live_;
    peak_live_ = std::max(peak_live_, live_);
    return TagId{id};
}

std::uint32_t TagStore::root_of(std::uint32_t x) {
    std::uint32_t root = x;
    while (slots_[root].parent != root) {
        root = slots_[root].parent;
        ++stats_.link_steps;
    }
    while (slots_[x].parent != root) {
        x = std::exchange(slots_[x].parent, root);
    }
    return root;
}

TagId TagStore::find(TagId x) {
    assert(is_live(x));
    ++stats_.finds;
    return TagId{root_of(x.value)};
}

void TagStore::unite(TagId x, TagId y) {
    assert(is_live(x) && is_live(y));
    ++stats_.unions;
    std::uint32_t rx = root_of(x.value);
    std::uint32_t ry = root_of(y.value);
    if (rx == ry) {
        return;
    }
    if (slots_[rx].size < slots_[ry].size) {
        std::swap(rx, ry);
    }
    slots_[ry].parent = rx;
    slots_[rx].size += slots_[ry].size;
}

void TagStore::delete_tag(TagId x) {
    assert(is_live(x));
    ++stats_.deletes;
    --live_;
    Slot& slot = slots_[x.value];
    // A childless root is referenced by nobody and can be released at once.
    if (reclaim_ && slot.parent == x.value && slot.size == 1) {
        slot.state = State::free;
        freelist_.push_back(x.value);
    } else {
        slot.state = State::marked;
        ++marked_;
    }
    if (reclaim_ && marked_ > live_) {
        rebuild();
    }
}

void TagStore::rebuild() {
    ++stats_.rebuilds;
    const std::uint32_t n = static_cast<std::uint32_t>(slots_.size());
    std::vector<std::uint32_t> root(n, TagId::kNull);
    std::vector<std::uint32_t> rep(n, TagId::kNull);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (slots_[i].state == State::live) {
            root[i] = root_of(i);
            if (rep[root[i]] == TagId::kNull) {
                rep[root[i]] = i;
            }
        }
    }
    freelist_.clear();
    for (std::uint32_t i = n; i-- > 0;) {
        if (slots_[i].state != State::live) {
            slots_[i] = Slot{i, 0, State::free};
            freelist_.push_back(i);
        } else {
            slots_[i].size = 1;
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        if (root[i] == TagId::kNull) continue;
        const std::uint32_t r = rep[root[i]];
        slots_[i].parent = r;
        if (r != i) {
            ++slots_[r].size;
        }
    }
    marked_ = 0;
}

}  // namespace shifttree
