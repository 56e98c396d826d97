#pragma once

#include <cstdint>

namespace shifttree {

/// Work counters kept by every shift-tree. Plain increments, always compiled in.
/// Diff visits are reported through the optional out-parameter of diff() so
/// that diff on a hashed tree stays free of writes.
struct TreeCounters {
    std::uint64_t updates = 0;  // inner-node recomputations
};

}  // namespace shifttree
