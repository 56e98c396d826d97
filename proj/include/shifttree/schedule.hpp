#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace shifttree {

/// Reverses the low `width` bits of `j`. Throws if j >= 2^width.
std::uint64_t bitrev(unsigned width, std::uint64_t j);

/// Walks the shifts sigma(0), ..., sigma(L-1) of the bit-reversal permutation
/// of length L = 2^width, handing out the offsets sigma(i) - sigma(i-1).
/// Applying them in order to a shift-tree of size O(L) costs O(L log L) updates
/// in total.
class ShiftSchedule {
public:
    explicit ShiftSchedule(unsigned width);

    unsigned width() const noexcept { return width_; }
    std::uint64_t length() const noexcept { return std::uint64_t{1} << width_; }
    std::uint64_t index() const noexcept { return index_; }
    /// sigma(index()).
    std::uint64_t current() const noexcept { return current_; }
    bool done() const noexcept { return index_ + 1 >= length(); }

    /// Advances to the next index and returns the signed offset to it, or
    /// nullopt once every shift has been visited.
    std::optional<std::int64_t> next_delta();

private:
    unsigned width_;
    std::uint64_t index_ = 0;
    std::uint64_t current_ = 0;
};

}  // namespace shifttree
