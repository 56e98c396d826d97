#include "shifttree/schedule.hpp"

#include <stdexcept>

namespace shifttree {

std::uint64_t bitrev(unsigned width, std::uint64_t j) {
    if (width > 63 || (j >> width) != 0) {
        throw std::out_of_range("bitrev: index does not fit in the given width");
    }
    std::uint64_t out = 0;
    for (unsigned bit = 0; bit < width; ++bit) {
        out = (out << 1) | ((j >> bit) & 1u);
    }
    return out;
}

ShiftSchedule::ShiftSchedule(unsigned width) : width_(width) {
    if (width > 62) {
        throw std::invalid_argument("ShiftSchedule: width too large");
    }
}

std::optional<std::int64_t> ShiftSchedule::next_delta() {
    if (done()) {
        return std::nullopt;
    }
    ++index_;
    const std::uint64_t next = bitrev(width_, index_);
    const auto delta = static_cast<std::int64_t>(next) - static_cast<std::int64_t>(current_);
    current_ = next;
    return delta;
}

}  // namespace shifttree
