#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace shifttree {

/// Slot handle of a tag in a TagStore. Stable while the tag is live.
struct TagId {
    static constexpr std::uint32_t kNull = std::numeric_limits<std::uint32_t>::max();

    std::uint32_t value = kNull;

    constexpr bool is_null() const noexcept { return value == kNull; }
    friend constexpr bool operator==(TagId, TagId) = default;
    friend constexpr auto operator<=>(TagId, TagId) = default;
};

struct TagStoreStats {
    std::uint64_t new_tags = 0;
    std::uint64_t finds = 0;
    std::uint64_t unions = 0;
    std::uint64_t deletes = 0;
    std::uint64_t link_steps = 0;  // parent links followed by find, rebuilds included
    std::uint64_t rebuilds = 0;

    std::uint64_t operations() const noexcept { return new_tags + finds + unions + deletes; }
};

/// Union-find over tags with deletion.
///
/// Union by size with path compression. A deleted tag stays in the forest as a
/// marked node until marked nodes outnumber live ones; then the forest is
/// rebuilt over the live tags only and marked slots go to a freelist. This
/// keeps the slot array within twice the peak number of live tags.
///
/// find() compresses paths, so every operation needs exclusive access.
/// Representatives may change across a rebuild: do not cache find() results
/// across mutations.
class TagStore {
public:
    TagStore() = default;
    /// With `reclaim` off, delete_tag only marks and the store never rebuilds.
    /// Test configuration for the no-deletion regime.
    explicit TagStore(bool reclaim) : reclaim_(reclaim) {}

    TagId new_tag();
    TagId find(TagId x);
    void unite(TagId x, TagId y);
    void delete_tag(TagId x);

    bool is_live(TagId x) const noexcept {
        return x.value < slots_.size() && slots_[x.value].state == State::live;
    }

    std::size_t live_count() const noexcept { return live_; }
    std::size_t marked_count() const noexcept { return marked_; }
    /// Length of the slot array (live, marked and free slots).
    std::size_t slot_count() const noexcept { return slots_.size(); }
    std::size_t peak_live() const noexcept { return peak_live_; }

    const TagStoreStats& stats() const noexcept { return stats_; }
    void reset_stats() noexcept { stats_ = {}; }

private:
    enum class State : std::uint8_t { live, marked, free };

    struct Slot {
        std::uint32_t parent;
        std::uint32_t size : 30;  // nodes in the tree below a root, marked ones included
        State state : 2;
    };
    static_assert(sizeof(Slot) == 8);
    static constexpr std::size_t kMaxSlots = std::size_t{1} << 30;

    std::uint32_t root_of(std::uint32_t x);
    void rebuild();

    std::vector<Slot> slots_;
    std::vector<std::uint32_t> freelist_;
    std::size_t live_ = 0;
    std::size_t marked_ = 0;
    std::size_t peak_live_ = 0;
    bool reclaim_ = true;
    TagStoreStats stats_;
};

}  // namespace shifttree
