#include <doctest.h>

#include <memory>
#include <set>
#include <vector>

#include "shifttree/hashed_shift_tree.hpp"
#include "shifttree/schedule.hpp"

using shifttree::bitrev;
using shifttree::ShiftSchedule;

TEST_CASE("bitrev") {
    CHECK(bitrev(0, 0) == 0);
    CHECK(bitrev(5, 0) == 0);
    CHECK(bitrev(4, 1) == 8);
    CHECK(bitrev(3, 6) == 3);
    CHECK(bitrev(4, 15) == 15);
    CHECK_THROWS_AS(bitrev(3, 8), std::out_of_range);
    for (unsigned k = 0; k <= 12; ++k) {
        std::set<std::uint64_t> seen;
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << k); ++j) {
            REQUIRE(bitrev(k, bitrev(k, j)) == j);
            seen.insert(bitrev(k, j));
        }
        REQUIRE(seen.size() == (std::size_t{1} << k));
    }
}

TEST_CASE("schedule deltas") {
    ShiftSchedule schedule(4);
    CHECK(schedule.current() == 0);
    CHECK(schedule.next_delta() == 8);
    CHECK(schedule.next_delta() == -4);
    CHECK(schedule.next_delta() == 8);
    CHECK(schedule.current() == 12);

    ShiftSchedule full(6);
    std::int64_t sum = 0;
    std::size_t steps = 0;
    while (auto d = full.next_delta()) {
        sum += *d;
        ++steps;
    }
    CHECK(steps == 63);
    CHECK(sum == 63);
    CHECK(!full.next_delta().has_value());

    ShiftSchedule trivial(0);
    CHECK(trivial.done());
    CHECK(!trivial.next_delta().has_value());
}

TEST_CASE("there are 2^j deltas of 2-adic valuation j") {
    for (unsigned k = 1; k <= 14; ++k) {
        std::vector<std::size_t> by_valuation(k, 0);
        ShiftSchedule schedule(k);
        while (auto d = schedule.next_delta()) {
            auto v = static_cast<std::uint64_t>(*d < 0 ? -*d : *d);
            unsigned j = 0;
            while ((v & 1) == 0) {
                v >>= 1;
                ++j;
            }
            REQUIRE(j < k);
            ++by_valuation[j];
        }
        for (unsigned j = 0; j < k; ++j) {
            CHECK(by_valuation[j] == (std::size_t{1} << j));
        }
    }
}

TEST_CASE("full traversal of a 16-leaf tree costs 49 updates") {
    auto ctx = std::make_shared<const shifttree::HashContext>(shifttree::HashContext::make(16, 1));
    shifttree::HashedShiftTree tree(ctx, 4);
    tree.reset_counters();
    ShiftSchedule schedule(4);
    while (auto d = schedule.next_delta()) tree.shift(*d);
    CHECK(tree.counters().updates == 49);
    CHECK(tree.topology().delta() == 15);
}
