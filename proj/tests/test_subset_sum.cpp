#include <doctest.h>

#include <memory>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "shifttree/hashed_shift_tree.hpp"
#include "shifttree/subset_sum.hpp"

using shifttree::Backend;
using shifttree::Instance;
using shifttree::SolveOptions;
using shifttree::SolveStats;
using shifttree::SumSet;
using shifttree::solve;
using shifttree::solve_naive;

namespace {

std::vector<std::size_t> solve_sorted(const Instance& inst, Backend backend, std::uint64_t seed = 1) {
    return solve(inst, SolveOptions{backend, seed, {}}).sorted();
}

Instance with_multiplicity(std::size_t m, std::size_t x, std::uint64_t mu) {
    Instance inst(m);
    inst.add(static_cast<std::int64_t>(x), mu);
    return inst;
}

}  // namespace

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(Instance(0), std::invalid_argument);
    CHECK_THROWS_AS(Instance(5, std::vector<std::uint64_t>(4)), std::invalid_argument);
    const std::vector<std::int64_t> values{7, -3, 2, 12};
    const auto inst = Instance::from_values(5, values);
    CHECK(inst.multiplicity(2) == 4);
    CHECK(inst.multiplicity(0) == 0);
}

TEST_CASE("sum set") {
    SumSet s(6);
    CHECK(s.contains(0));
    CHECK(s.size() == 1);
    CHECK(s.insert(4));
    CHECK(!s.insert(4));
    CHECK(s.insert(2));
    CHECK(s.insertion_order() == std::vector<std::size_t>{0, 4, 2});
    CHECK(s.sorted() == std::vector<std::size_t>{0, 2, 4});
}

TEST_CASE("padded length") {
    CHECK(shifttree::padded_length(1) == 2);
    CHECK(shifttree::padded_length(2) == 4);
    CHECK(shifttree::padded_length(5) == 16);
    CHECK(shifttree::padded_length(8) == 16);
    CHECK(shifttree::padded_length(129) == 512);
}

TEST_CASE("small instances") {
    for (Backend backend : {Backend::hashed, Backend::tagged}) {
        CAPTURE(shifttree::to_string(backend));
        CHECK(solve_sorted(Instance(7), backend) == std::vector<std::size_t>{0});
        const std::vector<std::int64_t> two_three{2, 3};
        CHECK(solve_sorted(Instance::from_values(5, two_three), backend) == std::vector<std::size_t>{0, 2, 3});
        CHECK(solve_sorted(with_multiplicity(6, 3, 2), backend) == std::vector<std::size_t>{0, 3});
        CHECK(solve_sorted(with_multiplicity(4, 1, 1), backend) == std::vector<std::size_t>{0, 1});
        CHECK(solve_sorted(with_multiplicity(8, 1, 8), backend) == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
        CHECK(solve_sorted(with_multiplicity(1, 0, 3), backend) == std::vector<std::size_t>{0});
        CHECK(solve_sorted(with_multiplicity(9, 0, 5), backend) == std::vector<std::size_t>{0});
        CHECK(solve_sorted(with_multiplicity(10, 4, 1000000000000ull), backend) ==
              std::vector<std::size_t>{0, 2, 4, 6, 8});
    }
    CHECK(solve_naive(Instance::from_values(5, std::vector<std::int64_t>{2, 3})).sorted() ==
          std::vector<std::size_t>{0, 2, 3});
    CHECK(solve_naive(with_multiplicity(6, 3, 2)).sorted() == std::vector<std::size_t>{0, 3});
    CHECK(solve_naive(with_multiplicity(7, 3, 1)).sorted() == std::vector<std::size_t>{0, 3});
    CHECK(solve_naive(with_multiplicity(7, 0, 1)).sorted() == std::vector<std::size_t>{0});
}

TEST_CASE("naive solver matches subset enumeration") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 1 + rng() % 40;
        std::vector<std::int64_t> values(rng() % 12);
        for (auto& v : values) v = static_cast<std::int64_t>(rng() % 200) - 100;
        const auto inst = Instance::from_values(m, values);
        REQUIRE(solve_naive(inst).sorted() == oracles::brute_force_sums(values, m));
    }
}

TEST_CASE("symmetric difference is twice the new sums") {
    // S = {0}, x = 2, m = 5: s = 10000 and s shifted by 2 = 00100.
    const std::size_t m = 5, length = 16, x = 2;
    auto ctx = std::make_shared<const shifttree::HashContext>(shifttree::HashContext::make(length, 3));
    std::vector<shifttree::Letter> first(length, 0), second(length, 0);
    first[0] = 1;
    second[0] = 1;
    second[length - m] = 1;
    shifttree::HashedShiftTree t1(ctx, first);
    shifttree::HashedShiftTree t2(ctx, second);
    t2.shift(x);
    const auto d = t1.diff(t2, 0, m - 1);
    CHECK(d == std::vector<std::size_t>{0, 2});
    SumSet sums(m);
    std::vector<std::size_t> fresh;
    for (std::size_t v : d) {
        if (!sums.contains(v)) fresh.push_back(v);
    }
    CHECK(fresh == std::vector<std::size_t>{2});
}

TEST_CASE("solver state keeps the padded layout") {
    std::mt19937_64 rng(8);
    for (std::size_t m : {2u, 3u, 5u, 8u, 13u, 16u, 17u}) {
        for (Backend backend : {Backend::hashed, Backend::tagged}) {
            Instance inst(m);
            for (int i = 0; i < 4; ++i) inst.add(static_cast<std::int64_t>(rng() % m), 1 + rng() % 2);
            std::size_t probes = 0;
            std::size_t last_size = 1;
            SolveOptions options{backend, 5, {}};
            options.probe = [&](const shifttree::SolverProbe& p) {
                ++probes;
                const std::size_t length = p.padded_length;
                REQUIRE(p.sums.contains(0));
                REQUIRE(p.sums.size() >= last_size);
                last_size = p.sums.size();
                std::vector<std::uint8_t> s(m);
                for (std::size_t j = 0; j < m; ++j) s[j] = p.sums.contains(j) ? 1 : 0;

                std::vector<std::uint8_t> s1(length, 0), s2(length, 0);
                std::copy(s.begin(), s.end(), s1.begin());
                std::copy(s.begin(), s.end(), s2.begin());
                std::copy(s.begin(), s.end(), s2.begin() + static_cast<std::ptrdiff_t>(length - m));
                REQUIRE(p.first_string() == s1);
                const auto current = p.second_string();
                REQUIRE(oracles::rotate_right(current, -static_cast<std::int64_t>(p.shift)) == s2);
                if (p.shift <= m) {
                    // s shifted by x is a prefix of the padded string shifted by x.
                    const auto rotated = oracles::rotate_right(s, static_cast<std::int64_t>(p.shift));
                    REQUIRE(std::equal(rotated.begin(), rotated.end(), current.begin()));
                }
            };
            const auto result = solve(inst, options);
            CHECK(probes == shifttree::padded_length(m));
            CHECK(result == solve_naive(inst));
        }
    }
}

TEST_CASE("randomized agreement of all three solvers with work budgets") {
    std::mt19937_64 rng(2025);
    const std::vector<std::size_t> moduli{1, 2, 3, 5, 8, 16, 100, 127, 128, 129, 512, 1000};
    for (std::size_t m : moduli) {
        for (int trial = 0; trial < 6; ++trial) {
            Instance inst(m);
            const std::size_t distinct = 1 + rng() % std::min<std::size_t>(m, 12);
            for (std::size_t i = 0; i < distinct; ++i) {
                const std::uint64_t choices[] = {0, 1, 2, m};
                inst.add(static_cast<std::int64_t>(rng() % m), choices[rng() % 4]);
            }
            if (trial % 2 == 0) inst.add(0, 3);
            const auto expected = solve_naive(inst);
            for (Backend backend : {Backend::hashed, Backend::tagged}) {
                SolveStats stats;
                const auto got = solve(inst, SolveOptions{backend, rng(), {}}, &stats);
                REQUIRE(got == expected);
                CHECK(stats.bellman_iterations <= 2 * m);
                CHECK(stats.reported_differences <= 2 * m);
                if (m > 1) CHECK(stats.shifts == shifttree::padded_length(m) - 1);
            }
        }
    }
}
