#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "shifttree/rolling_hash.hpp"

using shifttree::HashContext;
using shifttree::Letter;

TEST_CASE("make builds the power table") {
    const auto ctx = HashContext::make(8, 42);
    CHECK(ctx.prime() == HashContext::kMersenne61);
    CHECK(ctx.point() < ctx.prime());
    CHECK(ctx.max_length() == 8);
    CHECK(ctx.power(0) == 1);
    CHECK(ctx.power(2) == ctx.mul(ctx.power(1), ctx.power(1)));
    for (std::size_t i = 1; i <= 8; ++i) {
        CHECK(ctx.power(i) ==
              static_cast<std::uint64_t>(static_cast<unsigned __int128>(ctx.power(i - 1)) * ctx.point() % ctx.prime()));
    }
}

TEST_CASE("seeding is deterministic") {
    CHECK(HashContext::make(16, 7).point() == HashContext::make(16, 7).point());
    CHECK(HashContext::make(16, 7).point() != HashContext::make(16, 8).point());
}

TEST_CASE("combine") {
    const HashContext small(101, 10, 4);
    CHECK(small.combine(1, 2, 1) == 21);
    CHECK(small.combine(small.hash_string(std::vector<Letter>{3, 4, 5}), 0, 3) ==
          small.hash_string(std::vector<Letter>{3, 4, 5}));
}

TEST_CASE("hash_string") {
    const auto ctx = HashContext::make(64, 3);
    CHECK(ctx.hash_string({}) == 0);
    CHECK(ctx.hash_string(std::vector<Letter>{12345}) == 12345);
    CHECK_THROWS_AS(ctx.hash_string(std::vector<Letter>{HashContext::kMersenne61}), std::invalid_argument);

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Letter> letter(0, 1000);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Letter> s(rng() % 64);
        for (auto& x : s) x = letter(rng);
        CHECK(ctx.hash_string(s) == oracles::poly_hash(s, ctx.prime(), ctx.point()));
    }
}

TEST_CASE("left-to-right folding equals the polynomial") {
    const auto ctx = HashContext::make(32, 5);
    std::vector<Letter> s{4, 8, 15, 16, 23, 42, 0, 7};
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        h = ctx.combine(h, s[i], i);
    }
    CHECK(h == oracles::poly_hash(s, ctx.prime(), ctx.point()));
}

TEST_CASE("concatenation identity and associativity") {
    const auto ctx = HashContext::make(96, 9);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Letter> a(rng() % 32), b(rng() % 32), c(rng() % 32);
        for (auto* v : {&a, &b, &c}) {
            for (auto& x : *v) x = rng() % 50;
        }
        std::vector<Letter> ab(a), abc;
        ab.insert(ab.end(), b.begin(), b.end());
        abc = ab;
        abc.insert(abc.end(), c.begin(), c.end());
        std::vector<Letter> bc(b);
        bc.insert(bc.end(), c.begin(), c.end());

        const auto ha = ctx.hash_string(a), hb = ctx.hash_string(b), hc = ctx.hash_string(c);
        CHECK(ctx.combine(ha, hb, a.size()) == ctx.hash_string(ab));
        const auto left = ctx.combine(ctx.combine(ha, hb, a.size()), hc, a.size() + b.size());
        const auto right = ctx.combine(ha, ctx.combine(hb, hc, b.size()), a.size());
        CHECK(left == right);
        CHECK(left == ctx.hash_string(abc));
    }
}

TEST_CASE("no collisions among random distinct strings") {
    const auto ctx = HashContext::make(64, 2024);
    std::mt19937_64 rng(99);
    int collisions = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Letter> s(64), q;
        for (auto& x : s) x = rng() % 2;
        q = s;
        q[rng() % 64] ^= 1;
        collisions += ctx.hash_string(s) == ctx.hash_string(q);
    }
    CHECK(collisions == 0);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(HashContext(100, 3, 4), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(HashContext(101, 101, 4), std::invalid_argument);
    CHECK_THROWS_AS(HashContext(101, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(HashContext::make(HashContext::kMaxLength + 1, 0), std::invalid_argument);
    CHECK(shifttree::is_prime(HashContext::kMersenne61));
    CHECK(!shifttree::is_prime((std::uint64_t{1} << 61) + 1));
    CHECK(shifttree::is_prime(101));
    CHECK(!shifttree::is_prime(1));
}
