#include "shifttree/subset_sum.hpp"

#include <algorithm>
#include <bit>
#include <memory>

#include "shifttree/hashed_shift_tree.hpp"
#include "shifttree/rolling_hash.hpp"
#include "shifttree/schedule.hpp"
#include "shifttree/tag_store.hpp"
#include "shifttree/tagged_shift_tree.hpp"

namespace shifttree {

Instance::Instance(std::size_t modulus) : mult_(modulus, 0) {
    if (modulus == 0) {
        throw std::invalid_argument("Instance: modulus must be positive");
    }
}

Instance::Instance(std::size_t modulus, std::vector<std::uint64_t> multiplicities) : mult_(std::move(multiplicities)) {
    if (modulus == 0) {
        throw std::invalid_argument("Instance: modulus must be positive");
    }
    if (mult_.size() != modulus) {
        throw std::invalid_argument("Instance: multiplicity table length must equal the modulus");
    }
}

Instance Instance::from_values(std::size_t modulus, std::span<const std::int64_t> values) {
    Instance inst(modulus);
    for (std::int64_t v : values) {
        inst.add(v);
    }
    return inst;
}

void Instance::add(std::int64_t value, std::uint64_t count) {
    const auto m = static_cast<std::int64_t>(mult_.size());
    const std::int64_t r = ((value % m) + m) % m;
    mult_[static_cast<std::size_t>(r)] += count;
}

SumSet::SumSet(std::size_t modulus) : member_(modulus, 0) {
    if (modulus == 0) {
        throw std::invalid_argument("SumSet: modulus must be positive");
    }
    insert(0);
}

bool SumSet::insert(std::size_t residue) {
    if (member_.at(residue) != 0) {
        return false;
    }
    member_[residue] = 1;
    order_.push_back(residue);
    return true;
}

std::vector<std::size_t> SumSet::sorted() const {
    std::vector<std::size_t> out = order_;
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view to_string(Backend backend) noexcept {
    switch (backend) {
        case Backend::hashed:
            return "hashed";
        case Backend::tagged:
            return "tagged";
    }
    return "unknown";
}

std::size_t padded_length(std::size_t modulus) noexcept { return std::bit_ceil(2 * modulus); }

namespace {

template <class Tree>
std::vector<std::uint8_t> to_bits(const Tree& tree) {
    std::vector<std::uint8_t> out;
    out.reserve(tree.size());
    for (const auto& letter : tree.materialize()) {
        out.push_back(static_cast<std::uint8_t>(letter));
    }
    return out;
}

/// Bellman iterations driven by the bit-reversal traversal of the shifts of
/// `second`. `first` holds s 0^{L-m}, `second` a cyclic shift of s 0^{L-2m} s.
template <class Tree>
void run_bellman(const Instance& inst, const SolveOptions& options, Tree& first, Tree& second, SumSet& sums,
                 SolveStats& stats) {
    const std::size_t m = inst.modulus();
    const std::size_t length = first.size();
    ShiftSchedule schedule(static_cast<unsigned>(std::countr_zero(length)));

    auto report = [&](std::size_t x) {
        if (options.probe) {
            options.probe(SolverProbe{x, length, sums, [&] { return to_bits(first); }, [&] { return to_bits(second); }});
        }
    };
    report(0);

    while (auto delta = schedule.next_delta()) {
        second.shift(*delta);
        ++stats.shifts;
        const std::size_t x = schedule.current();
        const std::uint64_t count = x < m ? inst.multiplicity(x) : 0;
        for (std::uint64_t j = 0; j < count; ++j) {
            ++stats.bellman_iterations;
            const std::vector<std::size_t> diffs = first.diff(second, 0, m - 1, &stats.diff_visits);
            stats.reported_differences += diffs.size();
            if (diffs.empty()) {
                break;
            }
            std::size_t added = 0;
            for (std::size_t d : diffs) {
                if (!sums.insert(d)) {
                    continue;
                }
                ++added;
                first.set(d, 1);
                second.set((d + x) % length, 1);
                second.set((d + x + length - m) % length, 1);
            }
            // (S + x) and S have equal size, so exactly half of their
            // symmetric difference is new.
            if (2 * added != diffs.size()) {
                throw CollisionDetected("solve: difference set inconsistent with the current sums");
            }
        }
        report(x);
    }
}

template <class LetterT>
std::pair<std::vector<LetterT>, std::vector<LetterT>> initial_strings(std::size_t m, std::size_t length) {
    std::vector<LetterT> first(length, 0);
    std::vector<LetterT> second(length, 0);
    first[0] = 1;
    second[0] = 1;
    second[length - m] = 1;
    return {std::move(first), std::move(second)};
}

}  // namespace

SumSet solve(const Instance& inst, const SolveOptions& options, SolveStats* stats) {
    const std::size_t m = inst.modulus();
    SumSet sums(m);
    SolveStats local;
    if (m == 1) {
        if (stats != nullptr) *stats = local;
        return sums;
    }
    const std::size_t length = padded_length(m);

    if (options.backend == Backend::hashed) {
        auto ctx = std::make_shared<const HashContext>(HashContext::make(length, options.seed));
        auto [s1, s2] = initial_strings<Letter>(m, length);
        HashedShiftTree first(ctx, s1);
        HashedShiftTree second(ctx, s2);
        run_bellman(inst, options, first, second, sums, local);
        local.updates = first.counters().updates + second.counters().updates;
    } else {
        auto store = std::make_shared<TagStore>();
        auto [s1, s2] = initial_strings<std::uint8_t>(m, length);
        TaggedShiftTree<std::uint8_t> first(store, s1);
        TaggedShiftTree<std::uint8_t> second(store, s2);
        run_bellman(inst, options, first, second, sums, local);
        local.updates = first.counters().updates + second.counters().updates;
        local.store_ops = store->stats().operations();
    }
    if (stats != nullptr) *stats = local;
    return sums;
}

SumSet solve_naive(const Instance& inst, SolveStats* stats) {
    const std::size_t m = inst.modulus();
    SumSet sums(m);
    SolveStats local;
    std::vector<std::size_t> fresh;
    for (std::size_t x = 1; x < m; ++x) {
        // Beyond m copies of x nothing new can appear.
        const std::uint64_t copies = std::min<std::uint64_t>(inst.multiplicity(x), m);
        for (std::uint64_t j = 0; j < copies; ++j) {
            ++local.bellman_iterations;
            fresh.clear();
            for (std::size_t a : sums.insertion_order()) {
                const std::size_t b = (a + x) % m;
                if (!sums.contains(b)) fresh.push_back(b);
            }
            if (fresh.empty()) break;
            for (std::size_t b : fresh) sums.insert(b);
        }
    }
    if (stats != nullptr) *stats = local;
    return sums;
}

}  // namespace shifttree
