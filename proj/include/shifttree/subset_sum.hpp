#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace shifttree {

/// Multiset over Z_m in compact form: mult[x] copies of residue x.
class Instance {
public:
    /// Empty multiset; throws if m == 0.
    explicit Instance(std::size_t modulus);
    /// Throws if m == 0 or the table length differs from m.
    Instance(std::size_t modulus, std::vector<std::uint64_t> multiplicities);

    /// Builds the table from raw values, reducing each modulo m.
    static Instance from_values(std::size_t modulus, std::span<const std::int64_t> values);

    void add(std::int64_t value, std::uint64_t count = 1);

    std::size_t modulus() const noexcept { return mult_.size(); }
    std::uint64_t multiplicity(std::size_t residue) const { return mult_.at(residue); }
    const std::vector<std::uint64_t>& multiplicities() const noexcept { return mult_; }

private:
    std::vector<std::uint64_t> mult_;
};

/// Attainable residues, as a membership table plus insertion order.
class SumSet {
public:
    /// {0} over Z_m.
    explicit SumSet(std::size_t modulus);

    bool contains(std::size_t residue) const { return member_.at(residue) != 0; }
    /// Returns false if the residue was already present.
    bool insert(std::size_t residue);

    std::size_t size() const noexcept { return order_.size(); }
    std::size_t modulus() const noexcept { return member_.size(); }
    const std::vector<std::size_t>& insertion_order() const noexcept { return order_; }
    std::vector<std::size_t> sorted() const;

    friend bool operator==(const SumSet& a, const SumSet& b) { return a.member_ == b.member_; }

private:
    std::vector<std::uint8_t> member_;
    std::vector<std::size_t> order_;
};

enum class Backend { hashed, tagged };

std::string_view to_string(Backend backend) noexcept;

struct SolveStats {
    std::uint64_t updates = 0;               // inner-node updates, both trees, init included
    std::uint64_t diff_visits = 0;
    std::uint64_t store_ops = 0;             // tagged backend only
    std::uint64_t bellman_iterations = 0;    // diff calls
    std::uint64_t reported_differences = 0;  // total size of all diff outputs
    std::uint64_t shifts = 0;
};

/// Solver state exposed to a probe after each processed shift.
struct SolverProbe {
    std::size_t shift;  // current shift x of the second tree
    std::size_t padded_length;
    const SumSet& sums;
    std::function<std::vector<std::uint8_t>()> first_string;   // materialized first tree
    std::function<std::vector<std::uint8_t>()> second_string;  // materialized second tree
};

struct SolveOptions {
    Backend backend = Backend::tagged;
    std::uint64_t seed = 0;  // hashed backend only
    std::function<void(const SolverProbe&)> probe;
};

/// Raised when a diff result is inconsistent with the current sum set, which
/// for the hashed backend means a hash collision occurred.
class CollisionDetected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All residues t such that some sub-multiset sums to t mod m, in
/// O(m log m) time (hashed) or O(m log m alpha(m)) (tagged).
SumSet solve(const Instance& inst, const SolveOptions& options = {}, SolveStats* stats = nullptr);

/// Bellman recurrence S <- S u (S + x) on a membership table, O(m^2) worst case.
SumSet solve_naive(const Instance& inst, SolveStats* stats = nullptr);

/// Smallest power of two >= 2m.
std::size_t padded_length(std::size_t modulus) noexcept;

}  // namespace shifttree
