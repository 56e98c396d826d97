#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shifttree/subset_sum.hpp"

namespace shifttree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCollision = 3;

enum class BackendChoice { hashed, tagged, naive };
enum class OutputMode { list, count, stats };

struct RunConfig {
    std::optional<std::size_t> modulus;
    std::optional<std::string> input_path;  // standard input when empty
    BackendChoice backend = BackendChoice::tagged;
    std::optional<std::uint64_t> seed;
    OutputMode mode = OutputMode::list;
    std::vector<std::size_t> bench_sizes;
};

/// Error in instance text, carrying the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// One entry per line, "x" or "x mult"; blank lines and '#' comments ignored.
/// Values are reduced modulo m, multiplicities of repeated values add up.
Instance parse_instance(std::string_view text, std::size_t modulus);

std::optional<BackendChoice> parse_backend(std::string_view name);
std::optional<OutputMode> parse_mode(std::string_view name);
std::string_view to_string(BackendChoice backend) noexcept;

/// Seed from the MSSS_SEED environment variable, if set and numeric.
std::optional<std::uint64_t> seed_from_environment();

/// Solves the instance read from `in` and writes the result. Returns the
/// process exit code.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Sweeps config.bench_sizes on seeded random instances, one CSV row per size.
int bench(const RunConfig& config, std::ostream& out, std::ostream& err);

struct BenchRow {
    std::size_t modulus;
    BackendChoice backend;
    std::uint64_t wall_ns;
    SolveStats stats;
};

/// Random instance of modulus m with m/2 values drawn uniformly from [0, m).
Instance random_dense_instance(std::size_t modulus, std::uint64_t seed);

BenchRow bench_one(std::size_t modulus, BackendChoice backend, std::uint64_t seed);

}  // namespace shifttree::cli
