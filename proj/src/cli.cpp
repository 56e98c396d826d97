#include "shifttree/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

namespace shifttree::cli {

namespace {

template <class T>
std::optional<T> parse_number(std::string_view token) {
    T value{};
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

void print_stats(const SolveStats& stats, std::size_t sums, std::ostream& err) {
    err << "sums=" << sums << '\n'
        << "updates=" << stats.updates << '\n'
        << "diff_visits=" << stats.diff_visits << '\n'
        << "store_ops=" << stats.store_ops << '\n'
        << "bellman_iterations=" << stats.bellman_iterations << '\n'
        << "reported_differences=" << stats.reported_differences << '\n'
        << "shifts=" << stats.shifts << '\n';
}

SumSet dispatch(const Instance& inst, BackendChoice backend, std::uint64_t seed, SolveStats& stats) {
    switch (backend) {
        case BackendChoice::naive:
            return solve_naive(inst, &stats);
        case BackendChoice::hashed:
            return solve(inst, SolveOptions{Backend::hashed, seed, {}}, &stats);
        case BackendChoice::tagged:
            break;
    }
    return solve(inst, SolveOptions{Backend::tagged, seed, {}}, &stats);
}

}  // namespace

Instance parse_instance(std::string_view text, std::size_t modulus) {
    if (modulus == 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    Instance inst(modulus);
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = split_whitespace(line);
        if (tokens.empty()) continue;
        if (tokens.size() > 2) {
            throw ParseError(line_no, "expected \"value\" or \"value multiplicity\"");
        }
        const auto value = parse_number<std::int64_t>(tokens[0]);
        if (!value) {
            throw ParseError(line_no, "not an integer: '" + std::string(tokens[0]) + "'");
        }
        std::uint64_t count = 1;
        if (tokens.size() == 2) {
            const auto mult = parse_number<std::int64_t>(tokens[1]);
            if (!mult) {
                throw ParseError(line_no, "not an integer: '" + std::string(tokens[1]) + "'");
            }
            if (*mult < 0) {
                throw ParseError(line_no, "negative multiplicity");
            }
            count = static_cast<std::uint64_t>(*mult);
        }
        inst.add(*value, count);
    }
    return inst;
}

std::optional<BackendChoice> parse_backend(std::string_view name) {
    if (name == "hashed") return BackendChoice::hashed;
    if (name == "tagged") return BackendChoice::tagged;
    if (name == "naive") return BackendChoice::naive;
    return std::nullopt;
}

std::optional<OutputMode> parse_mode(std::string_view name) {
    if (name == "list") return OutputMode::list;
    if (name == "count") return OutputMode::count;
    if (name == "stats") return OutputMode::stats;
    return std::nullopt;
}

std::string_view to_string(BackendChoice backend) noexcept {
    switch (backend) {
        case BackendChoice::hashed:
            return "hashed";
        case BackendChoice::tagged:
            return "tagged";
        case BackendChoice::naive:
            return "naive";
    }
    return "unknown";
}

std::optional<std::uint64_t> seed_from_environment() {
    const char* raw = std::getenv("MSSS_SEED");
    if (raw == nullptr) return std::nullopt;
    return parse_number<std::uint64_t>(raw);
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    if (!config.modulus || *config.modulus == 0) {
        err << "error: a positive --modulus is required\n";
        return kExitUsage;
    }
    if (config.seed && config.backend != BackendChoice::hashed) {
        err << "warning: --seed is ignored by the " << to_string(config.backend) << " backend\n";
    }
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};

    try {
        const Instance inst = parse_instance(text, *config.modulus);
        std::uint64_t seed = 0;
        if (config.backend == BackendChoice::hashed) {
            seed = config.seed.value_or(seed_from_environment().value_or(std::random_device{}()));
        }
        SolveStats stats;
        const SumSet sums = dispatch(inst, config.backend, seed, stats);
        if (config.mode == OutputMode::count) {
            out << sums.size() << '\n';
        } else {
            for (std::size_t r : sums.sorted()) out << r << '\n';
        }
        if (config.mode == OutputMode::stats) {
            print_stats(stats, sums.size(), err);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CollisionDetected& e) {
        err << "error: " << e.what() << " (hash collision)\n";
        return kExitCollision;
    }
    return kExitOk;
}

Instance random_dense_instance(std::size_t modulus, std::uint64_t seed) {
    Instance inst(modulus);
    std::mt19937_64 rng(seed ^ (modulus * 0x9E3779B97F4A7C15ull));
    std::uniform_int_distribution<std::int64_t> draw(0, static_cast<std::int64_t>(modulus) - 1);
    const std::size_t count = std::max<std::size_t>(1, modulus / 2);
    for (std::size_t i = 0; i < count; ++i) {
        inst.add(draw(rng));
    }
    return inst;
}

BenchRow bench_one(std::size_t modulus, BackendChoice backend, std::uint64_t seed) {
    const Instance inst = random_dense_instance(modulus, seed);
    SolveStats stats;
    const auto start = std::chrono::steady_clock::now();
    dispatch(inst, backend, seed, stats);
    const auto stop = std::chrono::steady_clock::now();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    return BenchRow{modulus, backend, static_cast<std::uint64_t>(ns), stats};
}

int bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.bench_sizes.empty()) {
        err << "error: --bench needs at least one size\n";
        return kExitUsage;
    }
    for (std::size_t m : config.bench_sizes) {
        if (m == 0) {
            err << "error: bench sizes must be positive\n";
            return kExitUsage;
        }
    }
    const std::uint64_t seed = config.seed.value_or(seed_from_environment().value_or(1));
    out << "m,backend,wall_ns,updates,diff_visits,store_ops\n";
    try {
        for (std::size_t m : config.bench_sizes) {
            const BenchRow row = bench_one(m, config.backend, seed);
            out << row.modulus << ',' << to_string(row.backend) << ',' << row.wall_ns << ',' << row.stats.updates
                << ',' << row.stats.diff_visits << ',' << row.stats.store_ops << '\n';
        }
    } catch (const CollisionDetected& e) {
        err << "error: " << e.what() << " (hash collision)\n";
        return kExitCollision;
    }
    return kExitOk;
}

}  // namespace shifttree::cli
