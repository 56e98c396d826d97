// msss: modular subset sum over Z_m via shift-trees.
//
//   msss --modulus 5 < values.txt
//   msss --modulus 4096 --backend hashed --seed 7 --mode stats --input values.txt
//   msss --bench 4096,8192,16384 --backend tagged

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "shifttree/cli.hpp"

namespace cli = shifttree::cli;

int main(int argc, char** argv) {
    CLI::App app{"Modular subset sum: lists every residue attainable as a subset sum mod m"};

    cli::RunConfig config;
    std::size_t modulus = 0;
    std::string backend = "tagged";
    std::string mode = "list";
    std::string input;
    std::uint64_t seed = 0;

    auto* modulus_opt = app.add_option("--modulus,-m", modulus, "Modulus m (required unless --bench)");
    app.add_option("--backend,-b", backend, "hashed | tagged | naive")
        ->check(CLI::IsMember({"hashed", "tagged", "naive"}));
    auto* seed_opt = app.add_option("--seed,-s", seed, "Random seed for the hashed backend (or MSSS_SEED)");
    app.add_option("--mode", mode, "list | count | stats")->check(CLI::IsMember({"list", "count", "stats"}));
    app.add_option("--input,-i", input, "Instance file (default: standard input)");
    app.add_option("--bench", config.bench_sizes, "Comma-separated moduli to benchmark")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitUsage;
    }

    config.backend = *cli::parse_backend(backend);
    config.mode = *cli::parse_mode(mode);
    if (seed_opt->count() > 0) config.seed = seed;

    if (!config.bench_sizes.empty()) {
        return cli::bench(config, std::cout, std::cerr);
    }
    if (modulus_opt->count() > 0) config.modulus = modulus;

    if (!input.empty()) {
        std::ifstream file(input);
        if (!file) {
            std::cerr << "error: cannot open " << input << '\n';
            return cli::kExitUsage;
        }
        config.input_path = input;
        return cli::run(config, file, std::cout, std::cerr);
    }
    return cli::run(config, std::cin, std::cout, std::cerr);
}
