// Command-line front end.  Subcommands:
//   star         emit the extracted star-product table C_0..C_N
//   verify       run residual verification suites; exit 0 iff all pass
//   class        emit the characteristic class, its hbar-derivative, and
//                the declared-class projection of the derivative
//   examples     list the shipped example names
//   emit-config  dump a shipped example as a canonical config document
//
// All output is deterministic JSON: the same config and seed produce the
// same bytes.  Exit codes: 0 success, 1 verification failure, 2 config or
// usage errors.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "verify.hpp"

namespace {

using fedosov::cli::Json;
using fedosov::cli::RunConfig;

struct Flags {
    std::string example;
    std::string config;
    std::string suite = "all";
    std::string out;
    int order = 0;
    int degree_cap = 0;
    int laurent_floor = 0;
    int test_degree = 0;
    std::uint64_t seed = 0;
};

void add_common_options(CLI::App* cmd, Flags& f, bool with_suite) {
    cmd->add_option("--example", f.example, "name of a shipped example");
    cmd->add_option("--config", f.config, "path to a JSON config file");
    cmd->add_option("--order", f.order, "star-product table order N");
    cmd->add_option("--degree-cap", f.degree_cap,
                    "truncation degree cap (2k + |alpha|)");
    cmd->add_option("--laurent-floor", f.laurent_floor,
                    "lowest tracked hbar exponent (<= 0)");
    cmd->add_option("--test-degree", f.test_degree,
                    "max polynomial degree for sweeps");
    cmd->add_option("--seed", f.seed, "seed for randomized residual probes");
    cmd->add_option("--out", f.out, "write JSON here instead of stdout");
    if (with_suite)
        cmd->add_option("--suite", f.suite,
                        "fedosov|hochschild|dk0|liouville|lemmas|all");
}

RunConfig make_config(const CLI::App* cmd, const Flags& f) {
    if (!f.example.empty() && !f.config.empty())
        throw std::invalid_argument("give either --example or --config");
    RunConfig cfg;
    if (!f.config.empty()) {
        cfg = fedosov::cli::load_config_file(f.config);
    } else if (!f.example.empty()) {
        cfg.example = f.example;
    } else {
        throw std::invalid_argument("one of --example or --config is required");
    }
    if (cmd->count("--order")) cfg.order = f.order;
    if (cmd->count("--degree-cap")) cfg.degree_cap = f.degree_cap;
    if (cmd->count("--laurent-floor")) cfg.laurent_floor = f.laurent_floor;
    if (cmd->count("--test-degree")) cfg.test_degree = f.test_degree;
    if (cmd->count("--seed")) cfg.seed = f.seed;
    if (cmd->count("--out")) cfg.out = f.out;
    return cfg;
}

int emit(const Json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact star-product tables and residual verification"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* cmd_star = app.add_subcommand("star", "emit the star-product table");
    add_common_options(cmd_star, f, false);
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run residual verification suites");
    add_common_options(cmd_verify, f, true);
    CLI::App* cmd_class =
        app.add_subcommand("class", "emit the characteristic class report");
    add_common_options(cmd_class, f, false);
    CLI::App* cmd_examples =
        app.add_subcommand("examples", "list shipped example names");
    std::string emit_out;
    CLI::App* cmd_emit =
        app.add_subcommand("emit-config", "dump a shipped example as a config");
    std::string emit_example;
    cmd_emit->add_option("--example", emit_example, "name of a shipped example")
        ->required();
    cmd_emit->add_option("--out", emit_out, "write JSON here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_examples->parsed()) {
            Json out = Json::object();
            out["command"] = "examples";
            Json names = Json::array();
            for (const std::string& n : fedosov::builtin_names())
                names.push_back(n);
            out["examples"] = std::move(names);
            return emit(out, "");
        }
        if (cmd_emit->parsed()) {
            const RunConfig cfg = fedosov::cli::builtin_config(emit_example);
            return emit(fedosov::cli::config_to_json(cfg), emit_out);
        }
        if (cmd_star->parsed()) {
            const RunConfig cfg = make_config(cmd_star, f);
            return emit(fedosov::cli::run_star(cfg), cfg.out);
        }
        if (cmd_class->parsed()) {
            const RunConfig cfg = make_config(cmd_class, f);
            return emit(fedosov::cli::run_class(cfg), cfg.out);
        }
        if (cmd_verify->parsed()) {
            const RunConfig cfg = make_config(cmd_verify, f);
            const fedosov::cli::VerifyOutcome outcome =
                fedosov::cli::run_verify(cfg, f.suite);
            const int io = emit(outcome.report, cfg.out);
            if (io != 0) return io;
            return outcome.ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        Json err = Json::object();
        err["error"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
    return 2;
}
