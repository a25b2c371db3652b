// Batch front end: builds the configured algebra, computes and factors the
// graded traces, runs the requested verification level and emits the
// reports. Subcommands:
//   run     full pipeline from a config file
//   verify  like run, but forces the full check suite and prints verdicts
//   toy     graded conjugation characters of a catalog group with the
//           predicted product shapes

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "nichols/conjchar.hpp"
#include "nichols/runner.hpp"

using namespace nichols;

namespace {

int do_run(const std::string& config_path, const RunOptions& opts, bool print_rows) {
    RunConfig cfg = RunConfig::parse_file(config_path);
    RunResult res = run_config(cfg, opts);
    std::cout << res.title << "\n";
    std::cout << "layer dimensions: " << ipoly_str(res.dims) << "\n";
    if (res.complete)
        std::cout << "dimension " << res.dimension << ", top degree " << res.top_degree << "\n";
    for (const auto& note : res.notes)
        std::cout << "note: " << note << "\n";
    if (print_rows)
        for (const auto& row : res.rows)
            std::cout << "  tr_" << row.label << " = " << row.factorization.str() << "\n";
    int failures = 0;
    for (const auto& [name, pass] : res.checks) {
        if (!pass)
            ++failures;
        std::cout << (pass ? "pass" : "FAIL") << "  " << name << "\n";
    }
    if (!opts.out_dir.empty())
        std::cout << "reports written to " << opts.out_dir << "\n";
    return failures ? 1 : 0;
}

int do_toy(const std::string& group_name) {
    const CatalogEntry& cat = catalog(group_name);
    AbelianDecomposition dec = abelianization(cat.group);
    std::cout << group_name << ": abelian quotient of orders";
    for (int n : dec.orders)
        std::cout << " " << n;
    std::cout << "\n";
    int failures = 0;
    for (int g : cat.group.class_representatives()) {
        IntPoly chi = conj_graded_character(cat.group, dec, g);
        ToyPrediction pred = toy_prediction(cat.group, dec, g);
        bool match = pred.expand() == chi;
        if (!match)
            ++failures;
        std::cout << "  " << cat.group.element_name(g) << ": " << ipoly_str(chi) << " = "
                  << pred.str() << (match ? "" : "  MISMATCH") << "\n";
    }
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded traces of Nichols algebras of group type"};
    app.require_subcommand(1);

    std::string config_path, out_dir, group_name;
    unsigned threads = 1;
    bool no_cache = false;
    std::string verify_level;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "run configuration file")->required();
        cmd->add_option("--out", out_dir, "output directory for reports and cache");
        cmd->add_option("--threads", threads, "worker threads for layer construction");
        cmd->add_flag("--no-cache", no_cache, "ignore and do not write layer caches");
    };

    CLI::App* run = app.add_subcommand("run", "build, trace, factor and report");
    add_common(run);
    run->add_option("--verify-level", verify_level, "override the config verify level")
        ->check(CLI::IsMember({"fast", "full"}));

    CLI::App* verify = app.add_subcommand("verify", "run with the full check suite");
    add_common(verify);

    CLI::App* toy = app.add_subcommand("toy", "conjugation characters of a catalog group");
    toy->add_option("--group", group_name, "catalog group name");
    toy->add_option("--config", config_path, "config whose [group] section names the group");

    CLI11_PARSE(app, argc, argv);

    try {
        if (toy->parsed()) {
            if (group_name.empty()) {
                if (config_path.empty())
                    throw engine_error("toy needs --group or --config");
                group_name = RunConfig::parse_file(config_path).group_catalog;
            }
            return do_toy(group_name);
        }
        RunOptions opts;
        opts.out_dir = out_dir;
        opts.threads = threads;
        opts.use_cache = !no_cache;
        if (verify->parsed())
            opts.verify_override = "full";
        else
            opts.verify_override = verify_level;
        opts.progress = true;
        return do_run(config_path, opts, true);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
