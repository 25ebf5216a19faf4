// acns command line: single runs, the refinement study, and the scheme
// timing comparison.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "acns/experiments.hpp"
#include "acns/version.hpp"

using namespace acns;

int main(int argc, char** argv) {
    CLI::App app{"acns: two-phase flow solver (phase field + incompressible flow)"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run one configuration");
    std::string cfg_path, run_scheme_opt, run_out;
    std::uint64_t seed = 0;
    bool seed_set = false;
    run->add_option("--config", cfg_path, "config file")->required();
    run->add_option("--scheme", run_scheme_opt,
                    "override scheme: bootstrap|cnlfac|acsav|acsav-ect");
    run->add_option("--out", run_out, "output directory (overrides output.dir)");
    run->add_option("--seed", seed, "override init.seed")
        ->each([&](const std::string&) { seed_set = true; });

    // converge
    auto* conv = app.add_subcommand("converge", "refinement/Cauchy-difference study");
    std::string conv_scheme = "cnlfac", conv_out = "out";
    int levels = 4;
    conv->add_option("--scheme", conv_scheme, "cnlfac|acsav|acsav-ect")->required();
    conv->add_option("--levels", levels, "number of refinement levels");
    conv->add_option("--out", conv_out, "output directory");

    // bench
    auto* bench = app.add_subcommand("bench", "time the three schemes");
    std::string bench_out = "out";
    int repeats = 1;
    double time_scale = 1.0;
    bench->add_option("--out", bench_out, "output directory");
    bench->add_option("--repeats", repeats, "timing repeats per scheme");
    bench->add_option("--time-scale", time_scale, "shorten t_end by this factor");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            RunConfig cfg = load_config(cfg_path);
            if (!run_scheme_opt.empty()) cfg.scheme = scheme_from_name(run_scheme_opt);
            if (seed_set) cfg.seed = seed;
            std::string out = run_out.empty() ? cfg.out_dir : run_out;
            ExperimentResult res = run_experiment(cfg, out);
            const DiagnosticsRow& last = res.run.rows.back();
            std::printf("done: %ld steps to t=%g, W=%.6g (see %s)\n", last.n,
                        last.t, last.W, out.c_str());
        } else if (*conv) {
            ConvergeResult res =
                experiment_converge(scheme_from_name(conv_scheme), levels, conv_out);
            std::printf("level  d_phi        rate   d_u          rate   d_p          rate\n");
            for (const auto& r : res.rows)
                std::printf("%3d    %-12.5g %-6.3g %-12.5g %-6.3g %-12.5g %-6.3g\n",
                            r.level, r.d_phi, r.rate_phi, r.d_u, r.rate_u, r.d_p,
                            r.rate_p);
        } else if (*bench) {
            BenchResult res = experiment_bench(bench_out, repeats, time_scale);
            const char* names[3] = {"cnlfac", "acsav", "acsav-ect"};
            for (size_t ci = 0; ci < res.cases.size(); ++ci) {
                double ref = res.mean_seconds(0, ci);
                std::printf("%s:\n", res.cases[ci].c_str());
                for (int s = 0; s < 3; ++s)
                    std::printf("  %-10s %8.2fs  %5.1f%%\n", names[s],
                                res.mean_seconds(s, ci),
                                100.0 * res.mean_seconds(s, ci) / ref);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
