// Experiment drivers: refinement/convergence study, dynamics runs with file
// output and shape tracking, and the scheme timing comparison.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "acns/components.hpp"
#include "acns/config.hpp"
#include "acns/io.hpp"
#include "acns/runner.hpp"

namespace acns {

// ---- §: refinement protocol over nested grids -----------------------------

struct ConvergeRow {
    int level = 0;     // comparison index: level l vs l+1
    double d_phi = 0, rate_phi = 0;
    double d_u = 0, rate_u = 0;
    double d_p = 0, rate_p = 0;
};

struct ConvergeResult {
    std::vector<ConvergeRow> rows;  // rates are NaN on the first row
};

// Base configuration of the convergence protocol at refinement level l
// (1-based): unit square, cosine initial data, Stokes-balanced velocity,
// nx = 20 * 2^(l-1), dt = 0.01 / 2^(l-1), run to t = 0.1.
RunConfig converge_level_config(SchemeKind scheme, int level);

ConvergeResult experiment_converge(SchemeKind scheme, int levels,
                                   const std::string& out_dir = "");

// ---- dynamics runs ---------------------------------------------------------

struct ComponentsRow {
    long n = 0;
    double t = 0;
    RegionMetrics metrics;
};

struct ExperimentResult {
    RunResult run;
    std::vector<ComponentsRow> components;
    double component_threshold = 0.0;
};

// Runs the configured scheme, writing energy.csv (+ energy_dw.csv), field
// snapshots at output_every cadence and at snapshot_times, components.csv for
// bubble initial data, and the manifest. out_dir empty = no files.
ExperimentResult run_experiment(const RunConfig& cfg, const std::string& out_dir,
                                const std::vector<double>& snapshot_times = {},
                                int component_every = 0,
                                const std::vector<std::string>& notes = {});

RunConfig preset_spinodal();       // phase separation from seeded noise
RunConfig preset_bubble_shrink();  // large + small bubble, small one absorbed
RunConfig preset_relax();          // two kissing bubbles merging and rounding

// ---- timing comparison ------------------------------------------------------

struct BenchCase {
    std::string name;
    RunConfig base;
};

struct BenchResult {
    std::vector<std::string> cases;                       // per case
    std::array<std::vector<std::vector<double>>, 3> sec;  // [scheme][case][repeat]
    // scheme order: cnlfac, acsav, acsav-ect
    double mean_seconds(int scheme, int case_idx) const;
};

// Times the three schemes on the two dynamics configurations at the reference
// mesh (h = L/80). time_scale < 1 shortens t_end proportionally.
BenchResult experiment_bench(const std::string& out_dir, int repeats = 1,
                             double time_scale = 1.0);

}  // namespace acns
