// Time-marching driver: bootstraps the extra starting levels each scheme
// needs, then leap-frogs, recording per-level diagnostics and the long-time
// stability bookkeeping.
#pragma once

#include <functional>
#include <limits>

#include "acns/schemes.hpp"

namespace acns {

struct RunCallbacks {
    // called for every accepted time level, including the initial one
    std::function<void(const State&, const DiagnosticsRow&)> on_level;
};

struct RunResult {
    State prev;    // level N-1
    State final_;  // level N
    std::vector<DiagnosticsRow> rows;

    // theorem bookkeeping (leap-frog schemes only)
    double stability_rhs = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> stability_lhs_series;
    double max_lhs = 0.0;
    bool stability_ok = true;

    // auxiliary-scalar health
    double min_A = std::numeric_limits<double>::infinity();
    double max_abs_V_minus_1 = 0.0;
};

// init is the level-0 state (phi, u, p set; q/r filled in here if n == 0).
RunResult run_scheme(SchemeKind kind, const State& init, const ModelParams& mp,
                     long n_steps, const SolveOpts& so = {},
                     const RunCallbacks& cb = {});

// Level-0 state from an initial phase field: q = (phi^2-1)/eta^2, r = 1,
// velocity/pressure zero or from the Stokes balance.
State make_initial_state(const ScalarField& phi0, const ModelParams& mp,
                         bool stokes_velocity, const SolveOpts& so = {});

}  // namespace acns
