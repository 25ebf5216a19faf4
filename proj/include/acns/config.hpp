// Flat dotted-key run configuration, e.g. `model.eta = 0.04`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acns/init.hpp"
#include "acns/params.hpp"
#include "acns/schemes.hpp"

namespace acns {

struct RunConfig {
    // domain / grid
    double lx = 1.0, ly = 1.0;
    int nx = 64, ny = 64;
    // time
    double dt = 0.01;
    double t_end = 1.0;
    int output_every = 0;  // snapshot cadence in steps; 0 = first/last only
    // model
    double eta = 0.1, lambda = 0.01, mobility = 1.0, nu = 1.0;
    // scheme
    SchemeKind scheme = SchemeKind::acsav;
    double alpha = 1.0, beta = 0.25;
    // init
    std::string init_kind = "spinodal";  // cosine | spinodal | bubbles
    std::uint64_t seed = 1;
    double mean = 0.0;
    double amplitude = 0.001;
    std::vector<Bubble> bubbles;
    bool stokes_velocity = false;  // initialize u,p from the Stokes balance
    // solver
    double tol = 1e-8;
    int maxit = 0;  // 0 = problem-size default
    // output
    std::string out_dir = "out";
    bool format_csv = true;
    bool format_vtk = false;

    long n_steps() const { return std::lround(t_end / dt); }
    Grid grid() const { return Grid(nx, ny, lx, ly); }
    ModelParams params() const {
        ModelParams mp;
        mp.eta = eta;
        mp.lambda = lambda;
        mp.mobility = mobility;
        mp.nu = nu;
        mp.alpha = alpha;
        mp.beta = beta;
        mp.dt = dt;
        mp.t_final = t_end;
        return mp;
    }
    SolveOpts solve_opts() const {
        SolveOpts so;
        so.tol = tol;
        so.maxit = maxit;
        return so;
    }
    void validate() const;

    ScalarField build_initial_phi() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize_config(const RunConfig& c);

bool operator==(const RunConfig& a, const RunConfig& b);

}  // namespace acns
