#include "acns/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace acns {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string snap_name(long n, const char* ext) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fields_%06ld.%s", n, ext);
    return buf;
}

}  // namespace

RunConfig converge_level_config(SchemeKind scheme, int level) {
    RunConfig c;
    c.lx = c.ly = 1.0;
    c.nx = c.ny = 20 << (level - 1);
    c.dt = 0.01 / (1 << (level - 1));
    c.t_end = 0.1;
    c.eta = 0.1;
    c.lambda = 1e-4;
    c.mobility = 10.0;
    c.nu = 0.8;
    c.scheme = scheme;
    c.alpha = 1.0;
    c.beta = 0.25;
    c.init_kind = "cosine";
    c.stokes_velocity = true;
    c.tol = 1e-10;
    c.maxit = 5000;  // the tight tolerance needs more than the size default
    return c;
}

ConvergeResult experiment_converge(SchemeKind scheme, int levels,
                                   const std::string& out_dir) {
    if (levels < 2)
        throw std::invalid_argument("experiment_converge: need at least 2 levels");
    std::vector<State> finals;
    for (int l = 1; l <= levels; ++l) {
        RunConfig c = converge_level_config(scheme, l);
        State init = make_initial_state(c.build_initial_phi(), c.params(), true,
                                        c.solve_opts());
        RunResult rr = run_scheme(c.scheme, init, c.params(), c.n_steps(),
                                  c.solve_opts());
        finals.push_back(rr.final_);
    }
    ConvergeResult out;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int l = 0; l + 1 < levels; ++l) {
        ConvergeRow row;
        row.level = l + 1;
        row.d_phi = cauchy_difference(finals[l], finals[l + 1], CauchyKind::grad_phi);
        row.d_u = cauchy_difference(finals[l], finals[l + 1], CauchyKind::grad_u);
        row.d_p = cauchy_difference(finals[l], finals[l + 1], CauchyKind::p_l2);
        if (l == 0) {
            row.rate_phi = row.rate_u = row.rate_p = nan;
        } else {
            const ConvergeRow& prev = out.rows.back();
            row.rate_phi = cauchy_rate(prev.d_phi, row.d_phi);
            row.rate_u = cauchy_rate(prev.d_u, row.d_u);
            row.rate_p = cauchy_rate(prev.d_p, row.d_p);
        }
        out.rows.push_back(row);
    }
    if (!out_dir.empty()) {
        ensure_dir(out_dir);
        std::ofstream f(out_dir + "/rates.csv");
        f.precision(17);
        f << "level,dphi,rate_phi,du,rate_u,dp,rate_p\n";
        for (const auto& r : out.rows)
            f << r.level << "," << r.d_phi << "," << r.rate_phi << "," << r.d_u
              << "," << r.rate_u << "," << r.d_p << "," << r.rate_p << "\n";
        f.close();
        Manifest man;
        man.config_text = serialize_config(converge_level_config(scheme, 1));
        man.notes.push_back(
            "refinement protocol interprets the domain as the unit square "
            "[0,1]^2 (zero-flux compatible cosine data)");
        man.files.push_back("rates.csv");
        man.write(out_dir);
    }
    return out;
}

ExperimentResult run_experiment(const RunConfig& cfg, const std::string& out_dir,
                                const std::vector<double>& snapshot_times,
                                int component_every,
                                const std::vector<std::string>& notes) {
    cfg.validate();
    const long nsteps = cfg.n_steps();

    std::set<long> snap_steps;
    if (!out_dir.empty()) {
        snap_steps.insert(0);
        snap_steps.insert(nsteps);
        if (cfg.output_every > 0)
            for (long k = 0; k <= nsteps; k += cfg.output_every) snap_steps.insert(k);
        for (double ts : snapshot_times) {
            long k = std::lround(ts / cfg.dt);
            if (k < 0 || k > nsteps || std::abs(k * cfg.dt - ts) > 0.5 * cfg.dt)
                throw std::invalid_argument("snapshot time not reachable: " +
                                            std::to_string(ts));
            snap_steps.insert(k);
        }
    }

    ExperimentResult out;
    // component tracking of the upper-phase region: threshold at the midline
    // between the two far-field values of the bubble profile
    bool track = cfg.init_kind == "bubbles";
    out.component_threshold =
        track ? 2.0 - static_cast<double>(cfg.bubbles.size()) : 0.0;

    if (!out_dir.empty()) ensure_dir(out_dir);
    std::vector<std::string> files;

    RunCallbacks cb;
    cb.on_level = [&](const State& s, const DiagnosticsRow&) {
        if (!out_dir.empty() && snap_steps.count(s.n)) {
            if (cfg.format_csv) {
                std::string nm = snap_name(s.n, "csv");
                write_fields_csv(out_dir + "/" + nm, s);
                files.push_back(nm);
            }
            if (cfg.format_vtk) {
                std::string nm = snap_name(s.n, "vtk");
                write_fields_vtk(out_dir + "/" + nm, s);
                files.push_back(nm);
            }
        }
        if (track && (s.n == 0 || s.n == nsteps ||
                      (component_every > 0 && s.n % component_every == 0))) {
            ComponentsRow row;
            row.n = s.n;
            row.t = s.t;
            row.metrics = region_metrics(s.phi, out.component_threshold);
            out.components.push_back(row);
        }
    };

    State init = make_initial_state(cfg.build_initial_phi(), cfg.params(),
                                    cfg.stokes_velocity, cfg.solve_opts());
    out.run = run_scheme(cfg.scheme, init, cfg.params(), nsteps, cfg.solve_opts(), cb);

    if (!out_dir.empty()) {
        write_energy_csv(out_dir + "/energy.csv", out.run.rows);
        files.push_back("energy.csv");
        write_energy_dw_csv(out_dir + "/energy_dw.csv", out.run.rows);
        files.push_back("energy_dw.csv");
        if (track) {
            std::ofstream f(out_dir + "/components.csv");
            f.precision(17);
            f << "n,t,components,area,perimeter,isoperimetric\n";
            for (const auto& r : out.components)
                f << r.n << "," << r.t << "," << r.metrics.components << ","
                  << r.metrics.area << "," << r.metrics.perimeter << ","
                  << r.metrics.isoperimetric << "\n";
            files.push_back("components.csv");
        }
        Manifest man;
        man.config_text = serialize_config(cfg);
        man.notes = notes;
        man.files = files;
        man.write(out_dir);
    }
    return out;
}

RunConfig preset_spinodal() {
    RunConfig c;
    c.lx = c.ly = 2.0 * kPi;
    c.nx = c.ny = 80;
    c.dt = 0.01;
    c.t_end = 5.0;
    c.eta = 0.1;
    c.lambda = 0.01;
    c.mobility = 100.0;
    c.nu = 1.0;
    c.init_kind = "spinodal";
    c.seed = 1;
    c.mean = 0.0;
    c.amplitude = 0.001;
    c.tol = 1e-8;
    return c;
}

RunConfig preset_bubble_shrink() {
    RunConfig c;
    c.lx = c.ly = 2.0 * kPi;
    c.nx = c.ny = 192;
    c.dt = 0.025;
    c.t_end = 1.4;
    c.eta = 0.04;
    c.lambda = 0.01;
    c.mobility = 10.0;
    c.nu = 1.0;
    c.init_kind = "bubbles";
    c.bubbles = {{kPi - 0.8, kPi, 1.4, 1.5}, {kPi + 1.7, kPi, 0.5, 1.5}};
    c.tol = 1e-8;
    return c;
}

RunConfig preset_relax() {
    RunConfig c;
    c.lx = c.ly = 1.5;
    c.nx = c.ny = 128;
    c.dt = 0.005;
    c.t_end = 0.9;
    c.eta = 0.02;
    c.lambda = 0.01;
    c.mobility = 10.0;
    c.nu = 1.0;
    c.init_kind = "bubbles";
    c.bubbles = {{0.5, 0.75, 0.25, 1.0}, {1.0, 0.75, 0.25, 1.0}};
    c.tol = 1e-8;
    return c;
}

double BenchResult::mean_seconds(int scheme, int case_idx) const {
    const auto& v = sec[scheme][case_idx];
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / v.size();
}

BenchResult experiment_bench(const std::string& out_dir, int repeats,
                             double time_scale) {
    BenchResult out;
    std::vector<BenchCase> cases;
    {
        BenchCase a{"spinodal", preset_spinodal()};
        a.base.t_end *= time_scale;
        BenchCase b{"relax", preset_relax()};
        b.base.nx = b.base.ny = 80;  // reference mesh of the timing table
        b.base.t_end *= time_scale;
        cases = {a, b};
    }
    const SchemeKind schemes[3] = {SchemeKind::cnlfac, SchemeKind::acsav,
                                   SchemeKind::acsav_ect};
    for (int s = 0; s < 3; ++s) out.sec[s].assign(cases.size(), {});
    for (size_t ci = 0; ci < cases.size(); ++ci) {
        out.cases.push_back(cases[ci].name);
        for (int rep = 0; rep < repeats; ++rep)
            for (int s = 0; s < 3; ++s) {
                RunConfig c = cases[ci].base;
                c.scheme = schemes[s];
                State init = make_initial_state(c.build_initial_phi(), c.params(),
                                                false, c.solve_opts());
                auto t0 = std::chrono::steady_clock::now();
                run_scheme(c.scheme, init, c.params(), c.n_steps(), c.solve_opts());
                double secs = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
                out.sec[s][ci].push_back(secs);
            }
    }
    if (!out_dir.empty()) {
        ensure_dir(out_dir);
        std::ofstream f(out_dir + "/bench.csv");
        f.precision(6);
        f << "config,scheme,repeat,seconds,pct_vs_cnlfac\n";
        for (size_t ci = 0; ci < cases.size(); ++ci)
            for (int s = 0; s < 3; ++s)
                for (int rep = 0; rep < repeats; ++rep) {
                    double ref = out.sec[0][ci][rep];
                    f << cases[ci].name << "," << scheme_name(schemes[s]) << ","
                      << rep << "," << out.sec[s][ci][rep] << ","
                      << 100.0 * out.sec[s][ci][rep] / ref << "\n";
                }
        f.close();
        Manifest man;
        man.config_text = serialize_config(cases[0].base);
        man.files.push_back("bench.csv");
        man.write(out_dir);
    }
    return out;
}

}  // namespace acns
