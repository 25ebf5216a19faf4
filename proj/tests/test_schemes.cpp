#include <doctest.h>

#include <cmath>

#include "acns/init.hpp"
#include "acns/runner.hpp"
#include "acns/schemes.hpp"
#include "scheme_oracles.hpp"
#include "support.hpp"

using namespace acns;
using namespace acns::test;

namespace {

constexpr double kPi = 3.14159265358979323846;

ModelParams small_params() {
    ModelParams mp;
    mp.eta = 0.1;
    mp.lambda = 1e-3;
    mp.mobility = 10.0;
    mp.nu = 0.8;
    mp.alpha = 1.0;
    mp.beta = 0.25;
    mp.dt = 0.01;
    mp.t_final = 0.1;
    return mp;
}

State uniform_state(const Grid& g, const ModelParams& mp, double phi_value) {
    State s(g);
    for (double& v : s.phi.v) v = phi_value;
    s.q = q_of_phi(s.phi, mp.eta);
    return s;
}

// exactly divergence-free field from a boundary-constant stream function
FaceField solenoidal_field(const Grid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-0.3, 0.3);
    std::vector<double> psi((g.nx + 1) * (g.ny + 1), 0.0);
    for (int j = 1; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) psi[j * (g.nx + 1) + i] = d(rng);
    FaceField v(g);
    auto ps = [&](int i, int j) { return psi[j * (g.nx + 1) + i]; };
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) v.x(i, j) = (ps(i, j + 1) - ps(i, j)) / g.hy;
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) v.y(i, j) = -(ps(i + 1, j) - ps(i, j)) / g.hx;
    return v;
}

}  // namespace

TEST_CASE("stokes_init: zero forcing, residual oracle, swap symmetry") {
    ModelParams mp = small_params();
    mp.lambda = 1e-4;
    Grid g(32, 32, 2 * kPi, 2 * kPi);

    // constant phase: no forcing, no flow
    ScalarField c(g, ScalarBc::neumann_zero, 0.5);
    FaceField u0;
    ScalarField p0;
    stokes_init(c, mp, u0, p0);
    CHECK(norm(u0) <= 1e-12);
    CHECK(norm(p0) <= 1e-10);

    // momentum residual after resubstitution
    ScalarField phi0 = sample_cc(g, [](double x, double y) { return std::cos(x) * std::cos(y); });
    stokes_init(phi0, mp, u0, p0);
    ScalarField mu0 = -mp.lambda * lap_neumann(phi0);
    for (size_t k = 0; k < mu0.v.size(); ++k)
        mu0.v[k] += mp.lambda * double_well_fprime(phi0.v[k], mp.eta);
    FaceField res = -mp.nu * visc_lap(u0) + grad_cc_to_face(p0) -
                    mu_grad_phi(mu0, phi0);
    CHECK(norm(res) <= 1e-7);
    CHECK(norm(div_face_to_cc(u0)) <= 1e-8);
    CHECK(std::abs(mean(p0)) <= 1e-13);
    for (int j = 0; j < g.ny; ++j) {
        CHECK(u0.x(0, j) == 0.0);
        CHECK(u0.x(g.nx, j) == 0.0);
    }

    // x<->y symmetric data: velocity components swap
    ScalarField phis = sample_cc(g, [](double x, double y) {
        return std::cos(x) * std::cos(2 * y) + std::cos(2 * x) * std::cos(y);
    });
    stokes_init(phis, mp, u0, p0);
    double sym_err = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i)
            sym_err = std::max(sym_err, std::abs(u0.x(i, j) - u0.y(j, i)));
    CHECK(sym_err <= 1e-9);
}

TEST_CASE("bootstrap_step: pure phases are fixed points") {
    ModelParams mp = small_params();
    Grid g(16, 16, 1.0, 1.0);
    for (double value : {1.0, 0.0}) {
        State s = uniform_state(g, mp, value);
        State out = bootstrap_step(s, mp);
        double dphi = 0.0;
        for (double v : out.phi.v) dphi = std::max(dphi, std::abs(v - value));
        CHECK(dphi <= 1e-10);
        CHECK(norm(out.u) <= 1e-10);
        CHECK(out.n == 1);
        CHECK(out.t == doctest::Approx(mp.dt));
        CHECK(out.r == doctest::Approx(std::exp(-mp.dt / mp.t_final)));
    }
}

TEST_CASE("bootstrap_step matches a dense monolithic Newton solve on 8x8") {
    ModelParams mp = small_params();
    mp.lambda = 1e-4;
    Grid g(8, 8, 1.0, 1.0);

    State s0(g);
    s0.phi = init_cosine(g);
    s0.q = q_of_phi(s0.phi, mp.eta);
    stokes_init(s0.phi, mp, s0.u, s0.p);

    SolveOpts so;
    so.tol = 1e-12;
    BootstrapStepper stepper(g, mp, so, 1e-11, 200);
    State prod = stepper.step(s0);

    ScalarField phi_o, p_o;
    FaceField u_o;
    double rnorm = dense_bootstrap_oracle(s0, mp, phi_o, u_o, p_o);
    REQUIRE(rnorm < 1e-12);
    CHECK(max_abs_diff(prod.phi, phi_o) <= 1e-8);
    CHECK(max_abs_diff(prod.u, u_o) <= 1e-8);
    CHECK(max_abs_diff(prod.p, p_o) <= 1e-6);
}

TEST_CASE("cnlfac_step: stationary pure phase, pressure trivials, q identity") {
    ModelParams mp = small_params();
    Grid g(12, 12, 1.0, 1.0);
    State a = uniform_state(g, mp, 1.0);
    State b = a;
    b.t = mp.dt;
    b.n = 1;
    State out = cnlfac_step(a, b, mp);
    double dphi = 0.0;
    for (double v : out.phi.v) dphi = std::max(dphi, std::abs(v - 1.0));
    CHECK(dphi <= 1e-11);
    CHECK(norm(out.u) <= 1e-11);
    CHECK(norm(out.p) <= 1e-10);
    double scale;
    double res_phi = cnlfac_phi_residual(a, b, out, mp, &scale);
    CHECK(res_phi <= 1e-10 * (scale + 1));

    // divergence-free u^n leaves the pressure unchanged
    State snm1(g), sn(g);
    ScalarField phi_nm2(g);
    random_history(g, mp, snm1, sn, phi_nm2, 900);
    sn.u = solenoidal_field(g, 901);
    SolveOpts so;
    so.tol = 1e-12;
    State out2 = cnlfac_step(snm1, sn, mp, so);
    CHECK(max_abs_diff(out2.p, snm1.p) <= 1e-10);

    // leap-frog multiplier identity and pressure update, pointwise
    ScalarField qlhs = out2.q - snm1.q;
    ScalarField qrhs = (2.0 / (mp.eta * mp.eta)) * pw(sn.phi, out2.phi - snm1.phi);
    CHECK(max_abs_diff(qlhs, qrhs) <= 1e-12 * (1.0 + norm(out2.q)));
}

TEST_CASE("cnlfac_step matches the dense direct solve of its linear system") {
    ModelParams mp = small_params();
    Grid g(8, 8, 1.0, 1.0);
    State snm1(g), sn(g);
    ScalarField phi_nm2(g);
    random_history(g, mp, snm1, sn, phi_nm2, 331);

    SolveOpts so;
    so.tol = 1e-13;
    State prod = cnlfac_step(snm1, sn, mp, so);

    ScalarField phi_o;
    FaceField u_o;
    dense_cnlfac_oracle(snm1, sn, mp, phi_o, u_o);
    CHECK(max_abs_diff(prod.phi, phi_o) <= 1e-9);
    CHECK(max_abs_diff(prod.u, u_o) <= 1e-9);

    // resubstitution into the three-level equations
    double sc;
    double rp_ = cnlfac_phi_residual(snm1, sn, prod, mp, &sc);
    CHECK(rp_ <= 1e-10 * sc);
    double ru_ = cnlfac_u_residual(snm1, sn, prod, mp, &sc);
    CHECK(ru_ <= 1e-10 * sc);
}

TEST_CASE("acsav_step: zero-coupling closed form for the auxiliary variable") {
    ModelParams mp = small_params();
    Grid g(8, 8, 1.0, 1.0);
    // constant phase, no velocity: every coupling integral vanishes
    State snm1 = uniform_state(g, mp, 1.0);
    State sn = snm1;
    snm1.t = mp.dt;
    snm1.n = 1;
    snm1.r = std::exp(-snm1.t / mp.t_final);
    sn.t = 2 * mp.dt;
    sn.n = 2;
    sn.r = std::exp(-sn.t / mp.t_final);
    ScalarField phi_nm2 = snm1.phi;

    SavWork w;
    State out = acsav_step(phi_nm2, snm1, sn, mp, {}, &w);
    double expected = snm1.r * (1.0 - mp.dt / mp.t_final) / (1.0 + mp.dt / mp.t_final);
    CHECK(out.r == doctest::Approx(expected).epsilon(1e-13));
    CHECK(norm(w.phi_breve) <= 1e-12);
    CHECK(norm(out.u) <= 1e-12);
    CHECK(w.A > 0.0);
    // stationary pure phase
    double dphi = 0.0;
    for (double v : out.phi.v) dphi = std::max(dphi, std::abs(v - 1.0));
    CHECK(dphi <= 1e-11);

    // same closed form for the explicit-convection variant
    State out2 = acsav_ect_step(phi_nm2, snm1, sn, mp);
    CHECK(out2.r == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("acsav_step: dense subproblem oracle and recombined residuals on 8x8") {
    ModelParams mp = small_params();
    Grid g(8, 8, 1.0, 1.0);
    State snm1(g), sn(g);
    ScalarField phi_nm2(g);
    random_history(g, mp, snm1, sn, phi_nm2, 4000);

    SolveOpts so;
    so.tol = 1e-13;
    for (bool ect : {false, true}) {
        SavWork w;
        State prod = ect ? acsav_ect_step(phi_nm2, snm1, sn, mp, so, &w)
                         : acsav_step(phi_nm2, snm1, sn, mp, so, &w);
        CHECK(w.A > 0.0);

        SavDenseOracle o = dense_sav_oracle(phi_nm2, snm1, sn, mp, ect);
        CHECK(max_abs_diff(o.mu_n, w.mu_n) <= 1e-12);
        CHECK(max_abs_diff(o.phi_hat, w.phi_hat) <= 1e-9);
        CHECK(max_abs_diff(o.phi_breve, w.phi_breve) <= 1e-9);
        CHECK(max_abs_diff(o.u_hat, w.u_hat) <= 1e-9);
        CHECK(max_abs_diff(o.u_breve, w.u_breve) <= 1e-9);
        CHECK(w.V == doctest::Approx(o.V).epsilon(1e-9));
        CHECK(max_abs_diff(prod.phi, o.phi_np1) <= 1e-9);
        CHECK(max_abs_diff(prod.u, o.u_np1) <= 1e-9);
        CHECK(prod.r == doctest::Approx(o.r_np1).epsilon(1e-9));

        // recombined fields satisfy the coupled equations
        double sc;
        double rp_ = sav_phi_residual(phi_nm2, snm1, sn, prod, w, mp, &sc);
        CHECK(rp_ <= 1e-10 * sc);
        double ru_ = sav_u_residual(phi_nm2, snm1, sn, prod, w, mp, ect, &sc);
        CHECK(ru_ <= 1e-10 * sc);

        // mu_bar splits exactly
        ScalarField mu_bar = o.mu_hat;
        axpy(o.V, o.mu_breve, mu_bar);
        CHECK(max_abs_diff(mu_bar, w.mu_bar) <= 1e-9);

        // explicit updates, pointwise
        ScalarField qlhs = prod.q - snm1.q;
        ScalarField qrhs = (2.0 / (mp.eta * mp.eta)) * pw(sn.phi, prod.phi - snm1.phi);
        CHECK(max_abs_diff(qlhs, qrhs) <= 1e-12 * (1 + norm(prod.q)));
        ScalarField plhs = prod.p - snm1.p;
        ScalarField prhs = (-1.0 / (mp.alpha * mp.dt)) * div_face_to_cc(sn.u);
        CHECK(max_abs_diff(plhs, prhs) <= 1e-12 * (1 + norm(prod.p)));
    }
}

TEST_CASE("acsav_ect equals acsav when the velocity history vanishes") {
    ModelParams mp = small_params();
    Grid g(10, 10, 1.0, 1.0);
    State snm1(g), sn(g);
    ScalarField phi_nm2(g);
    random_history(g, mp, snm1, sn, phi_nm2, 5100);
    snm1.u = FaceField(g);
    sn.u = FaceField(g);

    SolveOpts so;
    so.tol = 1e-13;
    State a = acsav_step(phi_nm2, snm1, sn, mp, so);
    State b = acsav_ect_step(phi_nm2, snm1, sn, mp, so);
    CHECK(max_abs_diff(a.phi, b.phi) <= 1e-10);
    CHECK(max_abs_diff(a.u, b.u) <= 1e-10);
    CHECK(a.r == doctest::Approx(b.r).epsilon(1e-11));
}

TEST_CASE("sav invariant guards: positive r required, A reported positive") {
    ModelParams mp = small_params();
    Grid g(8, 8, 1.0, 1.0);
    State snm1(g), sn(g);
    ScalarField phi_nm2(g);
    random_history(g, mp, snm1, sn, phi_nm2, 6200);
    snm1.r = 0.0;  // degenerate auxiliary state
    CHECK_THROWS_AS((void)acsav_step(phi_nm2, snm1, sn, mp), StepError);
}

TEST_CASE("run_scheme: echo at zero steps, determinism, bootstrap counts") {
    ModelParams mp = small_params();
    mp.t_final = 0.05;
    Grid g(16, 16, 2 * kPi, 2 * kPi);
    State init = make_initial_state(init_spinodal(g, 0.0, 0.001, 42), mp, false);

    RunResult echo = run_scheme(SchemeKind::acsav, init, mp, 0);
    CHECK(echo.rows.size() == 1);
    CHECK(max_abs_diff(echo.final_.phi, init.phi) == 0.0);

    RunResult r1 = run_scheme(SchemeKind::cnlfac, init, mp, 5);
    RunResult r2 = run_scheme(SchemeKind::cnlfac, init, mp, 5);
    REQUIRE(r1.rows.size() == 6);
    for (size_t k = 0; k < r1.rows.size(); ++k) {
        CHECK(r1.rows[k].W == r2.rows[k].W);  // bit identical
        CHECK(r1.rows[k].grad_phi_sq == r2.rows[k].grad_phi_sq);
        CHECK(r1.rows[k].r == r2.rows[k].r);
    }
    // V stays 1 on bootstrap rows and the coupled scheme has no split scalar
    for (const auto& row : r1.rows) CHECK(row.V == 1.0);

    RunResult rs = run_scheme(SchemeKind::acsav, init, mp, 5);
    CHECK(rs.rows.size() == 6);
    CHECK(rs.rows[1].V == 1.0);  // bootstrap level
    CHECK(rs.rows[2].V == 1.0);  // bootstrap level
    CHECK(rs.rows[3].V != 1.0);  // first split step
    CHECK(rs.min_A > 0.0);
    CHECK(rs.stability_ok);
}

TEST_CASE("run_scheme: auxiliary variable tracks exp(-t/T) on a spinodal run") {
    ModelParams mp;
    mp.eta = 0.1;
    mp.lambda = 0.01;
    mp.mobility = 100.0;
    mp.nu = 1.0;
    mp.dt = 0.01;
    mp.t_final = 0.1;
    Grid g(64, 64, 2 * kPi, 2 * kPi);
    State init = make_initial_state(init_spinodal(g, 0.0, 0.001, 1), mp, false);
    RunResult rr = run_scheme(SchemeKind::acsav, init, mp, 10);
    REQUIRE(rr.rows.size() == 11);
    for (const auto& row : rr.rows)
        CHECK(std::abs(row.r - std::exp(-row.t / mp.t_final)) <= 5e-3);
}

TEST_CASE("all three schemes hold the pure-phase stationary state") {
    ModelParams mp = small_params();
    Grid g(12, 12, 1.0, 1.0);
    for (auto kind : {SchemeKind::cnlfac, SchemeKind::acsav, SchemeKind::acsav_ect}) {
        State init = uniform_state(g, mp, -1.0);
        RunResult rr = run_scheme(kind, init, mp, 4);
        double dphi = 0.0;
        for (double v : rr.final_.phi.v) dphi = std::max(dphi, std::abs(v + 1.0));
        CHECK(dphi <= 1e-9);
        CHECK(norm(rr.final_.u) <= 1e-9);
    }
}

TEST_CASE("stability bound bookkeeping on a short coarse run") {
    ModelParams mp;
    mp.eta = 0.1;
    mp.lambda = 0.01;
    mp.mobility = 100.0;
    mp.nu = 1.0;
    mp.dt = 0.1;  // far above the accuracy scale
    mp.t_final = 1.0;
    Grid g(32, 32, 2 * kPi, 2 * kPi);
    State init = make_initial_state(init_spinodal(g, 0.0, 0.001, 3), mp, false);
    for (auto kind : {SchemeKind::cnlfac, SchemeKind::acsav, SchemeKind::acsav_ect}) {
        RunResult rr = run_scheme(kind, init, mp, 10);
        CHECK(rr.stability_ok);
        CHECK(std::isfinite(rr.stability_rhs));
        CHECK(!rr.stability_lhs_series.empty());
        for (const auto& row : rr.rows) CHECK(std::isfinite(row.W));
    }
}
