#include <doctest.h>

#include <cmath>
#include <random>

#include "acns/assemble.hpp"
#include "acns/solver.hpp"
#include "support.hpp"

using namespace acns;
using namespace acns::test;

namespace {

std::vector<double> random_vec(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = d(rng);
    return v;
}

double linf(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace

TEST_CASE("csr matvec against the dense oracle on random instances") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> ncols(1, 12);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 20 + trial * 18;  // up to 182 unknowns
        CsrBuilder b(n, n);
        for (int r = 0; r < n; ++r) {
            int k = ncols(rng);
            for (int t = 0; t < k; ++t)
                b.add(r, std::uniform_int_distribution<int>(0, n - 1)(rng), val(rng));
        }
        CsrMatrix a = b.compress();
        Dense d = a.to_dense();
        std::vector<double> x = random_vec(n, 99 + trial);
        std::vector<double> y = a.apply(x);
        std::vector<double> yd(n, 0.0);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) yd[r] += d[r][c] * x[c];
        CHECK(linf(y, yd) <= 1e-13);
        // sorted, deduplicated column indices per row
        for (int r = 0; r < n; ++r)
            for (int k = a.row_ptr[r] + 1; k < a.row_ptr[r + 1]; ++k)
                CHECK(a.col[k - 1] < a.col[k]);
    }
}

TEST_CASE("csr transpose/multiply/add agree with dense algebra") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    CsrBuilder ba(12, 9), bb(9, 7);
    for (int t = 0; t < 40; ++t)
        ba.add(std::uniform_int_distribution<int>(0, 11)(rng),
               std::uniform_int_distribution<int>(0, 8)(rng), val(rng));
    for (int t = 0; t < 40; ++t)
        bb.add(std::uniform_int_distribution<int>(0, 8)(rng),
               std::uniform_int_distribution<int>(0, 6)(rng), val(rng));
    CsrMatrix A = ba.compress(), B = bb.compress();
    Dense dA = A.to_dense(), dB = B.to_dense();

    Dense dAt = csr_transpose(A).to_dense();
    for (int r = 0; r < 12; ++r)
        for (int c = 0; c < 9; ++c) CHECK(dAt[c][r] == dA[r][c]);

    Dense dAB = csr_multiply(A, B).to_dense();
    for (int r = 0; r < 12; ++r)
        for (int c = 0; c < 7; ++c) {
            double s = 0;
            for (int k = 0; k < 9; ++k) s += dA[r][k] * dB[k][c];
            CHECK(dAB[r][c] == doctest::Approx(s).epsilon(1e-14));
        }

    CsrMatrix A2 = csr_add(2.0, A, -0.5, A);
    Dense dA2 = A2.to_dense();
    for (int r = 0; r < 12; ++r)
        for (int c = 0; c < 9; ++c)
            CHECK(dA2[r][c] == doctest::Approx(1.5 * dA[r][c]).epsilon(1e-14));
}

TEST_CASE("assembled operators agree with the matrix-free stencils") {
    Grid g(6, 5, 1.0, 1.4);
    OperatorCache oc(g);
    const VelocityDof& dofs = oc.dofs;

    for (int t = 0; t < 20; ++t) {
        // scalar helmholtz vs diag(a) f + c (-lap) f
        std::vector<double> a = random_vec(g.n_cells(), 40 + t);
        double c = 0.37;
        CsrMatrix H = assemble_scalar_helmholtz(g, a, c);
        ScalarField f = random_scalar(g, 140 + t);
        std::vector<double> hf = H.apply(f.v);
        ScalarField mf = -c * lap_neumann(f);
        for (int k = 0; k < g.n_cells(); ++k) mf.v[k] += a[k] * f.v[k];
        CHECK(linf(hf, mf.v) <= 1e-12);

        // face operators
        FaceField v = random_face(g, 240 + t);
        std::vector<double> vg = dofs.gather(v);
        CHECK(linf(oc.neg_vlap.apply(vg), dofs.gather(-1.0 * lap_dirichlet(v))) <= 1e-12);
        CHECK(linf(oc.neg_visc.apply(vg), dofs.gather(-1.0 * visc_lap(v))) <= 1e-12);
        CHECK(linf(oc.neg_gd.apply(vg), dofs.gather(-1.0 * graddiv(v))) <= 1e-12);
        CHECK(linf(oc.div.apply(vg), div_face_to_cc(v).v) <= 1e-12);

        FaceField w = random_face(g, 340 + t);
        CsrMatrix C = assemble_convection(dofs, w);
        CHECK(linf(C.apply(vg), dofs.gather(convect_plain(w, v))) <= 1e-12);
        CsrMatrix S = assemble_convection_skew(dofs, w);
        CHECK(linf(S.apply(vg), dofs.gather(convect_skew(w, v))) <= 1e-12);

        ScalarField s = random_scalar(g, 440 + t);
        CsrMatrix T = assemble_transport(dofs, s);
        CHECK(linf(T.apply(vg), advect_scalar(v, s).v) <= 1e-12);
        // T^T realizes the adjoint stress stencil
        ScalarField gc = random_scalar(g, 540 + t, ScalarBc::none);
        CHECK(linf(csr_transpose(T).apply(gc.v),
                   dofs.gather(transport_adjoint(gc, s))) <= 1e-12);
    }
}

TEST_CASE("scalar graph Laplacian has zero row sums (constant nullspace)") {
    Grid g(4, 4, 1.0, 1.0);
    CsrMatrix L = assemble_scalar_helmholtz(g, std::vector<double>(16, 0.0), 1.0);
    std::vector<double> ones(16, 1.0);
    std::vector<double> y = L.apply(ones);
    for (double v : y) CHECK(std::abs(v) <= 1e-14);
}

TEST_CASE("monolithic assembly matches a probe of the coupled operator") {
    Grid g(8, 8, 1.0, 1.0);
    OperatorCache oc(g);
    ModelParams mp;
    mp.eta = 0.1;
    mp.lambda = 1e-3;
    mp.mobility = 10.0;
    mp.nu = 0.8;
    mp.dt = 0.01;
    ScalarField phin = random_scalar(g, 61);
    FaceField un = random_face(g, 62);
    const double dt = mp.dt, M = mp.mobility, lamM = mp.lambda * M;

    std::vector<double> a(g.n_cells());
    for (int k = 0; k < g.n_cells(); ++k)
        a[k] = 1.0 / (2 * dt) + lamM / (mp.eta * mp.eta) * phin.v[k] * phin.v[k];
    CsrMatrix T = assemble_transport(oc.dofs, phin);
    CsrMatrix Au = assemble_velocity_op(oc, &un, 1.0 / (2 * dt), 0.5, mp.beta / dt,
                                        0.5 * mp.nu);
    CsrMatrix A = assemble_monolithic(oc, a, 0.5 * lamM, T, 0.5,
                                      1.0 / (2 * dt * M), Au, 1.0 / (2 * M));

    const int np = g.n_cells(), n = np + oc.dofs.n;
    auto op = [&](const std::vector<double>& x) {
        ScalarField phi(g);
        std::copy(x.begin(), x.begin() + np, phi.v.begin());
        FaceField u = oc.dofs.scatter(std::vector<double>(x.begin() + np, x.end()));
        ScalarField rp = -0.5 * lamM * lap_neumann(phi);
        for (int k = 0; k < np; ++k) rp.v[k] += a[k] * phi.v[k];
        axpy(0.5, advect_scalar(u, phin), rp);
        FaceField ru = (1.0 / (2 * dt)) * u;
        axpy(0.5, convect_skew(un, u), ru);
        axpy(-mp.beta / dt, graddiv(u), ru);
        axpy(-0.5 * mp.nu, visc_lap(u), ru);
        axpy(1.0 / (2 * dt * M), transport_adjoint(phi, phin), ru);
        axpy(1.0 / (2 * M), transport_adjoint(advect_scalar(u, phin), phin), ru);
        std::vector<double> y(n);
        std::copy(rp.v.begin(), rp.v.end(), y.begin());
        std::vector<double> yu = oc.dofs.gather(ru);
        std::copy(yu.begin(), yu.end(), y.begin() + np);
        return y;
    };
    for (int t = 0; t < 20; ++t) {
        std::vector<double> x = random_vec(n, 700 + t);
        CHECK(linf(A.apply(x), op(x)) <= 1e-11);
    }
}

TEST_CASE("solve_spd: identity, dense oracle, semidefinite mean pinning") {
    CsrMatrix I = csr_identity(5);
    std::vector<double> b = random_vec(5, 3), x;
    SolveReport rep = solve_spd(I, b, x);
    CHECK(rep.converged);
    CHECK(rep.iterations <= 1);
    CHECK(linf(x, b) <= 1e-14);

    CsrBuilder bld(3, 3);
    double m[3][3] = {{4, 1, 0}, {1, 3, 1}, {0, 1, 5}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (m[r][c] != 0) bld.add(r, c, m[r][c]);
    CsrMatrix A = bld.compress();
    std::vector<double> b3 = {1, -2, 0.5};
    SolveOpts so;
    so.tol = 1e-12;
    rep = solve_spd(A, b3, x, so);
    CHECK(rep.converged);
    std::vector<double> xd = dense_solve(A.to_dense(), b3);
    CHECK(linf(x, xd) <= 1e-10);

    // Neumann Laplacian: recover a manufactured field up to its mean
    Grid g(12, 12, 1.0, 1.0);
    CsrMatrix L = assemble_scalar_helmholtz(g, std::vector<double>(g.n_cells(), 0.0), 1.0);
    ScalarField f = random_scalar(g, 9);
    double fm = mean(f);
    for (double& v : f.v) v -= fm;
    std::vector<double> rhs = L.apply(f.v);
    SolveOpts sp;
    sp.tol = 1e-12;
    sp.pin_mean = true;
    rep = solve_spd(L, rhs, x, sp);
    CHECK(rep.converged);
    CHECK(linf(x, f.v) <= 1e-8);
    CHECK(rep.rel_residual <= sp.tol);
}

TEST_CASE("solve_general: identity, nonsymmetric dense oracle, velocity system") {
    CsrMatrix I = csr_identity(4);
    std::vector<double> b = random_vec(4, 4), x;
    SolveReport rep = solve_general(I, b, x);
    CHECK(rep.converged);
    CHECK(linf(x, b) <= 1e-13);

    CsrBuilder bld(3, 3);
    double m[3][3] = {{4, 1, -1}, {0.5, 3, 1}, {-2, 1, 5}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) bld.add(r, c, m[r][c]);
    CsrMatrix A = bld.compress();
    std::vector<double> b3 = {0.3, -1, 2};
    SolveOpts so;
    so.tol = 1e-12;
    rep = solve_general(A, b3, x, so);
    CHECK(rep.converged);
    CHECK(linf(x, dense_solve(A.to_dense(), b3)) <= 1e-10);

    // velocity operator with skew convection on an 8x8 grid vs dense
    Grid g(8, 8, 1.0, 1.0);
    OperatorCache oc(g);
    FaceField w = random_face(g, 11);
    CsrMatrix Av = assemble_velocity_op(oc, &w, 50.0, 0.5, 25.0, 0.4);
    std::vector<double> bv = random_vec(oc.dofs.n, 12);
    rep = solve_general(Av, bv, x, so);
    CHECK(rep.converged);
    CHECK(rep.rel_residual <= so.tol);
    CHECK(linf(x, dense_solve(Av.to_dense(), bv)) <= 1e-9);
}

TEST_CASE("default iteration budget follows the unknown count") {
    CHECK(default_maxit(100) == 100);       // floor
    CHECK(default_maxit(10000) == 1000);
    CHECK(default_maxit(4000000) == 5000);  // cap
}
