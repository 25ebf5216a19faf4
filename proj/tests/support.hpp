// Shared test utilities: dense direct solves (the oracle path for the small
// systems), random admissible fields, and probing of matrix-free operators.
#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "acns/csr.hpp"
#include "acns/field.hpp"

namespace acns::test {

using Dense = std::vector<std::vector<double>>;

// Gaussian elimination with partial pivoting; independent of the CSR/Krylov
// path it checks.
inline std::vector<double> dense_solve(Dense a, std::vector<double> b) {
    const int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (std::abs(a[r][k]) > std::abs(a[piv][k])) piv = r;
        if (std::abs(a[piv][k]) < 1e-300)
            throw std::runtime_error("dense_solve: singular matrix");
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (int r = k + 1; r < n; ++r) {
            double f = a[r][k] / a[k][k];
            if (f == 0.0) continue;
            for (int c = k; c < n; ++c) a[r][c] -= f * a[k][c];
            b[r] -= f * b[k];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

// dense matrix of a matrix-free linear operator, column by column
inline Dense probe_operator(int n, const std::function<std::vector<double>(const std::vector<double>&)>& op) {
    Dense a(n, std::vector<double>(n, 0.0));
    std::vector<double> e(n, 0.0);
    for (int c = 0; c < n; ++c) {
        e[c] = 1.0;
        std::vector<double> col = op(e);
        for (int r = 0; r < n; ++r) a[r][c] = col[r];
        e[c] = 0.0;
    }
    return a;
}

inline ScalarField random_scalar(const Grid& g, std::uint64_t seed,
                                 ScalarBc bc = ScalarBc::neumann_zero,
                                 double scale = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-scale, scale);
    ScalarField f(g, bc);
    for (double& v : f.v) v = d(rng);
    return f;
}

inline FaceField random_face(const Grid& g, std::uint64_t seed, double scale = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-scale, scale);
    FaceField f(g);
    for (double& v : f.ux) v = d(rng);
    for (double& v : f.uy) v = d(rng);
    f.zero_boundary();
    return f;
}

inline ScalarField sample_cc(const Grid& g, const std::function<double(double, double)>& fn,
                             ScalarBc bc = ScalarBc::neumann_zero) {
    ScalarField f(g, bc);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f(i, j) = fn(g.xc(i), g.yc(j));
    return f;
}

inline FaceField sample_face(const Grid& g,
                             const std::function<double(double, double)>& fx,
                             const std::function<double(double, double)>& fy) {
    FaceField f(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) f.x(i, j) = fx(g.xf(i), g.yc(j));
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f.y(i, j) = fy(g.xc(i), g.yf(j));
    f.zero_boundary();
    return f;
}

inline double max_abs_interior(const ScalarField& a, int margin) {
    const Grid& g = a.grid;
    double m = 0.0;
    for (int j = margin; j < g.ny - margin; ++j)
        for (int i = margin; i < g.nx - margin; ++i)
            m = std::max(m, std::abs(a(i, j)));
    return m;
}

inline double max_abs_diff(const ScalarField& a, const ScalarField& b) {
    double m = 0.0;
    for (size_t k = 0; k < a.v.size(); ++k)
        m = std::max(m, std::abs(a.v[k] - b.v[k]));
    return m;
}

inline double max_abs_diff(const FaceField& a, const FaceField& b) {
    double m = 0.0;
    for (size_t k = 0; k < a.ux.size(); ++k)
        m = std::max(m, std::abs(a.ux[k] - b.ux[k]));
    for (size_t k = 0; k < a.uy.size(); ++k)
        m = std::max(m, std::abs(a.uy[k] - b.uy[k]));
    return m;
}

}  // namespace acns::test
