#include "acns/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace acns {

double total_energy(const State& s, const ModelParams& mp) {
    double kin = 0.5 * inner(s.u, s.u);
    double gp = grad_norm_sq(s.phi);
    double qq = inner(s.q, s.q);
    return kin + mp.lambda * (0.5 * gp + 0.25 * mp.eta * mp.eta * qq);
}

double total_energy_double_well(const State& s, const ModelParams& mp) {
    double kin = 0.5 * inner(s.u, s.u);
    double gp = grad_norm_sq(s.phi);
    double fw = 0.0;
    for (double ph : s.phi.v) {
        double w = ph * ph - 1.0;
        fw += w * w;
    }
    fw *= s.grid().cell_area() / (4.0 * mp.eta * mp.eta);
    return kin + mp.lambda * (0.5 * gp + fw);
}

DiagnosticsRow make_diag_row(const State& s, const ModelParams& mp, double V,
                             double step_seconds) {
    DiagnosticsRow row;
    row.n = s.n;
    row.t = s.t;
    row.kinetic = 0.5 * inner(s.u, s.u);
    row.grad_phi_sq = grad_norm_sq(s.phi);
    row.q_sq = inner(s.q, s.q);
    row.W = row.kinetic +
            mp.lambda * (0.5 * row.grad_phi_sq + 0.25 * mp.eta * mp.eta * row.q_sq);
    row.div_u = norm(div_face_to_cc(s.u));
    row.r = s.r;
    row.V = V;
    row.step_seconds = step_seconds;
    row.W_F = total_energy_double_well(s, mp);
    return row;
}

double stability_lhs(const State& prev, const State& cur, const ModelParams& mp,
                     bool with_r) {
    double e = 0.25 * mp.lambda * (grad_norm_sq(cur.phi) + grad_norm_sq(prev.phi));
    e += 0.125 * mp.lambda * mp.eta * mp.eta * (inner(cur.q, cur.q) + inner(prev.q, prev.q));
    e += 0.25 * (inner(cur.u, cur.u) + inner(prev.u, prev.u));
    if (with_r) e += 0.25 * (cur.r * cur.r + prev.r * prev.r);
    return e;
}

double stability_rhs(const State& lo, const State& hi, const ModelParams& mp,
                     bool with_r) {
    const double dt = mp.dt;
    ScalarField div_lo = div_face_to_cc(lo.u);
    ScalarField div_hi = div_face_to_cc(hi.u);
    double e = 0.25 * mp.lambda * (grad_norm_sq(hi.phi) + grad_norm_sq(lo.phi));
    e += 0.125 * mp.lambda * mp.eta * mp.eta * (inner(hi.q, hi.q) + inner(lo.q, lo.q));
    e += 0.25 * (inner(hi.u, hi.u) + 2.0 * mp.beta * inner(div_hi, div_hi));
    e += 0.25 * (inner(lo.u, lo.u) + 2.0 * mp.beta * inner(div_lo, div_lo));
    e += 0.5 * mp.alpha * dt * dt * (inner(hi.p, hi.p) + inner(lo.p, lo.p));
    if (with_r) e += 0.25 * (hi.r * hi.r + lo.r * lo.r);
    e += 0.5 * dt * inner(hi.p, div_lo) - 0.5 * dt * inner(lo.p, div_hi);
    return e;
}

namespace {

// 1D cubic Lagrange through four consecutive samples; exact for cubics, so
// prolonged bilinear data is reproduced identically and the leading
// interpolation error is a smooth O(h^4) field that cannot disturb the
// second-order Cauchy gaps. One-sided stencils cover the rim.
double cubic4(const double* v, double s) {
    double w0 = -(s - 1) * (s - 2) * (s - 3) / 6.0;
    double w1 = s * (s - 2) * (s - 3) / 2.0;
    double w2 = -s * (s - 1) * (s - 3) / 2.0;
    double w3 = s * (s - 1) * (s - 2) / 6.0;
    return w0 * v[0] + w1 * v[1] + w2 * v[2] + w3 * v[3];
}

// samples at positions (i + off) * h for i in [0, n); evaluated at x
double line_eval(const std::vector<double>& v, double off, double h, double x) {
    const int n = static_cast<int>(v.size());
    double m = x / h - off;
    int b = std::clamp((int)std::floor(m) - 1, 0, n - 4);
    return cubic4(v.data() + b, m - b);
}

void require_nested(const Grid& c, const Grid& f) {
    if (c == f) return;  // degenerate comparison on one grid is allowed
    if (f.nx != 2 * c.nx || f.ny != 2 * c.ny || f.lx != c.lx || f.ly != c.ly)
        throw std::invalid_argument("cauchy_difference: fine grid must be a 2x refinement");
}

// tensor-product prolongation: refine along x per sample row, then along y
std::vector<std::vector<double>> refine_rows(
    const std::vector<std::vector<double>>& rows, double off, double h,
    const std::vector<double>& xs) {
    std::vector<std::vector<double>> out(rows.size(), std::vector<double>(xs.size()));
    for (size_t j = 0; j < rows.size(); ++j)
        for (size_t k = 0; k < xs.size(); ++k)
            out[j][k] = line_eval(rows[j], off, h, xs[k]);
    return out;
}

}  // namespace

ScalarField prolong_cc(const ScalarField& c, const Grid& fine) {
    const Grid& g = c.grid;
    ScalarField out(fine, c.bc);
    std::vector<double> xs(fine.nx), ys(fine.ny);
    for (int i = 0; i < fine.nx; ++i) xs[i] = fine.xc(i);
    for (int j = 0; j < fine.ny; ++j) ys[j] = fine.yc(j);
    std::vector<std::vector<double>> rows(g.ny, std::vector<double>(g.nx));
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) rows[j][i] = c(i, j);
    std::vector<std::vector<double>> rx = refine_rows(rows, 0.5, g.hx, xs);
    std::vector<double> col(g.ny);
    for (int i = 0; i < fine.nx; ++i) {
        for (int j = 0; j < g.ny; ++j) col[j] = rx[j][i];
        for (int j = 0; j < fine.ny; ++j) out(i, j) = line_eval(col, 0.5, g.hy, ys[j]);
    }
    return out;
}

FaceField prolong_face(const FaceField& c, const Grid& fine) {
    const Grid& g = c.grid;
    FaceField out(fine);
    {
        std::vector<double> xs(fine.nx + 1), ys(fine.ny);
        for (int i = 0; i <= fine.nx; ++i) xs[i] = fine.xf(i);
        for (int j = 0; j < fine.ny; ++j) ys[j] = fine.yc(j);
        std::vector<std::vector<double>> rows(g.ny, std::vector<double>(g.nx + 1));
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i <= g.nx; ++i) rows[j][i] = c.x(i, j);
        std::vector<std::vector<double>> rx = refine_rows(rows, 0.0, g.hx, xs);
        std::vector<double> col(g.ny);
        for (int i = 0; i <= fine.nx; ++i) {
            for (int j = 0; j < g.ny; ++j) col[j] = rx[j][i];
            for (int j = 0; j < fine.ny; ++j)
                out.x(i, j) = line_eval(col, 0.5, g.hy, ys[j]);
        }
    }
    {
        std::vector<double> xs(fine.nx), ys(fine.ny + 1);
        for (int i = 0; i < fine.nx; ++i) xs[i] = fine.xc(i);
        for (int j = 0; j <= fine.ny; ++j) ys[j] = fine.yf(j);
        std::vector<std::vector<double>> rows(g.ny + 1, std::vector<double>(g.nx));
        for (int j = 0; j <= g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) rows[j][i] = c.y(i, j);
        std::vector<std::vector<double>> rx = refine_rows(rows, 0.5, g.hx, xs);
        std::vector<double> col(g.ny + 1);
        for (int i = 0; i < fine.nx; ++i) {
            for (int j = 0; j <= g.ny; ++j) col[j] = rx[j][i];
            for (int j = 0; j <= fine.ny; ++j)
                out.y(i, j) = line_eval(col, 0.0, g.hy, ys[j]);
        }
    }
    out.zero_boundary();
    return out;
}

double cauchy_difference(const State& coarse, const State& fine, CauchyKind kind) {
    require_nested(coarse.grid(), fine.grid());
    const bool same = coarse.grid() == fine.grid();
    switch (kind) {
        case CauchyKind::grad_phi: {
            ScalarField d =
                (same ? coarse.phi : prolong_cc(coarse.phi, fine.grid())) - fine.phi;
            return std::sqrt(grad_norm_sq(d));
        }
        case CauchyKind::grad_u: {
            FaceField d =
                (same ? coarse.u : prolong_face(coarse.u, fine.grid())) - fine.u;
            return std::sqrt(h1_seminorm_sq(d));
        }
        case CauchyKind::p_l2: {
            ScalarField d =
                (same ? coarse.p : prolong_cc(coarse.p, fine.grid())) - fine.p;
            return norm(d);
        }
    }
    return 0.0;
}

}  // namespace acns
