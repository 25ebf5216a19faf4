#include "acns/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace acns {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double nrm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

void remove_mean(std::vector<double>& a) {
    double m = 0.0;
    for (double x : a) m += x;
    m /= a.size();
    for (double& x : a) x -= m;
}

std::vector<double> inv_diag(const CsrMatrix& A) {
    std::vector<double> d = A.diagonal();
    for (double& x : d) x = (x != 0.0) ? 1.0 / x : 1.0;
    return d;
}

double true_rel_residual(const CsrMatrix& A, const std::vector<double>& b,
                         const std::vector<double>& x, double bnorm) {
    std::vector<double> r = A.apply(x);
    for (size_t k = 0; k < r.size(); ++k) r[k] = b[k] - r[k];
    return nrm2(r) / bnorm;
}

// GMRES(m), right preconditioned with the Jacobi diagonal.
int gmres_restarted(const CsrMatrix& A, const std::vector<double>& b,
                    std::vector<double>& x, const std::vector<double>& mi,
                    double tol_abs, int budget) {
    const int n = A.rows;
    const int m = 50;
    int used = 0;
    std::vector<std::vector<double>> V;
    std::vector<double> w(n), r(n);
    while (used < budget) {
        r = A.apply(x);
        for (int k = 0; k < n; ++k) r[k] = b[k] - r[k];
        double beta = nrm2(r);
        if (beta <= tol_abs) return used;
        V.assign(1, r);
        for (int k = 0; k < n; ++k) V[0][k] /= beta;
        std::vector<double> h((m + 1) * m, 0.0), cs(m), sn(m), gamma(m + 1, 0.0);
        gamma[0] = beta;
        int j = 0;
        for (; j < m && used < budget; ++j, ++used) {
            for (int k = 0; k < n; ++k) w[k] = mi[k] * V[j][k];
            w = A.apply(w);
            for (int i = 0; i <= j; ++i) {
                double hij = dot(w, V[i]);
                h[i * m + j] = hij;
                for (int k = 0; k < n; ++k) w[k] -= hij * V[i][k];
            }
            double hnext = nrm2(w);
            h[(j + 1) * m + j] = hnext;
            for (int i = 0; i < j; ++i) {
                double t = cs[i] * h[i * m + j] + sn[i] * h[(i + 1) * m + j];
                h[(i + 1) * m + j] = -sn[i] * h[i * m + j] + cs[i] * h[(i + 1) * m + j];
                h[i * m + j] = t;
            }
            double denom = std::hypot(h[j * m + j], hnext);
            if (denom == 0.0) { ++j; break; }
            cs[j] = h[j * m + j] / denom;
            sn[j] = hnext / denom;
            h[j * m + j] = denom;
            gamma[j + 1] = -sn[j] * gamma[j];
            gamma[j] = cs[j] * gamma[j];
            if (std::abs(gamma[j + 1]) <= tol_abs || hnext == 0.0) { ++j; break; }
            V.push_back(w);
            for (int k = 0; k < n; ++k) V[j + 1][k] /= hnext;
        }
        // back substitution and update
        std::vector<double> y(j, 0.0);
        for (int i = j - 1; i >= 0; --i) {
            double s = gamma[i];
            for (int k = i + 1; k < j; ++k) s -= h[i * m + k] * y[k];
            y[i] = s / h[i * m + i];
        }
        for (int i = 0; i < j; ++i)
            for (int k = 0; k < n; ++k) x[k] += mi[k] * V[i][k] * y[i];
    }
    return used;
}

}  // namespace

int default_maxit(int n) {
    int m = static_cast<int>(10.0 * std::sqrt(static_cast<double>(n)));
    return std::min(std::max(m, 100), 5000);
}

SolveReport solve_spd(const CsrMatrix& A, const std::vector<double>& b_in,
                      std::vector<double>& x, const SolveOpts& opts) {
    auto t0 = std::chrono::steady_clock::now();
    const int n = A.rows;
    SolveReport rep;
    std::vector<double> b = b_in;
    if (opts.pin_mean) remove_mean(b);
    const double bnorm = nrm2(b);
    if (opts.x0)
        x = *opts.x0;
    else
        x.assign(n, 0.0);
    if (bnorm == 0.0) {
        x.assign(n, 0.0);
        rep.converged = true;
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }
    const int maxit = opts.maxit > 0 ? opts.maxit : default_maxit(n);
    const std::vector<double> mi = inv_diag(A);

    std::vector<double> r = A.apply(x), z(n), p(n), Ap(n);
    for (int k = 0; k < n; ++k) r[k] = b[k] - r[k];
    for (int k = 0; k < n; ++k) z[k] = mi[k] * r[k];
    p = z;
    double rz = dot(r, z);
    int it = 0;
    while (it < maxit) {
        if (nrm2(r) <= opts.tol * bnorm) {
            double tr = true_rel_residual(A, b, x, bnorm);
            if (tr <= opts.tol) break;  // verified with a fresh matvec
        }
        A.apply(p, Ap);
        double pAp = dot(p, Ap);
        if (pAp <= 0.0) break;  // loss of positivity: give up, report below
        double alpha = rz / pAp;
        for (int k = 0; k < n; ++k) x[k] += alpha * p[k];
        for (int k = 0; k < n; ++k) r[k] -= alpha * Ap[k];
        if (opts.pin_mean) remove_mean(r);
        for (int k = 0; k < n; ++k) z[k] = mi[k] * r[k];
        double rz1 = dot(r, z);
        double betac = rz1 / rz;
        rz = rz1;
        for (int k = 0; k < n; ++k) p[k] = z[k] + betac * p[k];
        ++it;
    }
    if (opts.pin_mean) remove_mean(x);
    rep.iterations = it;
    rep.rel_residual = true_rel_residual(A, b, x, bnorm);
    rep.converged = rep.rel_residual <= opts.tol;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

SolveReport solve_general(const CsrMatrix& A, const std::vector<double>& b,
                          std::vector<double>& x, const SolveOpts& opts) {
    auto t0 = std::chrono::steady_clock::now();
    const int n = A.rows;
    SolveReport rep;
    const double bnorm = nrm2(b);
    if (opts.x0)
        x = *opts.x0;
    else
        x.assign(n, 0.0);
    if (bnorm == 0.0) {
        x.assign(n, 0.0);
        rep.converged = true;
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }
    const int maxit = opts.maxit > 0 ? opts.maxit : default_maxit(n);
    const std::vector<double> mi = inv_diag(A);
    const double tol_abs = opts.tol * bnorm;

    std::vector<double> r = A.apply(x);
    for (int k = 0; k < n; ++k) r[k] = b[k] - r[k];
    std::vector<double> rt = r, p(n, 0.0), v(n, 0.0), s(n), phat(n), shat(n), t(n);
    double rho = 1.0, alpha = 1.0, omega = 1.0;
    int it = 0;
    bool done = false;
    while (it < maxit && !done) {
        double rho1 = dot(rt, r);
        if (std::abs(rho1) < 1e-300) {  // breakdown: restart from current x
            r = A.apply(x);
            for (int k = 0; k < n; ++k) r[k] = b[k] - r[k];
            rt = r;
            p.assign(n, 0.0);
            v.assign(n, 0.0);
            rho = alpha = omega = 1.0;
            rho1 = dot(rt, r);
            if (std::abs(rho1) < 1e-300) break;
        }
        double betac = (rho1 / rho) * (alpha / omega);
        for (int k = 0; k < n; ++k) p[k] = r[k] + betac * (p[k] - omega * v[k]);
        for (int k = 0; k < n; ++k) phat[k] = mi[k] * p[k];
        A.apply(phat, v);
        double rtv = dot(rt, v);
        if (std::abs(rtv) < 1e-300) break;
        alpha = rho1 / rtv;
        for (int k = 0; k < n; ++k) s[k] = r[k] - alpha * v[k];
        if (nrm2(s) <= 0.1 * tol_abs) {
            for (int k = 0; k < n; ++k) x[k] += alpha * phat[k];
            done = true;
            ++it;
            break;
        }
        for (int k = 0; k < n; ++k) shat[k] = mi[k] * s[k];
        A.apply(shat, t);
        double tt = dot(t, t);
        if (tt == 0.0) break;
        omega = dot(t, s) / tt;
        for (int k = 0; k < n; ++k) x[k] += alpha * phat[k] + omega * shat[k];
        for (int k = 0; k < n; ++k) r[k] = s[k] - omega * t[k];
        rho = rho1;
        ++it;
        if (nrm2(r) <= tol_abs &&
            true_rel_residual(A, b, x, bnorm) <= opts.tol)
            done = true;
        if (std::abs(omega) < 1e-300) break;
    }
    rep.rel_residual = true_rel_residual(A, b, x, bnorm);
    if (rep.rel_residual > opts.tol && it < maxit)  // BiCGStab stalled
        it += gmres_restarted(A, b, x, mi, tol_abs, maxit - it);
    rep.iterations = it;
    rep.rel_residual = true_rel_residual(A, b, x, bnorm);
    rep.converged = rep.rel_residual <= opts.tol;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace acns

// ---------------------------------------------------------------------------
// Direct path
// ---------------------------------------------------------------------------

#include <Eigen/SparseLU>

#include <stdexcept>

namespace acns {

struct LuSolver::Impl {
    Eigen::SparseMatrix<double> mat;
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
};

LuSolver::LuSolver(const CsrMatrix& a) : impl_(new Impl), a_(a) {
    using SpRow = Eigen::SparseMatrix<double, Eigen::RowMajor, int>;
    Eigen::Map<const SpRow> view(a.rows, a.cols, a.nnz(), a.row_ptr.data(),
                                 a.col.data(), a.val.data());
    impl_->mat = view;  // to column major
    impl_->lu.analyzePattern(impl_->mat);
    impl_->lu.factorize(impl_->mat);
    if (impl_->lu.info() != Eigen::Success)
        throw std::runtime_error("LuSolver: factorization failed");
}

LuSolver::~LuSolver() = default;
LuSolver::LuSolver(LuSolver&&) noexcept = default;
LuSolver& LuSolver::operator=(LuSolver&&) noexcept = default;

std::vector<double> LuSolver::solve(const std::vector<double>& b) const {
    const int n = a_.rows;
    Eigen::Map<const Eigen::VectorXd> bv(b.data(), n);
    Eigen::VectorXd x = impl_->lu.solve(bv);
    std::vector<double> out(x.data(), x.data() + n);
    double bnorm = nrm2(b);
    if (bnorm == 0.0) {
        last_rel_residual_ = 0.0;
        return std::vector<double>(n, 0.0);
    }
    // one round of iterative refinement keeps stiff systems at roundoff
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<double> r = a_.apply(out);
        for (int k = 0; k < n; ++k) r[k] = b[k] - r[k];
        last_rel_residual_ = nrm2(r) / bnorm;
        if (last_rel_residual_ < 1e-13 || pass == 1) break;
        Eigen::Map<const Eigen::VectorXd> rv(r.data(), n);
        Eigen::VectorXd dx = impl_->lu.solve(rv);
        for (int k = 0; k < n; ++k) out[k] += dx[k];
    }
    return out;
}

}  // namespace acns
