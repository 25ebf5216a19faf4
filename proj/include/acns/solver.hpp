// Linear solvers for the per-step systems: Jacobi-preconditioned Krylov
// iterations and a sparse direct factorization for the desk-scale solves that
// are reused across right-hand sides.
#pragma once

#include <memory>
#include <vector>

#include "acns/csr.hpp"

namespace acns {

struct SolveReport {
    int iterations = 0;
    double rel_residual = 0.0;  // true residual from a fresh matvec
    bool converged = false;
    double seconds = 0.0;
};

struct SolveOpts {
    double tol = 1e-10;             // relative to ||b||
    int maxit = 0;                  // 0 => 10*sqrt(n), capped at 5000
    bool pin_mean = false;          // project constants out (Neumann systems)
    const std::vector<double>* x0 = nullptr;  // optional warm start
};

int default_maxit(int n);

// Conjugate gradients; A symmetric positive (semi)definite. With pin_mean the
// right-hand side is made mean-free and the returned solution has zero mean.
SolveReport solve_spd(const CsrMatrix& A, const std::vector<double>& b,
                      std::vector<double>& x, const SolveOpts& opts = {});

// BiCGStab with a GMRES(50) fallback for nonsymmetric systems.
SolveReport solve_general(const CsrMatrix& A, const std::vector<double>& b,
                          std::vector<double>& x, const SolveOpts& opts = {});

// Sparse LU factorization (general, with column reordering). One factorization
// serves any number of right-hand sides; solve() applies a round of iterative
// refinement so the verified residual sits at roundoff even for the stiff
// penalized operators.
class LuSolver {
  public:
    explicit LuSolver(const CsrMatrix& a);
    ~LuSolver();
    LuSolver(LuSolver&&) noexcept;
    LuSolver& operator=(LuSolver&&) noexcept;

    std::vector<double> solve(const std::vector<double>& b) const;
    // residual of the last solve, from a fresh matvec
    double last_rel_residual() const { return last_rel_residual_; }

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    CsrMatrix a_;
    mutable double last_rel_residual_ = 0.0;
};

}  // namespace acns
