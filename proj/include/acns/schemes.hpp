// Time integrators: the first-order two-level bootstrap, the coupled
// three-level CNLF artificial-compression scheme, and the two decoupled
// auxiliary-scalar variants (implicit and fully explicit convection).
#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "acns/assemble.hpp"
#include "acns/diagnostics.hpp"
#include "acns/params.hpp"
#include "acns/solver.hpp"

namespace acns {

enum class SchemeKind { bootstrap, cnlfac, acsav, acsav_ect };

const char* scheme_name(SchemeKind k);
SchemeKind scheme_from_name(const std::string& s);

struct StepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Split-step scratch of one auxiliary-scalar step; A > 0 is guaranteed for a
// completed step and asserted at runtime.
struct SavWork {
    ScalarField phi_hat, phi_breve;
    FaceField u_hat, u_breve;
    ScalarField mu_hat, mu_breve;
    ScalarField mu_n, mu_bar;
    double V = 1.0, A = 0.0, B = 0.0;
};

// Initial velocity/pressure from the stationary Stokes balance
//   -nu lap u + grad p = mu0 grad phi0,  div u = 0,
// mu0 = lambda(-lap phi0 + f(phi0)), solved by grad-div iterated penalty.
// Guarantees ||div u|| <= div_tol and mean-zero p.
void stokes_init(const ScalarField& phi0, const ModelParams& mp, FaceField& u0,
                 ScalarField& p0, const SolveOpts& so = {},
                 double div_tol = 1e-10);

struct BootstrapReport {
    int picard_iters = 0;
    int newton_iters = 0;
    int penalty_iters = 0;
    std::vector<double> picard_updates;  // ||u_k - u_{k-1}|| trace
};

class BootstrapStepper {
  public:
    BootstrapStepper(const Grid& g, const ModelParams& mp, SolveOpts so,
                     double picard_tol = 1e-8, int picard_maxit = 50);
    State step(const State& sn, BootstrapReport* rep = nullptr);

  private:
    ModelParams mp_;
    SolveOpts so_;
    double picard_tol_;
    int picard_maxit_;
    OperatorCache oc_;
};

class CnlfacStepper {
  public:
    CnlfacStepper(const Grid& g, const ModelParams& mp, SolveOpts so);
    State step(const State& snm1, const State& sn);
    const SolveReport& last_report() const { return report_; }

  private:
    ModelParams mp_;
    SolveOpts so_;
    OperatorCache oc_;
    CsrMatrix vel_const_;  // mass + grad-div + viscous part, grid constant
    SolveReport report_;
};

class SavStepper {
  public:
    SavStepper(const Grid& g, const ModelParams& mp, SolveOpts so,
               bool explicit_convection);
    // phi_nm2 is the phase field two levels behind snm1.
    State step(const ScalarField& phi_nm2, const State& snm1, const State& sn,
               SavWork* work = nullptr);

  private:
    ModelParams mp_;
    SolveOpts so_;
    bool ect_;
    OperatorCache oc_;
    CsrMatrix vel_const_;  // mass + grad-div + viscous; the whole operator
                           // for explicit convection, factored once per run
    std::unique_ptr<LuSolver> lu_const_;
};

// Single-step conveniences used by the tests.
State bootstrap_step(const State& sn, const ModelParams& mp,
                     const SolveOpts& so = {}, BootstrapReport* rep = nullptr);
State cnlfac_step(const State& snm1, const State& sn, const ModelParams& mp,
                  const SolveOpts& so = {});
State acsav_step(const ScalarField& phi_nm2, const State& snm1, const State& sn,
                 const ModelParams& mp, const SolveOpts& so = {},
                 SavWork* work = nullptr);
State acsav_ect_step(const ScalarField& phi_nm2, const State& snm1,
                     const State& sn, const ModelParams& mp,
                     const SolveOpts& so = {}, SavWork* work = nullptr);

// Explicit leap-frog updates shared by the three-level schemes.
ScalarField leapfrog_q_update(const ScalarField& q_nm1, const ScalarField& phi_n,
                              const ScalarField& phi_np1,
                              const ScalarField& phi_nm1, double eta);
ScalarField pressure_update(const ScalarField& p_nm1, const FaceField& u_n,
                            double alpha, double dt);

// Residuals of the un-split scheme equations on recombined fields; used by the
// splitting-faithfulness checks. Each returns the L2 norm of the residual and
// writes the scale of the equation's terms to *scale.
double sav_phi_residual(const ScalarField& phi_nm2, const State& snm1,
                        const State& sn, const State& snp1, const SavWork& w,
                        const ModelParams& mp, double* scale);
double sav_u_residual(const ScalarField& phi_nm2, const State& snm1,
                      const State& sn, const State& snp1, const SavWork& w,
                      const ModelParams& mp, bool ect, double* scale);
double cnlfac_phi_residual(const State& snm1, const State& sn, const State& snp1,
                           const ModelParams& mp, double* scale);
double cnlfac_u_residual(const State& snm1, const State& sn, const State& snp1,
                         const ModelParams& mp, double* scale);

}  // namespace acns
