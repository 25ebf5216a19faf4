#include "acns/schemes.hpp"

#include <limits>
#include <cmath>
#include <future>
#include <sstream>

namespace acns {

const char* scheme_name(SchemeKind k) {
    switch (k) {
        case SchemeKind::bootstrap: return "bootstrap";
        case SchemeKind::cnlfac: return "cnlfac";
        case SchemeKind::acsav: return "acsav";
        case SchemeKind::acsav_ect: return "acsav-ect";
    }
    return "?";
}

SchemeKind scheme_from_name(const std::string& s) {
    if (s == "bootstrap") return SchemeKind::bootstrap;
    if (s == "cnlfac") return SchemeKind::cnlfac;
    if (s == "acsav") return SchemeKind::acsav;
    if (s == "acsav-ect" || s == "acsav_ect") return SchemeKind::acsav_ect;
    throw std::invalid_argument("unknown scheme: " + s);
}

namespace {

ScalarField pw_mul(const ScalarField& a, const ScalarField& b) {
    ScalarField r = a;
    for (size_t k = 0; k < r.v.size(); ++k) r.v[k] *= b.v[k];
    return r;
}

// diagonal of the scalar three-level operator: 1/(2dt) + lambda M phi_n^2/eta^2
std::vector<double> scalar_diag(const ScalarField& phi_n, const ModelParams& mp) {
    const double c = mp.lambda * mp.mobility / (mp.eta * mp.eta);
    std::vector<double> a(phi_n.v.size());
    for (size_t k = 0; k < a.size(); ++k)
        a[k] = 1.0 / (2.0 * mp.dt) + c * phi_n.v[k] * phi_n.v[k];
    return a;
}

// shared right-hand side of the hatted/coupled phase equation
ScalarField phase_rhs_base(const State& snm1, const State& sn,
                           const ModelParams& mp) {
    const double dt = mp.dt, lamM = mp.lambda * mp.mobility;
    const double ie2 = 1.0 / (mp.eta * mp.eta);
    ScalarField b = (1.0 / (2.0 * dt)) * snm1.phi;
    axpy(0.5 * lamM, lap_neumann(snm1.phi), b);
    axpy(lamM * ie2, pw_mul(pw_mul(sn.phi, sn.phi), snm1.phi), b);
    axpy(-lamM, pw_mul(sn.phi, snm1.q), b);
    return b;
}

// known part of the velocity equation: the three-level terms of u^{n-1} plus
// the lagged pressure gradient (skew convection added by the caller if the
// scheme treats it implicitly)
FaceField velocity_rhs_base(const State& snm1, const State& sn,
                            const ModelParams& mp) {
    const double dt = mp.dt;
    FaceField b = (1.0 / (2.0 * dt)) * snm1.u;
    axpy(-mp.beta / dt, graddiv(snm1.u), b);
    axpy(0.5 * mp.nu, visc_lap(snm1.u), b);
    axpy(-1.0, grad_cc_to_face(sn.p), b);
    return b;
}

void require_converged(const SolveReport& rep, const char* what) {
    if (!rep.converged) {
        std::ostringstream os;
        os << what << ": linear solve failed (iters " << rep.iterations
           << ", rel residual " << rep.rel_residual << ")";
        throw StepError(os.str());
    }
}

std::vector<double> lu_solve_checked(const LuSolver& lu,
                                     const std::vector<double>& b,
                                     const char* what) {
    std::vector<double> x = lu.solve(b);
    if (!(lu.last_rel_residual() <= 1e-9)) {
        std::ostringstream os;
        os << what << ": direct solve residual " << lu.last_rel_residual();
        throw StepError(os.str());
    }
    return x;
}

}  // namespace

ScalarField leapfrog_q_update(const ScalarField& q_nm1, const ScalarField& phi_n,
                              const ScalarField& phi_np1,
                              const ScalarField& phi_nm1, double eta) {
    ScalarField q = q_nm1;
    const double c = 2.0 / (eta * eta);
    for (size_t k = 0; k < q.v.size(); ++k)
        q.v[k] += c * phi_n.v[k] * (phi_np1.v[k] - phi_nm1.v[k]);
    return q;
}

ScalarField pressure_update(const ScalarField& p_nm1, const FaceField& u_n,
                            double alpha, double dt) {
    ScalarField p = p_nm1;
    ScalarField d = div_face_to_cc(u_n);
    for (size_t k = 0; k < p.v.size(); ++k) p.v[k] -= d.v[k] / (alpha * dt);
    return p;
}

// ---------------------------------------------------------------------------
// Stokes initializer
// ---------------------------------------------------------------------------

void stokes_init(const ScalarField& phi0, const ModelParams& mp, FaceField& u0,
                 ScalarField& p0, const SolveOpts& so, double div_tol) {
    const Grid& g = phi0.grid;
    OperatorCache oc(g);
    ScalarField mu0 = -mp.lambda * lap_neumann(phi0);
    for (size_t k = 0; k < mu0.v.size(); ++k)
        mu0.v[k] += mp.lambda * double_well_fprime(phi0.v[k], mp.eta);
    FaceField force = mu_grad_phi(mu0, phi0);

    const double gamma = 1e4 * mp.nu;
    CsrMatrix A = assemble_velocity_op_plain(oc, nullptr, nullptr, 0.0, gamma,
                                             mp.nu, 0.0);
    // the grad-div penalty dominates the spectrum, which caps the attainable
    // Krylov residual; accuracy is controlled by the outer penalty iteration
    (void)so;
    LuSolver lu(A);
    p0 = ScalarField(g, ScalarBc::none);
    u0 = FaceField(g);
    double d_prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 40; ++it) {
        FaceField rhs = force - grad_cc_to_face(p0);
        std::vector<double> x =
            lu_solve_checked(lu, oc.dofs.gather(rhs), "stokes_init");
        u0 = oc.dofs.scatter(x);
        ScalarField d = div_face_to_cc(u0);
        axpy(-gamma, d, p0);
        double dn = norm(d);
        if (dn <= div_tol || dn > 0.5 * d_prev) break;  // done or at the floor
        d_prev = dn;
    }
    if (norm(div_face_to_cc(u0)) > div_tol)
        throw StepError("stokes_init: grad-div penalty failed to reach the divergence tolerance");
    double pm = mean(p0);
    for (double& v : p0.v) v -= pm;
}

// ---------------------------------------------------------------------------
// Bootstrap (two-level, first order, Picard + Newton)
// ---------------------------------------------------------------------------

BootstrapStepper::BootstrapStepper(const Grid& g, const ModelParams& mp,
                                   SolveOpts so, double picard_tol,
                                   int picard_maxit)
    : mp_(mp), so_(so), picard_tol_(picard_tol), picard_maxit_(picard_maxit),
      oc_(g) {
    mp_.validate();
}

State BootstrapStepper::step(const State& sn, BootstrapReport* rep) {
    const Grid& g = sn.grid();
    const double dt = mp_.dt, lamM = mp_.lambda * mp_.mobility;
    const double ie2 = 1.0 / (mp_.eta * mp_.eta);
    // milder penalty than the Stokes initializer: keeps the velocity systems
    // well conditioned, the outer loop contracts the divergence by ~1e-2/pass
    const double gamma = 1e2 * mp_.nu;
    BootstrapReport local;
    BootstrapReport& rp = rep ? *rep : local;

    CsrMatrix T = assemble_transport(oc_.dofs, sn.phi);
    CsrMatrix Avel = assemble_velocity_op_plain(oc_, &sn.u, &T, 1.0 / dt, gamma,
                                                mp_.nu, 1.0 / mp_.mobility);
    LuSolver lu_vel(Avel);  // constant across Picard and penalty passes

    FaceField u_fix = sn.u;
    ScalarField phi_new = sn.phi;
    ScalarField p_acc(g, ScalarBc::none);
    bool done = false;

    // residual scale for the Newton stopping test
    double fscale = norm(sn.phi) / dt + lamM * norm(lap_neumann(sn.phi)) + 1.0;

    for (int k = 0; k < picard_maxit_ && !done; ++k) {
        // phase equation, implicit double well, frozen velocity
        ScalarField adv = advect_scalar(u_fix, sn.phi);
        ScalarField phi = phi_new;
        bool newton_ok = false;
        for (int m = 0; m < 25; ++m) {
            ScalarField F = (1.0 / dt) * (phi - sn.phi) + adv;
            axpy(-lamM, lap_neumann(phi), F);
            for (size_t c = 0; c < F.v.size(); ++c) {
                double a = phi.v[c], b = sn.phi.v[c];
                double f0 = ie2 * (0.5 * (a * a + b * b)) * (0.5 * (a + b)) - ie2 * b;
                F.v[c] += lamM * f0;
            }
            if (norm(F) <= 1e-12 * fscale) {
                newton_ok = true;
                break;
            }
            std::vector<double> jd(g.n_cells());
            for (int c = 0; c < g.n_cells(); ++c) {
                double a = phi.v[c], b = sn.phi.v[c];
                jd[c] = 1.0 / dt +
                        lamM * ie2 * (3.0 * a * a + 2.0 * a * b + b * b) * 0.25;
            }
            CsrMatrix J = assemble_scalar_helmholtz(g, jd, lamM);
            for (double& fv : F.v) fv = -fv;
            std::vector<double> delta =
                lu_solve_checked(LuSolver(J), F.v, "bootstrap_step(newton)");
            for (int c = 0; c < g.n_cells(); ++c) phi.v[c] += delta[c];
            ++rp.newton_iters;
        }
        if (!newton_ok)
            throw StepError("bootstrap_step: Newton iteration did not converge");
        phi_new = phi;

        // velocity/pressure by grad-div iterated penalty
        FaceField rhs0 = (1.0 / dt) * sn.u;
        ScalarField dphi = (1.0 / dt) * (phi_new - sn.phi);
        axpy(-1.0 / mp_.mobility, transport_adjoint(dphi, sn.phi), rhs0);
        FaceField u_new(g);
        double d_prev = std::numeric_limits<double>::infinity();
        for (int it = 0; it < 40; ++it) {
            FaceField rhs = rhs0 - grad_cc_to_face(p_acc);
            std::vector<double> xv = lu_solve_checked(
                lu_vel, oc_.dofs.gather(rhs), "bootstrap_step(velocity)");
            u_new = oc_.dofs.scatter(xv);
            ScalarField d = div_face_to_cc(u_new);
            axpy(-gamma, d, p_acc);
            ++rp.penalty_iters;
            double dn = norm(d);
            if (dn <= 1e-12 * std::max(1.0, norm(u_new)) || dn > 0.5 * d_prev)
                break;
            d_prev = dn;
        }

        double upd = norm(u_new - u_fix);
        rp.picard_updates.push_back(upd);
        u_fix = u_new;
        ++rp.picard_iters;
        if (upd < picard_tol_) done = true;
    }
    if (!done) {
        std::ostringstream os;
        os << "bootstrap_step: Picard iteration did not converge; updates:";
        for (double u : rp.picard_updates) os << " " << u;
        throw StepError(os.str());
    }

    State out(g);
    out.phi = phi_new;
    out.q = q_of_phi(phi_new, mp_.eta);
    out.u = u_fix;
    double pm = mean(p_acc);
    out.p = p_acc;
    for (double& v : out.p.v) v -= pm;
    out.t = sn.t + dt;
    out.n = sn.n + 1;
    out.r = std::exp(-out.t / mp_.t_final);
    return out;
}

// ---------------------------------------------------------------------------
// CNLFAC (coupled three-level step, one monolithic solve)
// ---------------------------------------------------------------------------

CnlfacStepper::CnlfacStepper(const Grid& g, const ModelParams& mp, SolveOpts so)
    : mp_(mp), so_(so), oc_(g) {
    mp_.validate();
    vel_const_ = assemble_velocity_op(oc_, nullptr, 1.0 / (2.0 * mp_.dt), 0.0,
                                      mp_.beta / mp_.dt, 0.5 * mp_.nu);
}

State CnlfacStepper::step(const State& snm1, const State& sn) {
    const Grid& g = sn.grid();
    const double dt = mp_.dt, M = mp_.mobility, lamM = mp_.lambda * M;
    const int np = g.n_cells();

    CsrMatrix T = assemble_transport(oc_.dofs, sn.phi);
    CsrMatrix Au = csr_add(1.0, vel_const_, 0.5,
                           assemble_convection_skew(oc_.dofs, sn.u));
    CsrMatrix A = assemble_monolithic(oc_, scalar_diag(sn.phi, mp_), 0.5 * lamM,
                                      T, 0.5, 1.0 / (2.0 * dt * M), Au,
                                      1.0 / (2.0 * M));

    ScalarField b_phi = phase_rhs_base(snm1, sn, mp_);
    axpy(-0.5, advect_scalar(snm1.u, sn.phi), b_phi);

    FaceField b_u = velocity_rhs_base(snm1, sn, mp_);
    axpy(-0.5, convect_skew(sn.u, snm1.u), b_u);
    axpy(1.0 / (2.0 * dt * M), transport_adjoint(snm1.phi, sn.phi), b_u);
    axpy(-1.0 / (2.0 * M),
         transport_adjoint(advect_scalar(snm1.u, sn.phi), sn.phi), b_u);

    std::vector<double> b(np + oc_.dofs.n);
    for (int k = 0; k < np; ++k) b[k] = b_phi.v[k];
    std::vector<double> bu = oc_.dofs.gather(b_u);
    for (int k = 0; k < oc_.dofs.n; ++k) b[np + k] = bu[k];

    std::vector<double> x = lu_solve_checked(LuSolver(A), b, "cnlfac_step");
    report_.iterations = 1;
    report_.rel_residual = 0.0;
    report_.converged = true;

    State out(g);
    out.phi = ScalarField(g, ScalarBc::neumann_zero);
    for (int k = 0; k < np; ++k) out.phi.v[k] = x[k];
    out.u = oc_.dofs.scatter(std::vector<double>(x.begin() + np, x.end()));
    out.q = leapfrog_q_update(snm1.q, sn.phi, out.phi, snm1.phi, mp_.eta);
    out.p = pressure_update(snm1.p, sn.u, mp_.alpha, dt);
    out.t = sn.t + dt;
    out.n = sn.n + 1;
    out.r = std::exp(-out.t / mp_.t_final);
    return out;
}

// ---------------------------------------------------------------------------
// Auxiliary-scalar steppers (implicit or fully explicit convection)
// ---------------------------------------------------------------------------

SavStepper::SavStepper(const Grid& g, const ModelParams& mp, SolveOpts so,
                       bool explicit_convection)
    : mp_(mp), so_(so), ect_(explicit_convection), oc_(g) {
    mp_.validate();
    vel_const_ = assemble_velocity_op(oc_, nullptr, 1.0 / (2.0 * mp_.dt), 0.0,
                                      mp_.beta / mp_.dt, 0.5 * mp_.nu);
    if (ect_)  // no per-step velocity assembly or factorization at all
        lu_const_ = std::make_unique<LuSolver>(vel_const_);
}

State SavStepper::step(const ScalarField& phi_nm2, const State& snm1,
                       const State& sn, SavWork* work) {
    const Grid& g = sn.grid();
    const double dt = mp_.dt, M = mp_.mobility, lamM = mp_.lambda * mp_.mobility;
    const double T = mp_.t_final;
    const double en = std::exp(-sn.t / T);
    if (!(snm1.r > 0.0))
        throw StepError("sav step: auxiliary variable r must stay positive");

    ScalarField adv = advect_scalar(sn.u, sn.phi);
    // lagged chemical potential from the backward-difference transport balance
    ScalarField mu_n(g, ScalarBc::neumann_zero);
    for (int k = 0; k < g.n_cells(); ++k)
        mu_n.v[k] = (-1.0 / M) *
                    ((3.0 * sn.phi.v[k] - 4.0 * snm1.phi.v[k] + phi_nm2.v[k]) /
                         (2.0 * dt) +
                     (sn.r / en) * adv.v[k]);
    FaceField stress = mu_grad_phi(mu_n, sn.phi);

    // the phase and velocity subproblem pairs are independent: run the phase
    // chain concurrently with the velocity chain
    struct PhaseOut {
        ScalarField phi_hat, phi_breve, mu_hat, mu_breve;
    };
    auto phase_chain = [&]() {
        CsrMatrix H =
            assemble_scalar_helmholtz(g, scalar_diag(sn.phi, mp_), 0.5 * lamM);
        LuSolver lu(H);
        PhaseOut out;
        ScalarField b_hat = phase_rhs_base(snm1, sn, mp_);
        out.phi_hat = ScalarField(g);
        out.phi_hat.v = lu_solve_checked(lu, b_hat.v, "sav step (hat phase)");
        ScalarField b_breve = -1.0 * adv;
        out.phi_breve = ScalarField(g);
        out.phi_breve.v = lu_solve_checked(lu, b_breve.v, "sav step (breve phase)");
        out.mu_hat = (-1.0 / (2.0 * dt * M)) * (out.phi_hat - snm1.phi);
        out.mu_breve = (-1.0 / M) * ((1.0 / (2.0 * dt)) * out.phi_breve + adv);
        return out;
    };
    auto phase_future = std::async(std::launch::async, phase_chain);

    FaceField conv(g);
    FaceField b_uhat = velocity_rhs_base(snm1, sn, mp_);
    FaceField b_ubreve = stress;
    if (ect_) {
        conv = convect_plain(sn.u, sn.u);
        axpy(-1.0, conv, b_ubreve);
    } else {
        axpy(-0.5, convect_skew(sn.u, snm1.u), b_uhat);
    }
    FaceField u_hat(g), u_breve(g);
    {
        std::unique_ptr<LuSolver> lu_step;
        const LuSolver* lu = lu_const_.get();
        if (!ect_) {
            CsrMatrix Au = csr_add(1.0, vel_const_, 0.5,
                                   assemble_convection_skew(oc_.dofs, sn.u));
            lu_step = std::make_unique<LuSolver>(Au);
            lu = lu_step.get();
        }
        u_hat = oc_.dofs.scatter(lu_solve_checked(*lu, oc_.dofs.gather(b_uhat),
                                                  "sav step (hat velocity)"));
        u_breve = oc_.dofs.scatter(lu_solve_checked(
            *lu, oc_.dofs.gather(b_ubreve), "sav step (breve velocity)"));
    }
    PhaseOut ph = phase_future.get();

    // scalar balance A V + B = 0; A > 0 is the solvability invariant
    double A = (1.0 / dt + 1.0 / T) * en * en - inner(adv, ph.mu_breve) +
               0.5 * inner(u_breve, stress);
    double B = -(snm1.r / dt) * en - inner(adv, ph.mu_hat) +
               0.5 * inner(u_hat + snm1.u, stress);
    if (ect_) {
        A -= 0.5 * inner(conv, u_breve);
        B -= 0.5 * inner(conv, u_hat + snm1.u);
    }
    if (!(A > 0.0)) {
        std::ostringstream os;
        os << "sav step: solvability invariant violated, A = " << A;
        throw StepError(os.str());
    }
    double V = -B / A;

    State out(g);
    out.phi = ph.phi_hat;
    axpy(V, ph.phi_breve, out.phi);
    out.u = u_hat;
    axpy(V, u_breve, out.u);
    out.q = leapfrog_q_update(snm1.q, sn.phi, out.phi, snm1.phi, mp_.eta);
    out.p = pressure_update(snm1.p, sn.u, mp_.alpha, dt);
    out.r = 2.0 * en * V - snm1.r;
    out.t = sn.t + dt;
    out.n = sn.n + 1;

    if (work) {
        work->phi_hat = ph.phi_hat;
        work->phi_breve = ph.phi_breve;
        work->u_hat = u_hat;
        work->u_breve = u_breve;
        work->mu_hat = ph.mu_hat;
        work->mu_breve = ph.mu_breve;
        work->mu_n = mu_n;
        work->mu_bar = ph.mu_hat;
        axpy(V, ph.mu_breve, work->mu_bar);
        work->V = V;
        work->A = A;
        work->B = B;
    }
    return out;
}

// ---------------------------------------------------------------------------

State bootstrap_step(const State& sn, const ModelParams& mp, const SolveOpts& so,
                     BootstrapReport* rep) {
    BootstrapStepper s(sn.grid(), mp, so);
    return s.step(sn, rep);
}

State cnlfac_step(const State& snm1, const State& sn, const ModelParams& mp,
                  const SolveOpts& so) {
    CnlfacStepper s(sn.grid(), mp, so);
    return s.step(snm1, sn);
}

State acsav_step(const ScalarField& phi_nm2, const State& snm1, const State& sn,
                 const ModelParams& mp, const SolveOpts& so, SavWork* work) {
    SavStepper s(sn.grid(), mp, so, false);
    return s.step(phi_nm2, snm1, sn, work);
}

State acsav_ect_step(const ScalarField& phi_nm2, const State& snm1,
                     const State& sn, const ModelParams& mp, const SolveOpts& so,
                     SavWork* work) {
    SavStepper s(sn.grid(), mp, so, true);
    return s.step(phi_nm2, snm1, sn, work);
}

// ---------------------------------------------------------------------------
// Residuals of the un-split equations on recombined fields
// ---------------------------------------------------------------------------

double sav_phi_residual(const ScalarField& /*phi_nm2*/, const State& snm1,
                        const State& sn, const State& snp1, const SavWork& w,
                        const ModelParams& mp, double* scale) {
    const double dt = mp.dt, M = mp.mobility;
    ScalarField mu_bar = -0.5 * (lap_neumann(snp1.phi) + lap_neumann(snm1.phi));
    ScalarField qmid = 0.5 * (snp1.q + snm1.q);
    mu_bar = mp.lambda * (mu_bar + pw_mul(qmid, sn.phi));
    ScalarField t1 = (1.0 / (2.0 * dt)) * (snp1.phi - snm1.phi);
    ScalarField t2 = w.V * advect_scalar(sn.u, sn.phi);
    ScalarField res = t1 + t2;
    axpy(M, mu_bar, res);
    if (scale) *scale = norm(t1) + norm(t2) + M * norm(mu_bar) + 1e-300;
    return norm(res);
}

double sav_u_residual(const ScalarField& /*phi_nm2*/, const State& snm1,
                      const State& sn, const State& snp1, const SavWork& w,
                      const ModelParams& mp, bool ect, double* scale) {
    const double dt = mp.dt;
    FaceField umid = 0.5 * (snp1.u + snm1.u);
    FaceField t1 = (1.0 / (2.0 * dt)) * (snp1.u - snm1.u);
    FaceField t2 = ect ? w.V * convect_plain(sn.u, sn.u) : convect_skew(sn.u, umid);
    FaceField t3 = (-mp.beta / dt) * (graddiv(snp1.u) - graddiv(snm1.u));
    FaceField t4 = (-mp.nu) * visc_lap(umid);
    FaceField t5 = grad_cc_to_face(sn.p);
    FaceField t6 = (-w.V) * mu_grad_phi(w.mu_n, sn.phi);
    FaceField res = t1 + t2 + t3 + t4 + t5 + t6;
    if (scale)
        *scale = norm(t1) + norm(t2) + norm(t3) + norm(t4) + norm(t5) + norm(t6) +
                 1e-300;
    return norm(res);
}

double cnlfac_phi_residual(const State& snm1, const State& sn, const State& snp1,
                           const ModelParams& mp, double* scale) {
    const double dt = mp.dt, lamM = mp.lambda * mp.mobility;
    const double ie2 = 1.0 / (mp.eta * mp.eta);
    FaceField umid = 0.5 * (snp1.u + snm1.u);
    ScalarField t1 = (1.0 / (2.0 * dt)) * (snp1.phi - snm1.phi);
    ScalarField t2 = advect_scalar(umid, sn.phi);
    ScalarField t3 = (-0.5 * lamM) * (lap_neumann(snp1.phi) + lap_neumann(snm1.phi));
    ScalarField inner_term = ie2 * pw_mul(sn.phi, snp1.phi - snm1.phi) + snm1.q;
    ScalarField t4 = lamM * pw_mul(sn.phi, inner_term);
    ScalarField res = t1 + t2 + t3 + t4;
    if (scale) *scale = norm(t1) + norm(t2) + norm(t3) + norm(t4) + 1e-300;
    return norm(res);
}

double cnlfac_u_residual(const State& snm1, const State& sn, const State& snp1,
                         const ModelParams& mp, double* scale) {
    const double dt = mp.dt, M = mp.mobility;
    FaceField umid = 0.5 * (snp1.u + snm1.u);
    ScalarField phidot = (1.0 / (2.0 * dt)) * (snp1.phi - snm1.phi) +
                         advect_scalar(umid, sn.phi);
    FaceField t1 = (1.0 / (2.0 * dt)) * (snp1.u - snm1.u);
    FaceField t2 = (-mp.beta / dt) * (graddiv(snp1.u) - graddiv(snm1.u));
    FaceField t3 = convect_skew(sn.u, umid);
    FaceField t4 = (-mp.nu) * visc_lap(umid);
    FaceField t5 = grad_cc_to_face(sn.p);
    FaceField t6 = (1.0 / M) * transport_adjoint(phidot, sn.phi);
    FaceField res = t1 + t2 + t3 + t4 + t5 + t6;
    if (scale)
        *scale = norm(t1) + norm(t2) + norm(t3) + norm(t4) + norm(t5) + norm(t6) +
                 1e-300;
    return norm(res);
}

}  // namespace acns
