// Energy, norms, stability-bound bookkeeping, and refinement-level Cauchy
// differences.
#pragma once

#include <vector>

#include "acns/operators.hpp"
#include "acns/params.hpp"

namespace acns {

struct DiagnosticsRow {
    long n = 0;
    double t = 0.0;
    double W = 0.0;            // total energy in the q form
    double kinetic = 0.0;      // ||u||^2 / 2
    double grad_phi_sq = 0.0;  // ||grad phi||^2
    double q_sq = 0.0;         // ||q||^2
    double div_u = 0.0;        // ||div u||
    double r = 1.0;
    double V = 1.0;            // 1.0 for schemes without the auxiliary scalar
    double step_seconds = 0.0;
    double W_F = 0.0;          // energy with the double-well evaluated from phi
};

// W = ||u||^2/2 + lambda (||grad phi||^2/2 + eta^2/4 ||q||^2); this is the
// quantity the stability bounds control, so q is the evolved multiplier, not
// (phi^2-1)/eta^2 recomputed.
double total_energy(const State& s, const ModelParams& mp);

// Same energy with the double well F(phi) = (phi^2-1)^2/(4 eta^2) instead of
// the q term; emitted separately to watch the q/phi drift.
double total_energy_double_well(const State& s, const ModelParams& mp);

DiagnosticsRow make_diag_row(const State& s, const ModelParams& mp, double V,
                             double step_seconds);

// Left side of the long-time stability bound at level N (states N-1, N):
//   lambda/4 (||grad phi||^2 both levels) + lambda eta^2/8 (||q||^2 both)
//   + 1/4 (||u||^2 both) [+ 1/4 (r^2 both) for the auxiliary-variable schemes]
double stability_lhs(const State& prev, const State& cur, const ModelParams& mp,
                     bool with_r);

// Right side evaluated at the starting levels (lo, hi) = (0,1) or (1,2):
// adds the 2*beta ||div u||^2, alpha dt^2 ||p||^2 / 2 terms and the signed
// dt (p_hi, div u_lo)/2 - dt (p_lo, div u_hi)/2 cross terms.
double stability_rhs(const State& lo, const State& hi, const ModelParams& mp,
                     bool with_r);

enum class CauchyKind { grad_phi, grad_u, p_l2 };

// Bilinear prolongation of coarse data to a 2x-refined grid (one-sided linear
// extension at the rim, exact for bilinear fields).
ScalarField prolong_cc(const ScalarField& c, const Grid& fine);
FaceField prolong_face(const FaceField& c, const Grid& fine);

// Norm of (prolonged coarse - fine) at matching physical time; H1 seminorm
// for the gradients, L2 for pressure.
double cauchy_difference(const State& coarse, const State& fine, CauchyKind kind);

inline double cauchy_rate(double d_coarse, double d_fine) {
    return std::log2(d_coarse / d_fine);
}

}  // namespace acns
