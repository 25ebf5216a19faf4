// Discrete differential operators on the staggered grid.
//
// The algebra is arranged so that the summation-by-parts identities needed by
// the energy estimates hold exactly (up to roundoff), not just to O(h^2):
//   (grad s, v)  = -(s, div v)          for v with zero wall faces
//   (graddiv v, v) = -||div v||^2
//   (convect_skew(w,v), v) = 0          skew form (w.grad)v + (div w) v / 2
//   (advect_scalar(v,s), g) = (v, transport_adjoint(g,s))
#pragma once

#include "acns/field.hpp"

namespace acns {

// 5-point Laplacian with mirrored (zero-flux) ghosts; symmetric negative
// semidefinite, constants in the nullspace.
ScalarField lap_neumann(const ScalarField& f);

// Componentwise 5-point Laplacian on faces; wall values are enforced through
// reflection ghosts (no-slip), symmetric negative definite on interior faces.
FaceField lap_dirichlet(const FaceField& v);

// Viscous Laplacian used in the momentum equations: identical to
// lap_dirichlet except that the tangential wall rows use the quadratic
// no-slip ghost -2 u1 + u2/3. The reflection ghost has an O(1) flux defect on
// the wall row which leaves a kinked O(h^2) velocity layer at the walls and
// caps the refinement rate of the H1 Cauchy gaps near 1.5; the quadratic
// closure removes the layer. The operator is mildly nonsymmetric at the wall
// rows but its symmetric part stays negative definite, so the viscous pairing
// (visc_lap v, v) < 0 that the energy bound needs still holds exactly.
FaceField visc_lap(const FaceField& v);

// Two-point difference of cell values across interior faces; wall faces 0.
FaceField grad_cc_to_face(const ScalarField& s);

// Two-point difference of face values per cell.
ScalarField div_face_to_cc(const FaceField& v);

// grad(div v)
FaceField graddiv(const FaceField& v);

// (w.grad)s at cell centers: face velocities averaged to the center, centered
// differences of the mirrored scalar.
ScalarField advect_scalar(const FaceField& w, const ScalarField& s);

// Adjoint of advect_scalar in its velocity slot: the face field satisfying
// (advect_scalar(v,s), g) = (v, transport_adjoint(g,s)) exactly. This is the
// discretization used for the phase-stress coupling g*grad(s) wherever that
// pairing must cancel in the energy identity.
FaceField transport_adjoint(const ScalarField& g, const ScalarField& s);

// mu*grad(phi) on faces: face gradient of phi times the two-point average of
// mu; wall faces 0.
FaceField mu_grad_phi(const ScalarField& mu, const ScalarField& phi);

// Centered advection (w.grad)v on faces, transverse velocity averaged from
// the four surrounding faces, reflection ghosts at the walls.
FaceField convect_plain(const FaceField& w, const FaceField& v);

// Transpose of convect_plain in its second argument, on the interior-face
// space (wall faces of the result are zero).
FaceField convect_plain_transpose(const FaceField& w, const FaceField& g);

// (C(w) - C(w)^T)/2: second-order form of (w.grad)v + (div w) v / 2 whose
// pairing with v vanishes identically.
FaceField convect_skew(const FaceField& w, const FaceField& v);

// |v|_{H1}^2 = -(lap_dirichlet v, v), the seminorm the viscous term dissipates.
double h1_seminorm_sq(const FaceField& v);

// ||grad s||^2 via the face gradient of the mirrored scalar.
double grad_norm_sq(const ScalarField& s);

// Single source of truth for the convection stencil: emits every matrix entry
// of C(w) over interior faces. fn(x_row, ri, rj, x_col, ci, cj, value) where
// x_row/x_col flag the velocity component of the row/column face.
template <class F>
void for_each_convection_entry(const FaceField& w, F&& fn) {
    const Grid& g = w.grid;
    const double cx = 1.0 / (2.0 * g.hx), cy = 1.0 / (2.0 * g.hy);
    // x-component rows
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            const double wxh = w.x(i, j);
            const double wyh = 0.25 * (w.y(i - 1, j) + w.y(i, j) +
                                       w.y(i - 1, j + 1) + w.y(i, j + 1));
            const double a = wxh * cx, b = wyh * cy;
            if (i + 1 <= g.nx - 1) fn(true, i, j, true, i + 1, j, a);
            if (i - 1 >= 1) fn(true, i, j, true, i - 1, j, -a);
            if (j + 1 <= g.ny - 1)
                fn(true, i, j, true, i, j + 1, b);
            else
                fn(true, i, j, true, i, j, -b);  // ghost = -v at the top wall
            if (j - 1 >= 0)
                fn(true, i, j, true, i, j - 1, -b);
            else
                fn(true, i, j, true, i, j, b);  // ghost = -v at the bottom wall
        }
    // y-component rows
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double wxh = 0.25 * (w.x(i, j - 1) + w.x(i + 1, j - 1) +
                                       w.x(i, j) + w.x(i + 1, j));
            const double wyh = w.y(i, j);
            const double a = wxh * cx, b = wyh * cy;
            if (i + 1 <= g.nx - 1)
                fn(false, i, j, false, i + 1, j, a);
            else
                fn(false, i, j, false, i, j, -a);
            if (i - 1 >= 0)
                fn(false, i, j, false, i - 1, j, -a);
            else
                fn(false, i, j, false, i, j, a);
            if (j + 1 <= g.ny - 1) fn(false, i, j, false, i, j + 1, b);
            if (j - 1 >= 1) fn(false, i, j, false, i, j - 1, -b);
        }
}

}  // namespace acns
