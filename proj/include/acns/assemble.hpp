// CSR assembly of the per-step operators. The unknown ordering for velocity
// systems runs over interior faces only (wall faces are data, identically 0);
// the monolithic phase/velocity system orders unknowns [phi; u_x; u_y].
#pragma once

#include "acns/csr.hpp"
#include "acns/field.hpp"
#include "acns/operators.hpp"
#include "acns/params.hpp"

namespace acns {

// Interior-face degree-of-freedom map.
struct VelocityDof {
    Grid grid;
    int n_ux = 0, n_uy = 0, n = 0;

    VelocityDof() = default;
    explicit VelocityDof(const Grid& g)
        : grid(g),
          n_ux((g.nx - 1) * g.ny),
          n_uy(g.nx * (g.ny - 1)),
          n(n_ux + n_uy) {}

    int ux(int i, int j) const { return j * (grid.nx - 1) + (i - 1); }
    int uy(int i, int j) const { return n_ux + (j - 1) * grid.nx + i; }

    std::vector<double> gather(const FaceField& f) const;
    FaceField scatter(const std::vector<double>& x) const;  // wall faces 0
};

// Grid-constant pieces shared by all steppers.
struct OperatorCache {
    VelocityDof dofs;
    CsrMatrix div;        // cells x veldofs
    CsrMatrix neg_gd;     // D^T D  ( = -grad div, SPSD )
    CsrMatrix neg_vlap;   // -lap_dirichlet on veldofs, SPD
    CsrMatrix neg_visc;   // -visc_lap (second-order wall closure)
    CsrMatrix vel_id;     // identity on veldofs
    CsrMatrix neg_slap;   // -lap_neumann on cells, SPSD

    explicit OperatorCache(const Grid& g);
};

// diag(a) + c_lap * (-lap_neumann); SPD for positive a.
CsrMatrix assemble_scalar_helmholtz(const Grid& g, const std::vector<double>& a,
                                    double c_lap);

// Centered advection C(w) on interior-face dofs.
CsrMatrix assemble_convection(const VelocityDof& dofs, const FaceField& w);

// (C - C^T)/2.
CsrMatrix assemble_convection_skew(const VelocityDof& dofs, const FaceField& w);

// Transport matrix T: veldofs -> cells, row c holds the coefficients of
// advect_scalar(., s) so that T v = advect_scalar(v, s) for admissible v.
CsrMatrix assemble_transport(const VelocityDof& dofs, const ScalarField& s);

// sigma I + c_skew*S(w) + c_gd*D^T D + c_visc*(-lap); pass c_skew = 0 to get
// the symmetric operator of the explicit-convection velocity solves.
CsrMatrix assemble_velocity_op(const OperatorCache& oc, const FaceField* w,
                               double sigma, double c_skew, double c_gd,
                               double c_visc);

// sigma I + C(w) + c_gd*D^T D + c_visc*(-lap) + c_tt*T^T T  (bootstrap /
// penalized saddle solves; any of w, T may be absent).
CsrMatrix assemble_velocity_op_plain(const OperatorCache& oc, const FaceField* w,
                                     const CsrMatrix* transport, double sigma,
                                     double c_gd, double c_visc, double c_tt);

// Monolithic three-level phase/velocity matrix:
//   [ diag(a) + c_lap*(-L)      c_phi_u * T        ]
//   [ c_u_phi * T^T             A_u + c_tt*T^T T   ]
CsrMatrix assemble_monolithic(const OperatorCache& oc,
                              const std::vector<double>& a, double c_lap,
                              const CsrMatrix& transport, double c_phi_u,
                              double c_u_phi, const CsrMatrix& a_u, double c_tt);

}  // namespace acns
