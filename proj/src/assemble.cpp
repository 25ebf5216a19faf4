#include "acns/assemble.hpp"

namespace acns {

std::vector<double> VelocityDof::gather(const FaceField& f) const {
    std::vector<double> x(n);
    const Grid& g = grid;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) x[ux(i, j)] = f.x(i, j);
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) x[uy(i, j)] = f.y(i, j);
    return x;
}

FaceField VelocityDof::scatter(const std::vector<double>& x) const {
    FaceField f(grid);
    const Grid& g = grid;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) f.x(i, j) = x[ux(i, j)];
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f.y(i, j) = x[uy(i, j)];
    return f;
}

namespace {

CsrMatrix assemble_div(const VelocityDof& dofs) {
    const Grid& g = dofs.grid;
    CsrBuilder b(g.n_cells(), dofs.n);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            int r = g.cell(i, j);
            if (i + 1 <= g.nx - 1) b.add(r, dofs.ux(i + 1, j), 1.0 / g.hx);
            if (i >= 1) b.add(r, dofs.ux(i, j), -1.0 / g.hx);
            if (j + 1 <= g.ny - 1) b.add(r, dofs.uy(i, j + 1), 1.0 / g.hy);
            if (j >= 1) b.add(r, dofs.uy(i, j), -1.0 / g.hy);
        }
    return b.compress();
}

CsrMatrix assemble_neg_visc(const VelocityDof& dofs) {
    const Grid& g = dofs.grid;
    const double ix2 = 1.0 / (g.hx * g.hx), iy2 = 1.0 / (g.hy * g.hy);
    CsrBuilder b(dofs.n, dofs.n);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            int r = dofs.ux(i, j);
            b.add(r, r, 2.0 * ix2);
            if (i + 1 <= g.nx - 1) b.add(r, dofs.ux(i + 1, j), -ix2);
            if (i - 1 >= 1) b.add(r, dofs.ux(i - 1, j), -ix2);
            if (j == 0 || j == g.ny - 1) {  // quadratic no-slip closure
                int other = (j == 0) ? 1 : g.ny - 2;
                b.add(r, r, 4.0 * iy2);
                b.add(r, dofs.ux(i, other), -(4.0 / 3.0) * iy2);
            } else {
                b.add(r, r, 2.0 * iy2);
                b.add(r, dofs.ux(i, j + 1), -iy2);
                b.add(r, dofs.ux(i, j - 1), -iy2);
            }
        }
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            int r = dofs.uy(i, j);
            if (i == 0 || i == g.nx - 1) {
                int other = (i == 0) ? 1 : g.nx - 2;
                b.add(r, r, 4.0 * ix2);
                b.add(r, dofs.uy(other, j), -(4.0 / 3.0) * ix2);
            } else {
                b.add(r, r, 2.0 * ix2);
                b.add(r, dofs.uy(i + 1, j), -ix2);
                b.add(r, dofs.uy(i - 1, j), -ix2);
            }
            b.add(r, r, 2.0 * iy2);
            if (j + 1 <= g.ny - 1) b.add(r, dofs.uy(i, j + 1), -iy2);
            if (j - 1 >= 1) b.add(r, dofs.uy(i, j - 1), -iy2);
        }
    return b.compress();
}

CsrMatrix assemble_neg_vlap(const VelocityDof& dofs) {
    const Grid& g = dofs.grid;
    const double ix2 = 1.0 / (g.hx * g.hx), iy2 = 1.0 / (g.hy * g.hy);
    CsrBuilder b(dofs.n, dofs.n);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            int r = dofs.ux(i, j);
            b.add(r, r, 2.0 * ix2);  // x-neighbors may be wall data (0)
            if (i + 1 <= g.nx - 1) b.add(r, dofs.ux(i + 1, j), -ix2);
            if (i - 1 >= 1) b.add(r, dofs.ux(i - 1, j), -ix2);
            bool wall = (j == 0) || (j == g.ny - 1);
            b.add(r, r, wall ? 3.0 * iy2 : 2.0 * iy2);  // reflection ghost
            if (j + 1 <= g.ny - 1) b.add(r, dofs.ux(i, j + 1), -iy2);
            if (j - 1 >= 0) b.add(r, dofs.ux(i, j - 1), -iy2);
        }
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            int r = dofs.uy(i, j);
            bool wall = (i == 0) || (i == g.nx - 1);
            b.add(r, r, wall ? 3.0 * ix2 : 2.0 * ix2);
            if (i + 1 <= g.nx - 1) b.add(r, dofs.uy(i + 1, j), -ix2);
            if (i - 1 >= 0) b.add(r, dofs.uy(i - 1, j), -ix2);
            b.add(r, r, 2.0 * iy2);
            if (j + 1 <= g.ny - 1) b.add(r, dofs.uy(i, j + 1), -iy2);
            if (j - 1 >= 1) b.add(r, dofs.uy(i, j - 1), -iy2);
        }
    return b.compress();
}

void add_block(CsrBuilder& b, int r0, int c0, const CsrMatrix& m, double s) {
    for (int r = 0; r < m.rows; ++r)
        for (int k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k)
            b.add(r0 + r, c0 + m.col[k], s * m.val[k]);
}

}  // namespace

OperatorCache::OperatorCache(const Grid& g) : dofs(g) {
    div = assemble_div(dofs);
    neg_gd = csr_multiply(csr_transpose(div), div);
    neg_vlap = assemble_neg_vlap(dofs);
    neg_visc = assemble_neg_visc(dofs);
    vel_id = csr_identity(dofs.n);
    // -lap_neumann as a graph Laplacian over interior cell faces
    CsrBuilder b(g.n_cells(), g.n_cells());
    const double ix2 = 1.0 / (g.hx * g.hx), iy2 = 1.0 / (g.hy * g.hy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            if (i + 1 < g.nx) {
                int a = g.cell(i, j), c = g.cell(i + 1, j);
                b.add(a, a, ix2);
                b.add(c, c, ix2);
                b.add(a, c, -ix2);
                b.add(c, a, -ix2);
            }
            if (j + 1 < g.ny) {
                int a = g.cell(i, j), c = g.cell(i, j + 1);
                b.add(a, a, iy2);
                b.add(c, c, iy2);
                b.add(a, c, -iy2);
                b.add(c, a, -iy2);
            }
        }
    neg_slap = b.compress();
}

CsrMatrix assemble_scalar_helmholtz(const Grid& g, const std::vector<double>& a,
                                    double c_lap) {
    CsrBuilder b(g.n_cells(), g.n_cells());
    const double ix2 = c_lap / (g.hx * g.hx), iy2 = c_lap / (g.hy * g.hy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            int r = g.cell(i, j);
            b.add(r, r, a[r]);
            double d = 0.0;
            if (i + 1 < g.nx) {
                b.add(r, g.cell(i + 1, j), -ix2);
                d += ix2;
            }
            if (i - 1 >= 0) {
                b.add(r, g.cell(i - 1, j), -ix2);
                d += ix2;
            }
            if (j + 1 < g.ny) {
                b.add(r, g.cell(i, j + 1), -iy2);
                d += iy2;
            }
            if (j - 1 >= 0) {
                b.add(r, g.cell(i, j - 1), -iy2);
                d += iy2;
            }
            b.add(r, r, d);
        }
    return b.compress();
}

CsrMatrix assemble_convection(const VelocityDof& dofs, const FaceField& w) {
    CsrBuilder b(dofs.n, dofs.n);
    for_each_convection_entry(w, [&](bool xr, int ri, int rj, bool xc, int ci,
                                     int cj, double a) {
        int r = xr ? dofs.ux(ri, rj) : dofs.uy(ri, rj);
        int c = xc ? dofs.ux(ci, cj) : dofs.uy(ci, cj);
        b.add(r, c, a);
    });
    return b.compress();
}

CsrMatrix assemble_convection_skew(const VelocityDof& dofs, const FaceField& w) {
    CsrMatrix c = assemble_convection(dofs, w);
    return csr_add(0.5, c, -0.5, csr_transpose(c));
}

CsrMatrix assemble_transport(const VelocityDof& dofs, const ScalarField& s) {
    const Grid& g = dofs.grid;
    const double cx = 1.0 / (2.0 * g.hx), cy = 1.0 / (2.0 * g.hy);
    CsrBuilder b(g.n_cells(), dofs.n);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            int r = g.cell(i, j);
            double dx = (s.g(i + 1, j) - s.g(i - 1, j)) * cx;
            double dy = (s.g(i, j + 1) - s.g(i, j - 1)) * cy;
            if (i >= 1) b.add(r, dofs.ux(i, j), 0.5 * dx);
            if (i + 1 <= g.nx - 1) b.add(r, dofs.ux(i + 1, j), 0.5 * dx);
            if (j >= 1) b.add(r, dofs.uy(i, j), 0.5 * dy);
            if (j + 1 <= g.ny - 1) b.add(r, dofs.uy(i, j + 1), 0.5 * dy);
        }
    return b.compress();
}

CsrMatrix assemble_velocity_op(const OperatorCache& oc, const FaceField* w,
                               double sigma, double c_skew, double c_gd,
                               double c_visc) {
    CsrMatrix m = csr_add(sigma, oc.vel_id, c_gd, oc.neg_gd);
    m = csr_add(1.0, m, c_visc, oc.neg_visc);
    if (w && c_skew != 0.0)
        m = csr_add(1.0, m, c_skew, assemble_convection_skew(oc.dofs, *w));
    return m;
}

CsrMatrix assemble_velocity_op_plain(const OperatorCache& oc, const FaceField* w,
                                     const CsrMatrix* transport, double sigma,
                                     double c_gd, double c_visc, double c_tt) {
    CsrMatrix m = csr_add(sigma, oc.vel_id, c_gd, oc.neg_gd);
    m = csr_add(1.0, m, c_visc, oc.neg_visc);
    if (w) m = csr_add(1.0, m, 1.0, assemble_convection(oc.dofs, *w));
    if (transport && c_tt != 0.0)
        m = csr_add(1.0, m, c_tt,
                    csr_multiply(csr_transpose(*transport), *transport));
    return m;
}

CsrMatrix assemble_monolithic(const OperatorCache& oc,
                              const std::vector<double>& a, double c_lap,
                              const CsrMatrix& transport, double c_phi_u,
                              double c_u_phi, const CsrMatrix& a_u, double c_tt) {
    const Grid& g = oc.dofs.grid;
    const int np = g.n_cells(), nv = oc.dofs.n;
    CsrBuilder b(np + nv, np + nv);
    add_block(b, 0, 0, assemble_scalar_helmholtz(g, a, c_lap), 1.0);
    add_block(b, 0, np, transport, c_phi_u);
    CsrMatrix tt = csr_transpose(transport);
    add_block(b, np, 0, tt, c_u_phi);
    add_block(b, np, np, a_u, 1.0);
    if (c_tt != 0.0) add_block(b, np, np, csr_multiply(tt, transport), c_tt);
    return b.compress();
}

}  // namespace acns
