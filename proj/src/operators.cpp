#include "acns/operators.hpp"

namespace acns {

ScalarField lap_neumann(const ScalarField& f) {
    const Grid& g = f.grid;
    ScalarField out(g, f.bc);
    const double ix2 = 1.0 / (g.hx * g.hx), iy2 = 1.0 / (g.hy * g.hy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double c = f(i, j);
            out(i, j) = (f.g(i + 1, j) - 2.0 * c + f.g(i - 1, j)) * ix2 +
                        (f.g(i, j + 1) - 2.0 * c + f.g(i, j - 1)) * iy2;
        }
    return out;
}

FaceField lap_dirichlet(const FaceField& v) {
    const Grid& g = v.grid;
    FaceField out(g);
    const double ix2 = 1.0 / (g.hx * g.hx), iy2 = 1.0 / (g.hy * g.hy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            const double c = v.x(i, j);
            const double s = (j > 0) ? v.x(i, j - 1) : -c;        // reflection
            const double n = (j < g.ny - 1) ? v.x(i, j + 1) : -c; // ghosts
            out.x(i, j) = (v.x(i + 1, j) - 2.0 * c + v.x(i - 1, j)) * ix2 +
                          (n - 2.0 * c + s) * iy2;
        }
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double c = v.y(i, j);
            const double w = (i > 0) ? v.y(i - 1, j) : -c;
            const double e = (i < g.nx - 1) ? v.y(i + 1, j) : -c;
            out.y(i, j) = (e - 2.0 * c + w) * ix2 +
                          (v.y(i, j + 1) - 2.0 * c + v.y(i, j - 1)) * iy2;
        }
    return out;
}

FaceField visc_lap(const FaceField& v) {
    const Grid& g = v.grid;
    FaceField out(g);
    const double ix2 = 1.0 / (g.hx * g.hx), iy2 = 1.0 / (g.hy * g.hy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i) {
            const double c = v.x(i, j);
            double s, n;
            if (j > 0)
                s = v.x(i, j - 1);
            else
                s = -2.0 * c + v.x(i, 1) / 3.0;  // quadratic no-slip ghost
            if (j < g.ny - 1)
                n = v.x(i, j + 1);
            else
                n = -2.0 * c + v.x(i, g.ny - 2) / 3.0;
            out.x(i, j) = (v.x(i + 1, j) - 2.0 * c + v.x(i - 1, j)) * ix2 +
                          (n - 2.0 * c + s) * iy2;
        }
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double c = v.y(i, j);
            double w, e;
            if (i > 0)
                w = v.y(i - 1, j);
            else
                w = -2.0 * c + v.y(1, j) / 3.0;
            if (i < g.nx - 1)
                e = v.y(i + 1, j);
            else
                e = -2.0 * c + v.y(g.nx - 2, j) / 3.0;
            out.y(i, j) = (e - 2.0 * c + w) * ix2 +
                          (v.y(i, j + 1) - 2.0 * c + v.y(i, j - 1)) * iy2;
        }
    return out;
}

FaceField grad_cc_to_face(const ScalarField& s) {
    const Grid& g = s.grid;
    FaceField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i)
            out.x(i, j) = (s(i, j) - s(i - 1, j)) / g.hx;
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out.y(i, j) = (s(i, j) - s(i, j - 1)) / g.hy;
    return out;
}

ScalarField div_face_to_cc(const FaceField& v) {
    const Grid& g = v.grid;
    ScalarField out(g, ScalarBc::none);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out(i, j) = (v.x(i + 1, j) - v.x(i, j)) / g.hx +
                        (v.y(i, j + 1) - v.y(i, j)) / g.hy;
    return out;
}

FaceField graddiv(const FaceField& v) { return grad_cc_to_face(div_face_to_cc(v)); }

ScalarField advect_scalar(const FaceField& w, const ScalarField& s) {
    require_same_grid(w.grid, s.grid, "advect_scalar");
    const Grid& g = s.grid;
    ScalarField out(g, ScalarBc::none);
    const double cx = 1.0 / (2.0 * g.hx), cy = 1.0 / (2.0 * g.hy);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double wx = 0.5 * (w.x(i, j) + w.x(i + 1, j));
            const double wy = 0.5 * (w.y(i, j) + w.y(i, j + 1));
            out(i, j) = wx * (s.g(i + 1, j) - s.g(i - 1, j)) * cx +
                        wy * (s.g(i, j + 1) - s.g(i, j - 1)) * cy;
        }
    return out;
}

FaceField transport_adjoint(const ScalarField& gc, const ScalarField& s) {
    require_same_grid(gc.grid, s.grid, "transport_adjoint");
    const Grid& g = s.grid;
    const double cx = 1.0 / (2.0 * g.hx), cy = 1.0 / (2.0 * g.hy);
    // cell-centered centered gradient of the mirrored scalar
    auto dx = [&](int i, int j) { return (s.g(i + 1, j) - s.g(i - 1, j)) * cx; };
    auto dy = [&](int i, int j) { return (s.g(i, j + 1) - s.g(i, j - 1)) * cy; };
    FaceField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i)
            out.x(i, j) = 0.5 * (gc(i - 1, j) * dx(i - 1, j) + gc(i, j) * dx(i, j));
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out.y(i, j) = 0.5 * (gc(i, j - 1) * dy(i, j - 1) + gc(i, j) * dy(i, j));
    return out;
}

FaceField mu_grad_phi(const ScalarField& mu, const ScalarField& phi) {
    require_same_grid(mu.grid, phi.grid, "mu_grad_phi");
    const Grid& g = phi.grid;
    FaceField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 1; i < g.nx; ++i)
            out.x(i, j) = 0.5 * (mu(i - 1, j) + mu(i, j)) *
                          (phi(i, j) - phi(i - 1, j)) / g.hx;
    for (int j = 1; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out.y(i, j) = 0.5 * (mu(i, j - 1) + mu(i, j)) *
                          (phi(i, j) - phi(i, j - 1)) / g.hy;
    return out;
}

FaceField convect_plain(const FaceField& w, const FaceField& v) {
    require_same_grid(w.grid, v.grid, "convect_plain");
    FaceField out(w.grid);
    for_each_convection_entry(w, [&](bool xr, int ri, int rj, bool xc, int ci,
                                     int cj, double a) {
        double val = xc ? v.x(ci, cj) : v.y(ci, cj);
        if (xr)
            out.x(ri, rj) += a * val;
        else
            out.y(ri, rj) += a * val;
    });
    return out;
}

FaceField convect_plain_transpose(const FaceField& w, const FaceField& gf) {
    require_same_grid(w.grid, gf.grid, "convect_plain_transpose");
    FaceField out(w.grid);
    for_each_convection_entry(w, [&](bool xr, int ri, int rj, bool xc, int ci,
                                     int cj, double a) {
        double val = xr ? gf.x(ri, rj) : gf.y(ri, rj);
        if (xc)
            out.x(ci, cj) += a * val;
        else
            out.y(ci, cj) += a * val;
    });
    return out;
}

FaceField convect_skew(const FaceField& w, const FaceField& v) {
    FaceField c = convect_plain(w, v);
    FaceField ct = convect_plain_transpose(w, v);
    FaceField out(w.grid);
    for (size_t k = 0; k < out.ux.size(); ++k) out.ux[k] = 0.5 * (c.ux[k] - ct.ux[k]);
    for (size_t k = 0; k < out.uy.size(); ++k) out.uy[k] = 0.5 * (c.uy[k] - ct.uy[k]);
    return out;
}

double h1_seminorm_sq(const FaceField& v) { return -inner(lap_dirichlet(v), v); }

double grad_norm_sq(const ScalarField& s) {
    FaceField gr = grad_cc_to_face(s);
    return inner(gr, gr);
}

}  // namespace acns
