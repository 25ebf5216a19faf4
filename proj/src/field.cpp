#include "acns/field.hpp"

namespace acns {

GhostedScalar fill_ghost(const ScalarField& f) {
    const Grid& g = f.grid;
    GhostedScalar out(g);
    for (int j = -1; j <= g.ny; ++j)
        for (int i = -1; i <= g.nx; ++i) out.at(i, j) = f.g(i, j);
    return out;
}

double inner(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "inner(scalar)");
    double s = 0.0;
    const int n = a.grid.n_cells();
    for (int k = 0; k < n; ++k) s += a.v[k] * b.v[k];
    return s * a.grid.cell_area();
}

double inner(const FaceField& a, const FaceField& b) {
    require_same_grid(a.grid, b.grid, "inner(face)");
    const Grid& g = a.grid;
    double s = 0.0;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i <= g.nx; ++i) {
            double w = (i == 0 || i == g.nx) ? 0.5 : 1.0;
            s += w * a.x(i, j) * b.x(i, j);
        }
    for (int j = 0; j <= g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double w = (j == 0 || j == g.ny) ? 0.5 : 1.0;
            s += w * a.y(i, j) * b.y(i, j);
        }
    return s * g.cell_area();
}

double mean(const ScalarField& a) {
    double s = 0.0;
    for (double x : a.v) s += x;
    return s / a.v.size();
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "scalar +");
    ScalarField r = a;
    for (size_t k = 0; k < r.v.size(); ++k) r.v[k] += b.v[k];
    return r;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "scalar -");
    ScalarField r = a;
    for (size_t k = 0; k < r.v.size(); ++k) r.v[k] -= b.v[k];
    return r;
}

ScalarField operator*(double s, const ScalarField& a) {
    ScalarField r = a;
    for (double& x : r.v) x *= s;
    return r;
}

FaceField operator+(const FaceField& a, const FaceField& b) {
    require_same_grid(a.grid, b.grid, "face +");
    FaceField r = a;
    for (size_t k = 0; k < r.ux.size(); ++k) r.ux[k] += b.ux[k];
    for (size_t k = 0; k < r.uy.size(); ++k) r.uy[k] += b.uy[k];
    return r;
}

FaceField operator-(const FaceField& a, const FaceField& b) {
    require_same_grid(a.grid, b.grid, "face -");
    FaceField r = a;
    for (size_t k = 0; k < r.ux.size(); ++k) r.ux[k] -= b.ux[k];
    for (size_t k = 0; k < r.uy.size(); ++k) r.uy[k] -= b.uy[k];
    return r;
}

FaceField operator*(double s, const FaceField& a) {
    FaceField r = a;
    for (double& x : r.ux) x *= s;
    for (double& x : r.uy) x *= s;
    return r;
}

void axpy(double a, const ScalarField& x, ScalarField& y) {
    require_same_grid(x.grid, y.grid, "axpy(scalar)");
    for (size_t k = 0; k < y.v.size(); ++k) y.v[k] += a * x.v[k];
}

void axpy(double a, const FaceField& x, FaceField& y) {
    require_same_grid(x.grid, y.grid, "axpy(face)");
    for (size_t k = 0; k < y.ux.size(); ++k) y.ux[k] += a * x.ux[k];
    for (size_t k = 0; k < y.uy.size(); ++k) y.uy[k] += a * x.uy[k];
}

bool all_finite(const ScalarField& a) {
    for (double x : a.v)
        if (!std::isfinite(x)) return false;
    return true;
}

bool all_finite(const FaceField& a) {
    for (double x : a.ux)
        if (!std::isfinite(x)) return false;
    for (double x : a.uy)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace acns
