// Discrete field containers and L2 inner products.
//
// ScalarField holds cell-centered data (phi, q, p, mu, ...). FaceField holds
// the two staggered velocity components; its boundary (normal) faces are kept
// at exactly zero for no-penetration walls. Neumann scalars use a mirrored
// ghost layer of depth 1; tangential no-slip for velocities is realized with
// reflection ghosts inside the operators.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "acns/grid.hpp"

namespace acns {

enum class ScalarBc { neumann_zero, none };

struct ScalarField {
    Grid grid;
    ScalarBc bc = ScalarBc::neumann_zero;
    std::vector<double> v;  // nx*ny, cell centered

    ScalarField() = default;
    explicit ScalarField(const Grid& g, ScalarBc b = ScalarBc::neumann_zero,
                         double fill = 0.0)
        : grid(g), bc(b), v(g.n_cells(), fill) {}

    double& operator()(int i, int j) { return v[grid.cell(i, j)]; }
    double operator()(int i, int j) const { return v[grid.cell(i, j)]; }

    // mirror-ghost read: valid for i in [-1, nx], j in [-1, ny]
    double g(int i, int j) const {
        int ii = std::clamp(i, 0, grid.nx - 1);
        int jj = std::clamp(j, 0, grid.ny - 1);
        return v[grid.cell(ii, jj)];
    }
};

struct FaceField {
    Grid grid;
    std::vector<double> ux;  // (nx+1) x ny on vertical faces
    std::vector<double> uy;  // nx x (ny+1) on horizontal faces

    FaceField() = default;
    explicit FaceField(const Grid& g)
        : grid(g), ux(g.n_fx(), 0.0), uy(g.n_fy(), 0.0) {}

    double& x(int i, int j) { return ux[grid.fx(i, j)]; }
    double x(int i, int j) const { return ux[grid.fx(i, j)]; }
    double& y(int i, int j) { return uy[grid.fy(i, j)]; }
    double y(int i, int j) const { return uy[grid.fy(i, j)]; }

    // wall faces are data, pinned to zero
    void zero_boundary() {
        for (int j = 0; j < grid.ny; ++j) x(0, j) = x(grid.nx, j) = 0.0;
        for (int i = 0; i < grid.nx; ++i) y(i, 0) = y(i, grid.ny) = 0.0;
    }
};

// Ghosted copy of a Neumann scalar: index range [-1, nx] x [-1, ny].
struct GhostedScalar {
    Grid grid;
    std::vector<double> v;  // (nx+2) x (ny+2)

    explicit GhostedScalar(const Grid& g) : grid(g), v((g.nx + 2) * (g.ny + 2), 0.0) {}
    double& at(int i, int j) { return v[(j + 1) * (grid.nx + 2) + (i + 1)]; }
    double at(int i, int j) const { return v[(j + 1) * (grid.nx + 2) + (i + 1)]; }
};

// Zero-flux ghost fill: the ghost layer mirrors the first interior layer.
GhostedScalar fill_ghost(const ScalarField& f);

// Discrete L2 inner products (midpoint quadrature, weight hx*hy). The face
// version sums both components with half weight on wall faces.
double inner(const ScalarField& a, const ScalarField& b);
double inner(const FaceField& a, const FaceField& b);

inline double norm(const ScalarField& a) { return std::sqrt(inner(a, a)); }
inline double norm(const FaceField& a) { return std::sqrt(inner(a, a)); }

double mean(const ScalarField& a);

// elementwise helpers
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);
FaceField operator+(const FaceField& a, const FaceField& b);
FaceField operator-(const FaceField& a, const FaceField& b);
FaceField operator*(double s, const FaceField& a);

void axpy(double a, const ScalarField& x, ScalarField& y);  // y += a*x
void axpy(double a, const FaceField& x, FaceField& y);

bool all_finite(const ScalarField& a);
bool all_finite(const FaceField& a);

}  // namespace acns
