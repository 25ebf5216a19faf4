// Uniform rectangular MAC grid: scalars at cell centers, u_x on vertical
// faces, u_y on horizontal faces.
#pragma once

#include <stdexcept>
#include <string>

namespace acns {

struct Grid {
    int nx = 0, ny = 0;     // cell counts
    double lx = 0, ly = 0;  // domain extents
    double hx = 0, hy = 0;  // cell sizes

    Grid() = default;
    Grid(int nx_, int ny_, double lx_, double ly_)
        : nx(nx_), ny(ny_), lx(lx_), ly(ly_), hx(lx_ / nx_), hy(ly_ / ny_) {
        if (nx < 4 || ny < 4)
            throw std::invalid_argument("Grid: need at least 4 cells per axis");
        if (lx <= 0 || ly <= 0)
            throw std::invalid_argument("Grid: extents must be positive");
    }

    bool operator==(const Grid& o) const {
        return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

    // cell centers and face positions
    double xc(int i) const { return (i + 0.5) * hx; }
    double yc(int j) const { return (j + 0.5) * hy; }
    double xf(int i) const { return i * hx; }  // vertical-face x
    double yf(int j) const { return j * hy; }  // horizontal-face y

    int n_cells() const { return nx * ny; }
    int n_fx() const { return (nx + 1) * ny; }  // x-velocity faces
    int n_fy() const { return nx * (ny + 1); }  // y-velocity faces

    int cell(int i, int j) const { return j * nx + i; }
    int fx(int i, int j) const { return j * (nx + 1) + i; }
    int fy(int i, int j) const { return j * nx + i; }

    double cell_area() const { return hx * hy; }
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

}  // namespace acns
