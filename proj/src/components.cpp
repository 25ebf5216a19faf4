#include "acns/components.hpp"

#include <cmath>
#include <vector>

namespace acns {

int count_components(const ScalarField& phi, double threshold) {
    const Grid& g = phi.grid;
    std::vector<char> seen(g.n_cells(), 0);
    std::vector<int> stack;
    int count = 0;
    for (int start = 0; start < g.n_cells(); ++start) {
        if (seen[start] || !(phi.v[start] > threshold)) continue;
        ++count;
        seen[start] = 1;
        stack.assign(1, start);
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            int i = c % g.nx, j = c / g.nx;
            const int ni[4] = {i - 1, i + 1, i, i};
            const int nj[4] = {j, j, j - 1, j + 1};
            for (int k = 0; k < 4; ++k) {
                if (ni[k] < 0 || ni[k] >= g.nx || nj[k] < 0 || nj[k] >= g.ny)
                    continue;
                int cc = g.cell(ni[k], nj[k]);
                if (!seen[cc] && phi.v[cc] > threshold) {
                    seen[cc] = 1;
                    stack.push_back(cc);
                }
            }
        }
    }
    return count;
}

namespace {

struct P {
    double x, y;
};

double seg(const P& a, const P& b) { return std::hypot(b.x - a.x, b.y - a.y); }

}  // namespace

RegionMetrics region_metrics(const ScalarField& phi, double threshold) {
    const Grid& g = phi.grid;
    RegionMetrics m;
    m.components = count_components(phi, threshold);
    int cells = 0;
    for (double v : phi.v) cells += (v > threshold);
    m.area = cells * g.cell_area();

    // marching squares on the cell-center lattice
    double per = 0.0;
    for (int j = 0; j + 1 < g.ny; ++j)
        for (int i = 0; i + 1 < g.nx; ++i) {
            double v0 = phi(i, j), v1 = phi(i + 1, j);
            double v2 = phi(i + 1, j + 1), v3 = phi(i, j + 1);
            int c = (v0 > threshold) | ((v1 > threshold) << 1) |
                    ((v2 > threshold) << 2) | ((v3 > threshold) << 3);
            if (c == 0 || c == 15) continue;
            double x0 = g.xc(i), y0 = g.yc(j);
            auto t = [&](double a, double b) { return (threshold - a) / (b - a); };
            P pb{x0 + t(v0, v1) * g.hx, y0};
            P pr{x0 + g.hx, y0 + t(v1, v2) * g.hy};
            P pt{x0 + t(v3, v2) * g.hx, y0 + g.hy};
            P pl{x0, y0 + t(v0, v3) * g.hy};
            switch (c) {
                case 1: case 14: per += seg(pl, pb); break;
                case 2: case 13: per += seg(pb, pr); break;
                case 3: case 12: per += seg(pl, pr); break;
                case 4: case 11: per += seg(pr, pt); break;
                case 6: case 9:  per += seg(pb, pt); break;
                case 7: case 8:  per += seg(pl, pt); break;
                case 5: {
                    bool mid = 0.25 * (v0 + v1 + v2 + v3) > threshold;
                    per += mid ? seg(pb, pr) + seg(pt, pl)
                               : seg(pl, pb) + seg(pr, pt);
                    break;
                }
                case 10: {
                    bool mid = 0.25 * (v0 + v1 + v2 + v3) > threshold;
                    per += mid ? seg(pl, pb) + seg(pr, pt)
                               : seg(pb, pr) + seg(pt, pl);
                    break;
                }
            }
        }
    m.perimeter = per;
    m.isoperimetric =
        (m.area > 0.0) ? per * per / (4.0 * 3.14159265358979323846 * m.area) : 0.0;
    return m;
}

}  // namespace acns
