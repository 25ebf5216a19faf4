#include "acns/init.hpp"

#include <cmath>
#include <stdexcept>

#include "acns/prng.hpp"

namespace acns {

double cosine_ic(double x, double y) {
    const double pi = 3.14159265358979323846;
    return 0.24 * std::cos(2.0 * pi * x) * std::cos(2.0 * pi * y) +
           0.4 * std::cos(pi * x) * std::cos(3.0 * pi * y);
}

ScalarField init_cosine(const Grid& g) {
    ScalarField f(g, ScalarBc::neumann_zero);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f(i, j) = cosine_ic(g.xc(i), g.yc(j));
    return f;
}

ScalarField init_spinodal(const Grid& g, double mean, double amplitude,
                          std::uint64_t seed) {
    ScalarField f(g, ScalarBc::neumann_zero);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            std::uint64_t k = static_cast<std::uint64_t>(g.cell(i, j));
            f(i, j) = mean + amplitude * (2.0 * counter_uniform(seed, k) - 1.0);
        }
    return f;
}

ScalarField init_bubbles(const Grid& g, double eta, const std::vector<Bubble>& bubbles) {
    if (bubbles.empty())
        throw std::invalid_argument("init_bubbles: need at least one bubble");
    ScalarField f(g, ScalarBc::neumann_zero);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double x = g.xc(i), y = g.yc(j);
            double v = 1.0;
            for (const Bubble& b : bubbles) {
                double d = std::sqrt((x - b.cx) * (x - b.cx) + (y - b.cy) * (y - b.cy));
                v += std::tanh((b.radius - d) / (b.width_factor * eta));
            }
            f(i, j) = v;
        }
    return f;
}

}  // namespace acns
