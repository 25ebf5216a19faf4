// Initial phase fields for the experiments.
#pragma once

#include <cstdint>
#include <vector>

#include "acns/field.hpp"

namespace acns {

struct Bubble {
    double cx = 0, cy = 0, radius = 0;
    double width_factor = 1.0;  // interface width is width_factor * eta
};

// 0.24 cos(2 pi x) cos(2 pi y) + 0.4 cos(pi x) cos(3 pi y); zero-flux
// compatible on the unit square.
double cosine_ic(double x, double y);
ScalarField init_cosine(const Grid& g);

// mean + uniform draws in [-amplitude, amplitude], one independent draw per
// cell from the counter generator.
ScalarField init_spinodal(const Grid& g, double mean, double amplitude,
                          std::uint64_t seed);

// 1 + sum_i tanh((r_i - dist_i) / (width_factor_i * eta))
ScalarField init_bubbles(const Grid& g, double eta, const std::vector<Bubble>& bubbles);

}  // namespace acns
