// Scalar shape metrics of the thresholded phase region {phi > threshold}:
// 4-connected component count, area, contour length, isoperimetric ratio.
#pragma once

#include "acns/field.hpp"

namespace acns {

struct RegionMetrics {
    int components = 0;
    double area = 0.0;       // cell-count area of the region
    double perimeter = 0.0;  // marching-squares length of the level contour
    double isoperimetric = 0.0;  // P^2 / (4 pi A), 1 for a disk
};

int count_components(const ScalarField& phi, double threshold);
RegionMetrics region_metrics(const ScalarField& phi, double threshold);

}  // namespace acns
