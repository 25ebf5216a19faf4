#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "acns/field.hpp"

namespace acns {

// Model and stepping parameters. alpha*beta >= 1/4 is required for the
// unconditional stability bounds and is enforced at construction.
struct ModelParams {
    double eta = 0.1;      // interface width
    double lambda = 0.01;  // surface-tension scale
    double mobility = 1.0; // M
    double nu = 1.0;       // viscosity
    double alpha = 1.0;
    double beta = 0.25;
    double dt = 0.01;
    double t_final = 1.0;

    void validate() const {
        auto pos = [](double x, const char* n) {
            if (!(x > 0.0))
                throw std::invalid_argument(std::string("ModelParams: ") + n +
                                            " must be positive");
        };
        pos(eta, "eta");
        pos(lambda, "lambda");
        pos(mobility, "mobility");
        pos(nu, "nu");
        pos(alpha, "alpha");
        pos(beta, "beta");
        pos(dt, "dt");
        pos(t_final, "t_final");
        if (alpha * beta < 0.25 - 1e-12)
            throw std::invalid_argument("ModelParams: alpha*beta >= 1/4 required");
    }

    std::vector<std::string> warnings(const Grid& g) const {
        std::vector<std::string> w;
        double L = std::min(g.lx, g.ly);
        if (eta > 0.2 * L)
            w.push_back("interface width eta is not small against the domain");
        if (eta < std::min(g.hx, g.hy))
            w.push_back("interface width eta is under-resolved by the mesh");
        return w;
    }
};

// f(phi) = (phi^2 - 1) phi / eta^2, the double-well derivative.
inline double double_well_fprime(double phi, double eta) {
    return (phi * phi - 1.0) * phi / (eta * eta);
}

// q = (phi^2 - 1) / eta^2, the multiplier that linearizes f(phi) = q*phi.
inline ScalarField q_of_phi(const ScalarField& phi, double eta) {
    ScalarField q(phi.grid, ScalarBc::neumann_zero);
    const double ie2 = 1.0 / (eta * eta);
    for (size_t k = 0; k < q.v.size(); ++k)
        q.v[k] = (phi.v[k] * phi.v[k] - 1.0) * ie2;
    return q;
}

// One full time level. r is the scalar auxiliary variable; schemes that do
// not use it carry it along untouched.
struct State {
    ScalarField phi;
    ScalarField q;
    FaceField u;
    ScalarField p;
    double r = 1.0;
    double t = 0.0;
    long n = 0;

    State() = default;
    explicit State(const Grid& g)
        : phi(g, ScalarBc::neumann_zero),
          q(g, ScalarBc::neumann_zero),
          u(g),
          p(g, ScalarBc::none) {}

    const Grid& grid() const { return phi.grid; }
};

}  // namespace acns
