#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "dwell/errors.hpp"

namespace dwell {

// Uniform grid centred on x = 0.  N is kept odd so x = 0 is a grid point and
// parity acts as an exact index reversal.
struct Grid {
    int n;
    double h;
    std::vector<double> x;

    double span() const { return x.back(); }
};

inline Grid make_grid(int n, double h) {
    if (n < 3 || n % 2 == 0)
        throw invalid_grid("grid size must be odd and at least 3");
    if (!(h > 0.0)) throw invalid_grid("grid spacing must be positive");
    Grid g{n, h, std::vector<double>(n)};
    for (int i = 0; i < n; ++i) g.x[i] = (i - (n - 1) / 2.0) * h;
    return g;
}

// Sinc-DVR kinetic matrix for -1/2 d^2/dx^2 on the uniform grid:
//   T_ii = pi^2/(6h^2),  T_ij = (-1)^(i-j) / (h^2 (i-j)^2).
inline Eigen::MatrixXd kinetic_matrix(const Grid& g) {
    Eigen::MatrixXd t(g.n, g.n);
    const double h2 = g.h * g.h;
    for (int i = 0; i < g.n; ++i) {
        t(i, i) = std::numbers::pi * std::numbers::pi / (6.0 * h2);
        for (int j = 0; j < i; ++j) {
            const int d = i - j;
            const double v = ((d % 2 == 0) ? 1.0 : -1.0) / (h2 * double(d) * double(d));
            t(i, j) = v;
            t(j, i) = v;
        }
    }
    return t;
}

// V(x) = x^4 - kappa x^2, even on the symmetric grid by construction.
inline std::vector<double> potential_vector(const Grid& g, double kappa) {
    std::vector<double> v(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double x2 = g.x[i] * g.x[i];
        v[i] = x2 * x2 - kappa * x2;
    }
    return v;
}

struct WellGeometry {
    double x_min;  // one of the pair of minima at +-sqrt(kappa/2)
    double v_min;  // well depth -kappa^2/4
};

// kappa < 0 leaves a single well at the origin.
inline WellGeometry well_geometry(double kappa) {
    if (kappa < 0.0) return {0.0, 0.0};
    return {std::sqrt(kappa / 2.0), -kappa * kappa / 4.0};
}

// T + diag(V); the single-particle Hamiltonian all solvers share.
inline Eigen::MatrixXd single_particle_hamiltonian(const Grid& g, double kappa) {
    Eigen::MatrixXd a = kinetic_matrix(g);
    const std::vector<double> v = potential_vector(g, kappa);
    for (int i = 0; i < g.n; ++i) a(i, i) += v[i];
    return a;
}

}
