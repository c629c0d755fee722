#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "dwell/dvr.hpp"
#include "dwell/errors.hpp"
#include "dwell/two_particle.hpp"

namespace dwell {

struct Rspdm {
    Eigen::MatrixXd rho;  // rho(x_i, x_j), symmetric PSD, h * tr = 1
    int band_index;
};

// Trace over one particle by quadrature:
//   rho(x, x') = h * sum_m Psi(x, x_m) Psi(x', x_m).
inline Rspdm rspdm(const TwoBodyState& s, const Grid& g) {
    if (s.coeff.rows() != g.n)
        throw precondition_error("rspdm: state on a different grid");
    Rspdm r{g.h * (s.coeff * s.coeff.transpose()), s.band_index};
    return r;
}

struct SpectralDecomposition {
    std::vector<double> occupations;  // descending, sum 1, clamped at 0
    Eigen::MatrixXd orbitals;         // h-orthonormal natural orbitals, by column
};

// The orbital integral equation as a linear eigenproblem of the
// quadrature-weighted kernel h*rho, whose eigenvalues are the populations.
inline SpectralDecomposition natural_orbitals(const Rspdm& r, const Grid& g) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.h * r.rho);
    if (es.info() != Eigen::Success)
        throw solver_error("natural_orbitals: eigensolver failed", es.info());
    const int n = static_cast<int>(r.rho.rows());
    SpectralDecomposition d;
    d.occupations.resize(n);
    d.orbitals.resize(n, n);
    const double inv_sqrt_h = 1.0 / std::sqrt(g.h);
    for (int i = 0; i < n; ++i) {  // reverse into descending order
        const double lam = es.eigenvalues()[n - 1 - i];
        d.occupations[i] = (lam < 0.0 && lam > -1e-10) ? 0.0 : lam;
        d.orbitals.col(i) = es.eigenvectors().col(n - 1 - i) * inv_sqrt_h;
    }
    return d;
}

struct MomentumDistribution {
    std::vector<double> k;
    std::vector<double> n;
};

// Nyquist window of the grid, [-pi/h, pi/h], sampled with 4N points.
inline std::vector<double> default_k_grid(const Grid& g) {
    const int m = 4 * g.n;
    const double kmax = std::numbers::pi / g.h;
    std::vector<double> k(m);
    for (int i = 0; i < m; ++i) k[i] = -kmax + 2.0 * kmax * i / (m - 1);
    return k;
}

// Orbital-sum form: n(k) = sum_j lambda_j |mu_j(k)|^2 with
// mu_j(k) = (2 pi)^(-1/2) h sum_m phi_j(x_m) exp(-i k x_m).
inline MomentumDistribution momentum_distribution(const SpectralDecomposition& d,
                                                  const Grid& g,
                                                  const std::vector<double>& k_grid) {
    MomentumDistribution out;
    out.k = k_grid;
    out.n.assign(k_grid.size(), 0.0);
    const int n = g.n;
    const int n_orb = static_cast<int>(d.occupations.size());
    for (size_t a = 0; a < k_grid.size(); ++a) {
        double acc = 0.0;
        for (int j = 0; j < n_orb; ++j) {
            if (d.occupations[j] == 0.0) continue;
            double re = 0.0, im = 0.0;
            for (int m = 0; m < n; ++m) {
                const double phase = k_grid[a] * g.x[m];
                re += d.orbitals(m, j) * std::cos(phase);
                im -= d.orbitals(m, j) * std::sin(phase);
            }
            acc += d.occupations[j] * (re * re + im * im);
        }
        out.n[a] = acc * g.h * g.h / (2.0 * std::numbers::pi);
    }
    return out;
}

// Direct kernel transform: n(k) = (2 pi)^-1 h^2 sum_ij rho_ij e^{-ik(x_i-x_j)}.
inline MomentumDistribution momentum_distribution_direct(
    const Rspdm& r, const Grid& g, const std::vector<double>& k_grid) {
    MomentumDistribution out;
    out.k = k_grid;
    out.n.assign(k_grid.size(), 0.0);
    const int n = g.n;
    Eigen::VectorXd cs(n), sn(n);
    for (size_t a = 0; a < k_grid.size(); ++a) {
        for (int m = 0; m < n; ++m) {
            cs[m] = std::cos(k_grid[a] * g.x[m]);
            sn[m] = std::sin(k_grid[a] * g.x[m]);
        }
        // v* rho v with v_m = exp(i k x_m); rho symmetric makes it real.
        const double quad = cs.dot(r.rho * cs) + sn.dot(r.rho * sn);
        out.n[a] = quad * g.h * g.h / (2.0 * std::numbers::pi);
    }
    return out;
}

inline double trapezoid(const std::vector<double>& x, const std::vector<double>& y) {
    double acc = 0.0;
    for (size_t i = 1; i < x.size(); ++i)
        acc += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return acc;
}

// Base-2; occupations at or below 1e-14 are treated as exact zeros.
inline double von_neumann_entropy(const SpectralDecomposition& d) {
    double s = 0.0;
    for (const double lam : d.occupations)
        if (lam > 1e-14) s -= lam * std::log2(lam);
    return s;
}

inline int schmidt_number(const SpectralDecomposition& d, double threshold) {
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw precondition_error("schmidt_number: threshold must be in (0, 1)");
    int count = 0;
    for (const double lam : d.occupations)
        if (lam > threshold) ++count;
    return count;
}

}
