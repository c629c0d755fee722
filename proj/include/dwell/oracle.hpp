#pragma once

// Brute-force validators on discretizations chosen to be independent of the
// main sinc-DVR path: 3-point finite differences in a Dirichlet box, and a
// direct partial trace for the two-site dimer.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "dwell/eig.hpp"
#include "dwell/errors.hpp"
#include "dwell/two_particle.hpp"

namespace dwell::oracle {

struct OracleReport {
    std::string quantity;
    double main_value = 0.0;
    double oracle_value = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    std::string main_grid;
    std::string oracle_grid;
};

inline OracleReport make_report(std::string quantity, double main_value,
                                double oracle_value, std::string main_grid,
                                std::string oracle_grid) {
    OracleReport r;
    r.quantity = std::move(quantity);
    r.main_value = main_value;
    r.oracle_value = oracle_value;
    r.abs_diff = std::abs(main_value - oracle_value);
    const double scale = std::max(std::abs(main_value), std::abs(oracle_value));
    r.rel_diff = scale > 0.0 ? r.abs_diff / scale : 0.0;
    r.main_grid = std::move(main_grid);
    r.oracle_grid = std::move(oracle_grid);
    return r;
}

namespace detail {

// Interior points of a Dirichlet box [-span, span]: h_f = 2 span / (n + 1),
// x_i = -span + (i + 1) h_f.
struct FdGrid {
    int n;
    double h;
    std::vector<double> x;
};

inline FdGrid fd_grid(double span, int n_fine) {
    FdGrid g;
    g.n = n_fine;
    g.h = 2.0 * span / (n_fine + 1);
    g.x.resize(n_fine);
    for (int i = 0; i < n_fine; ++i) g.x[i] = -span + (i + 1) * g.h;
    return g;
}

// Negative-count of the Sturm sequence of (T - lambda I) for the symmetric
// tridiagonal matrix with diagonal d and constant off-diagonal e.
inline int sturm_count(const std::vector<double>& d, double e, double lambda) {
    const double e2 = e * e;
    int count = 0;
    double q = 0.0;  // pivot of the LDL^T factorization of T - lambda I
    bool first = true;
    for (const double di : d) {
        q = di - lambda - (first ? 0.0 : e2 / q);
        first = false;
        if (q == 0.0) q = -std::numeric_limits<double>::min();
        if (q < 0.0) ++count;
    }
    return count;
}

inline double sturm_bisect(const std::vector<double>& d, double e, int index,
                           double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) > index)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}

// Lowest n_states eigenvalues of -1/2 d^2/dx^2 + v(x) by central differences
// with Dirichlet walls, solved by Sturm bisection on the tridiagonal matrix.
template <class Potential>
inline std::vector<double> fd_spectrum_in(Potential&& v, double span, int n_fine,
                                          int n_states) {
    if (n_fine < 801) throw precondition_error("fd_single_spectrum: n_fine must be >= 801");
    if (!(span > 0.0)) throw precondition_error("fd_single_spectrum: span must be positive");
    if (n_states < 1 || n_states > n_fine)
        throw precondition_error("fd_single_spectrum: bad n_states");

    const auto g = detail::fd_grid(span, n_fine);
    const double inv_h2 = 1.0 / (g.h * g.h);
    std::vector<double> d(g.n);
    for (int i = 0; i < g.n; ++i) d[i] = inv_h2 + v(g.x[i]);
    const double e = -0.5 * inv_h2;

    double lo = d[0], hi = d[0];
    for (const double di : d) {
        lo = std::min(lo, di);
        hi = std::max(hi, di);
    }
    lo -= 2.0 * std::abs(e);
    hi += 2.0 * std::abs(e);

    std::vector<double> out(n_states);
    for (int idx = 0; idx < n_states; ++idx)
        out[idx] = detail::sturm_bisect(d, e, idx, lo, hi);
    return out;
}

inline std::vector<double> fd_single_spectrum(double kappa, double span, int n_fine,
                                              int n_states) {
    // Main solver's default half-width is 4.8; a narrower oracle box is a bug.
    if (span < 4.8) throw precondition_error("fd_single_spectrum: span below main-grid span");
    return fd_spectrum_in([kappa](double x) { return x * x * (x * x - kappa); },
                          span, n_fine, n_states);
}

struct FdBand {
    std::array<double, 4> energies{};    // four lowest product-space levels
    std::array<Exchange, 4> exchange{};  // symmetry label of each
    int n_fine = 0;
    double span = 0.0;
    double h = 0.0;
};

namespace detail {

// Dense exchange block of the FD product Hamiltonian, assembled column by
// column from the image Y = A C + C A + contact under the packed basis.
inline Eigen::MatrixXd fd_block(const Eigen::MatrixXd& a, const FdGrid& g,
                                double g1d, Exchange ex) {
    const int n = g.n;
    const double s = ex == Exchange::symmetric ? 1.0 : -1.0;
    const double contact = g1d / g.h;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; ++k)
        for (int l = k + (ex == Exchange::symmetric ? 0 : 1); l < n; ++l)
            pairs.emplace_back(k, l);
    const int m = static_cast<int>(pairs.size());

    Eigen::MatrixXd block(m, m);
    Eigen::MatrixXd y(n, n);
    for (int q = 0; q < m; ++q) {
        const auto [k, l] = pairs[q];
        const double cq = k == l ? 1.0 : inv_sqrt2;
        y.setZero();
        y.col(l) += cq * a.col(k);
        y.row(k) += cq * a.row(l);
        if (k != l) {
            y.col(k) += s * cq * a.col(l);
            y.row(l) += s * cq * a.row(k);
        }
        if (k == l) y(k, k) += contact * cq;
        for (int p = 0; p < m; ++p) {
            const auto [i, j] = pairs[p];
            block(p, q) = i == j ? y(i, i) : std::numbers::sqrt2 * y(i, j);
        }
    }
    return block;
}

}

// Four lowest two-particle levels of the FD Hamiltonian with contact term
// g1d/h_f on the x1 = x2 diagonal, by symmetry-blocked dense solves.  The
// box half-width follows the well: max(3, sqrt(kappa/2) + 1.7).
inline FdBand fd_two_body_band(double kappa, double g1d, int n_fine) {
    if (n_fine % 2 == 0) throw precondition_error("fd_two_body_band: n_fine must be odd");
    if (n_fine > 121) throw precondition_error("fd_two_body_band: n_fine above 121");
    if (n_fine < 5) throw precondition_error("fd_two_body_band: n_fine too coarse");

    const double span = std::max(3.0, std::sqrt(std::max(kappa, 0.0) / 2.0) + 1.7);
    const auto g = detail::fd_grid(span, n_fine);

    const double inv_h2 = 1.0 / (g.h * g.h);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
    for (int i = 0; i < g.n; ++i) {
        a(i, i) = inv_h2 + g.x[i] * g.x[i] * (g.x[i] * g.x[i] - kappa);
        if (i + 1 < g.n) {
            a(i, i + 1) = -0.5 * inv_h2;
            a(i + 1, i) = -0.5 * inv_h2;
        }
    }

    std::vector<std::pair<double, Exchange>> levels;
    for (const Exchange ex : {Exchange::symmetric, Exchange::antisymmetric}) {
        auto r = eigh_lowest(detail::fd_block(a, g, g1d, ex), 4, false);
        for (const double en : r.values) levels.emplace_back(en, ex);
    }
    std::sort(levels.begin(), levels.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    FdBand band;
    band.n_fine = n_fine;
    band.span = span;
    band.h = g.h;
    for (int i = 0; i < 4; ++i) {
        band.energies[i] = levels[i].first;
        band.exchange[i] = levels[i].second;
    }
    return band;
}

// Eigenvalues of the 2x2 one-particle density of a dimer state
// a|20> + b|11> + c|02>, traced out directly in the mode basis.
inline std::array<double, 2> dimer_partial_trace(const Eigen::Vector3d& v) {
    if (std::abs(v.norm() - 1.0) > 1e-10)
        throw precondition_error("dimer_partial_trace: input not normalized");
    const double a = v[0], b = v[1], c = v[2];
    Eigen::Matrix2d rho;
    rho << a * a + 0.5 * b * b, (a * b + b * c) / std::numbers::sqrt2,
        (a * b + b * c) / std::numbers::sqrt2, c * c + 0.5 * b * b;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(rho);
    return {es.eigenvalues()[1], es.eigenvalues()[0]};
}

}
