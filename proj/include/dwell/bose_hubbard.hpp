#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "dwell/errors.hpp"

namespace dwell {

// Two bosons on two sites, Fock basis ordered |20>, |11>, |02>.
struct HubbardParams {
    double hopping = 1.0;      // J
    double interaction = 0.0;  // U
    double onsite = 0.0;       // eps, common to both sites

    void validate() const {
        if (!std::isfinite(hopping) || !std::isfinite(interaction) || !std::isfinite(onsite))
            throw invalid_parameter("hubbard: parameters must be finite");
    }
};

// Sign convention: +eps site shift, +sqrt(2) J hopping (no minus sign),
// U n(n-1) on-site repulsion without the conventional 1/2.
inline Eigen::Matrix3d hamiltonian_matrix(const HubbardParams& p) {
    p.validate();
    const double j2 = std::numbers::sqrt2 * p.hopping;
    const double d0 = 2.0 * p.onsite + 2.0 * p.interaction;
    const double d1 = 2.0 * p.onsite;
    Eigen::Matrix3d h;
    h << d0, j2, 0.0,
         j2, d1, j2,
         0.0, j2, d0;
    return h;
}

namespace detail {

// U - R and U + R with R = sqrt(U^2 + 4 J^2), each rationalized on the
// side where direct subtraction cancels.
inline double u_minus_r(double u, double j) {
    const double r = std::hypot(u, 2.0 * j);
    if (u <= 0.0) return u - r;
    return -4.0 * j * j / (u + r);
}

inline double u_plus_r(double u, double j) {
    const double r = std::hypot(u, 2.0 * j);
    if (u >= 0.0) return u + r;
    return -4.0 * j * j / (u - r);
}

}

struct AnalyticEigensystem {
    std::array<double, 3> energies;  // ascending
    Eigen::Matrix3d vectors;         // unit columns, matching order
    bool degenerate_limit = false;   // J = 0: upper pair picked basis-aligned
};

// Closed forms: E = 2 eps + U -/+ R for the (1, c, 1)-type pair with
// c = (E - 2 eps - 2U) / (sqrt(2) J), plus (1, 0, -1)/sqrt(2) at 2 eps + 2U.
inline AnalyticEigensystem analytic_eigensystem(const HubbardParams& p) {
    p.validate();
    AnalyticEigensystem out;
    const double e2 = 2.0 * p.onsite;
    const double u = p.interaction;

    if (p.hopping == 0.0) {
        out.degenerate_limit = true;
        const double pair = e2 + 2.0 * u;
        const double inv = 1.0 / std::numbers::sqrt2;
        Eigen::Vector3d mid(1.0, 0.0, -1.0), plus(1.0, 0.0, 1.0), fock(0.0, 1.0, 0.0);
        if (u >= 0.0) {
            out.energies = {e2, pair, pair};
            out.vectors.col(0) = fock;
            out.vectors.col(1) = mid * inv;
            out.vectors.col(2) = plus * inv;
        } else {
            out.energies = {pair, pair, e2};
            out.vectors.col(0) = plus * inv;
            out.vectors.col(1) = mid * inv;
            out.vectors.col(2) = fock;
        }
        return out;
    }

    const double j2 = std::numbers::sqrt2 * p.hopping;
    const double r = std::hypot(u, 2.0 * p.hopping);
    out.energies = {e2 + u - r, e2 + 2.0 * u, e2 + u + r};

    // c for E_-/E_+ is -(U + R)/(sqrt(2) J) and -(U - R)/(sqrt(2) J).
    const double c_lo = -detail::u_plus_r(u, p.hopping) / j2;
    const double c_hi = -detail::u_minus_r(u, p.hopping) / j2;
    const auto fill = [](double c) {
        Eigen::Vector3d v(1.0, c, 1.0);
        return (v / std::sqrt(2.0 + c * c)).eval();
    };
    out.vectors.col(0) = fill(c_lo);
    out.vectors.col(1) = Eigen::Vector3d(1.0, 0.0, -1.0) / std::numbers::sqrt2;
    out.vectors.col(2) = fill(c_hi);
    return out;
}

// Natural populations of the ground state's one-particle density matrix,
// lambda = (1 + c^2/2 +/- sqrt(2)|c|) / (2 + c^2).  Sum is exactly 1.
inline std::array<double, 2> ground_rspdm_occupations(const HubbardParams& p) {
    p.validate();
    if (p.hopping == 0.0 && p.interaction == 0.0)
        throw precondition_error("hubbard: ground state undefined at J = U = 0");
    if (p.hopping == 0.0) {
        // |11> for U > 0 gives populations {1/2, 1/2}; the attractive limit's
        // cat state does the same.
        return {0.5, 0.5};
    }
    const double c = -detail::u_plus_r(p.interaction, p.hopping)
                     / (std::numbers::sqrt2 * p.hopping);
    const double norm2 = 1.0 / (2.0 + c * c);
    const double base = 1.0 + 0.5 * c * c;
    const double split = std::numbers::sqrt2 * std::abs(c);
    return {norm2 * (base + split), norm2 * (base - split)};
}

inline double dimer_entropy(const std::array<double, 2>& lam) {
    double s = 0.0;
    for (const double l : lam)
        if (l > 1e-14) s -= l * std::log2(l);
    return s;
}

inline double ground_entropy(const HubbardParams& p) {
    return dimer_entropy(ground_rspdm_occupations(p));
}

// S over an outer (J, U) grid at fixed eps; row index runs over J.
inline Eigen::MatrixXd entropy_surface(const std::vector<double>& j_grid,
                                       const std::vector<double>& u_grid,
                                       double eps) {
    Eigen::MatrixXd s(j_grid.size(), u_grid.size());
    for (size_t a = 0; a < j_grid.size(); ++a)
        for (size_t b = 0; b < u_grid.size(); ++b)
            s(a, b) = ground_entropy({j_grid[a], u_grid[b], eps});
    return s;
}

}
