#pragma once

#include <cmath>

#include "dwell/errors.hpp"

namespace dwell {

// Olshanii's constant at the precision quoted in the literature.  Exposed as a
// default so the CLI can vary it for sensitivity checks.
inline constexpr double olshanii_c = 1.4603;

struct PhysicalParams {
    double m = 1.0;      // particle mass
    double hbar = 1.0;
    double amp = 1.0;    // quartic amplitude A in V(x) = A(x^4 - kappa x^2)
    double kappa = 0.0;  // has units length^2 before scaling
    double g1d = 0.0;    // 1D coupling, energy*length
};

struct ScaledParams {
    double kappa_bar;
    double g_bar;
    double alpha;  // length scale, alpha^6 = hbar^2/(A m)
};

inline void validate(const PhysicalParams& p) {
    if (!(p.m > 0.0) || !(p.hbar > 0.0) || !(p.amp > 0.0))
        throw invalid_parameter("m, hbar and A must all be positive");
}

// kappa_bar = (Am/hbar^2)^(1/3) kappa,  g_bar = (m/hbar^2)(hbar^2/Am)^(1/6) g1D
inline ScaledParams to_scaled(const PhysicalParams& p) {
    validate(p);
    const double beta = p.amp * p.m / (p.hbar * p.hbar);  // 1/alpha^6
    const double alpha = std::pow(beta, -1.0 / 6.0);
    return {std::cbrt(beta) * p.kappa,
            (p.m / (p.hbar * p.hbar)) * std::pow(beta, -1.0 / 6.0) * p.g1d,
            alpha};
}

// E_bar = (m/hbar^2)(hbar^2/Am)^(1/3) E; these invert that map exactly.
inline double scale_energy(double e, const PhysicalParams& p) {
    validate(p);
    const double beta = p.amp * p.m / (p.hbar * p.hbar);
    return (p.m / (p.hbar * p.hbar)) * std::pow(beta, -1.0 / 3.0) * e;
}

inline double unscale_energy(double e_bar, const PhysicalParams& p) {
    validate(p);
    const double beta = p.amp * p.m / (p.hbar * p.hbar);
    return e_bar * (p.hbar * p.hbar / p.m) * std::cbrt(beta);
}

inline double unscale_kappa(double kappa_bar, const PhysicalParams& p) {
    validate(p);
    return kappa_bar / std::cbrt(p.amp * p.m / (p.hbar * p.hbar));
}

inline double unscale_g1d(double g_bar, const PhysicalParams& p) {
    validate(p);
    const double beta = p.amp * p.m / (p.hbar * p.hbar);
    return g_bar * (p.hbar * p.hbar / p.m) * std::pow(beta, 1.0 / 6.0);
}

// Quasi-1D coupling from 3D scattering data:
//   a1D = -(d_perp^2 / 2 a3D)(1 - C a3D/d_perp),  g1D = -2 hbar^2/(m a1D).
// a3D = 0 carries no scattering and returns 0 rather than tripping on the pole.
inline double g1d_from_3d(double a3d, double d_perp, double m, double hbar,
                          double c = olshanii_c) {
    if (!(m > 0.0) || !(hbar > 0.0) || !(d_perp > 0.0))
        throw invalid_parameter("m, hbar and d_perp must be positive");
    if (a3d == 0.0) return 0.0;
    const double denom = 1.0 - c * a3d / d_perp;
    if (std::abs(denom) < 1e-12 * std::max(1.0, std::abs(c * a3d / d_perp)))
        throw singularity_error("confinement-induced resonance: a3D = d_perp/C");
    const double a1d = -(d_perp * d_perp / (2.0 * a3d)) * denom;
    return -2.0 * hbar * hbar / (m * a1d);
}

}
