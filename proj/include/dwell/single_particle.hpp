#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "dwell/dvr.hpp"
#include "dwell/eig.hpp"
#include "dwell/errors.hpp"

namespace dwell {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct SingleParticleState {
    double energy;
    std::vector<double> orbital;  // h-normalized: h * sum u^2 = 1
    Parity parity;
    int index;
};

namespace detail {

// Deterministic output convention: the first significant entry is positive.
inline void fix_sign(Eigen::Ref<Eigen::VectorXd> u) {
    const double cut = 1e-6 * u.cwiseAbs().maxCoeff();
    for (int i = 0; i < u.size(); ++i) {
        if (std::abs(u[i]) > cut) {
            if (u[i] < 0.0) u = -u;
            return;
        }
    }
}

inline Parity classify_parity(const Eigen::VectorXd& u, double tol,
                              const std::string& what) {
    const Eigen::VectorXd rev = u.reverse();
    if ((u - rev).cwiseAbs().maxCoeff() < tol) return Parity::even;
    if ((u + rev).cwiseAbs().maxCoeff() < tol) return Parity::odd;
    throw classification_error(what + ": state has no definite parity");
}

// Rotate each numerically degenerate cluster into eigenvectors of the parity
// reversal so labels are well defined even when the solver returned an
// arbitrary mixture.  R is symmetric and commutes with H on a centred grid.
inline void rotate_degenerate_to_parity(const std::vector<double>& energies,
                                        Eigen::MatrixXd& vectors,
                                        double degeneracy_tol) {
    const int m = static_cast<int>(energies.size());
    int lo = 0;
    while (lo < m) {
        int hi = lo + 1;
        while (hi < m && std::abs(energies[hi] - energies[hi - 1]) < degeneracy_tol)
            ++hi;
        if (hi - lo > 1) {
            const int k = hi - lo;
            Eigen::MatrixXd block = vectors.middleCols(lo, k);
            Eigen::MatrixXd p(k, k);
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    p(a, b) = block.col(a).dot(block.col(b).reverse());
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p);
            vectors.middleCols(lo, k) = block * es.eigenvectors();
        }
        lo = hi;
    }
}

}  // namespace detail

// Test hook shared with the harmonic-oscillator harness: solve T + diag(v).
inline std::vector<SingleParticleState> solve_in_potential(
    const Grid& g, const std::vector<double>& v, int n_states) {
    if (n_states < 1 || n_states > g.n)
        throw precondition_error("solve_in_potential: need 1 <= n_states <= N");
    Eigen::MatrixXd a = kinetic_matrix(g);
    for (int i = 0; i < g.n; ++i) a(i, i) += v[i];
    EigResult r = eigh_lowest(std::move(a), n_states);

    detail::rotate_degenerate_to_parity(r.values, r.vectors, 1e-10);
    std::vector<SingleParticleState> states;
    states.reserve(n_states);
    const double inv_sqrt_h = 1.0 / std::sqrt(g.h);
    for (int i = 0; i < n_states; ++i) {
        Eigen::VectorXd u = r.vectors.col(i);
        detail::fix_sign(u);
        const Parity par = detail::classify_parity(u, 1e-8, "solve_single");
        u *= inv_sqrt_h;
        states.push_back({r.values[i], {u.data(), u.data() + g.n}, par, i});
    }
    return states;
}

inline std::vector<SingleParticleState> solve_single(const Grid& g, double kappa,
                                                     int n_states) {
    return solve_in_potential(g, potential_vector(g, kappa), n_states);
}

}
