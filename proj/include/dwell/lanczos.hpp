#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dwell/errors.hpp"
#include "dwell/two_particle.hpp"

namespace dwell {

// Exchange block of the two-body Hamiltonian as a matrix-free operator on
// packed pair vectors; one apply costs two dense N x N multiplies.
class BlockOperator {
  public:
    BlockOperator(const Grid& g, double kappa, double g1d, Exchange ex)
        : basis_(PairBasis::make(g.n, ex)), op_(g, kappa, g1d) {}

    int dim() const { return basis_.size(); }
    const PairBasis& basis() const { return basis_; }

    void apply(const double* v, double* out) const {
        packed_to_matrix(basis_, v, c_);
        op_.apply(c_, y_);
        matrix_to_packed(basis_, y_, out);
    }

  private:
    PairBasis basis_;
    ProductOperator op_;
    mutable Eigen::MatrixXd c_, y_;
};

struct LanczosOptions {
    int max_iter = 600;
    double tol = 1e-10;       // absolute Ritz residual bound
    std::uint64_t seed = 20240915;
};

struct LanczosResult {
    std::vector<double> values;
    Eigen::MatrixXd vectors;  // Ritz vectors, one per column, unit norm
    int iterations;
    std::vector<double> residuals;
};

// Lanczos with full reorthogonalization against all stored basis vectors.
// Deterministic for fixed options; convergence is judged by the classic
// beta * |last tridiagonal eigenvector component| residual estimate.
inline LanczosResult lanczos_lowest(const BlockOperator& op, int n_lowest,
                                    LanczosOptions opts = {}) {
    const int n = op.dim();
    if (n_lowest < 1 || n_lowest > n)
        throw precondition_error("lanczos_lowest: need 1 <= n_lowest <= dim");
    const int m_max = std::min(n, opts.max_iter);

    Eigen::MatrixXd basis(n, m_max);
    std::vector<double> alpha, beta;  // tridiagonal entries
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> gauss;

    Eigen::VectorXd v(n), w(n);
    for (int i = 0; i < n; ++i) v[i] = gauss(rng);
    v.normalize();
    basis.col(0) = v;

    Eigen::MatrixXd tri_vecs;
    Eigen::VectorXd tri_vals;
    int k = 0;
    for (k = 1; k <= m_max; ++k) {
        op.apply(basis.col(k - 1).data(), w.data());
        alpha.push_back(basis.col(k - 1).dot(w));
        // Two reorthogonalization sweeps keep the basis orthonormal to
        // round-off even for tightly clustered eigenvalues.
        for (int sweep = 0; sweep < 2; ++sweep)
            w.noalias() -=
                basis.leftCols(k) * (basis.leftCols(k).transpose() * w);
        const double b = w.norm();

        if (k >= n_lowest && (k % 5 == 0 || k == n || k == m_max)) {
            // Ritz estimates from the k x k tridiagonal matrix.
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
            for (int i = 0; i < k; ++i) {
                t(i, i) = alpha[i];
                if (i + 1 < k) t(i, i + 1) = t(i + 1, i) = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
            bool done = true;
            for (int i = 0; i < n_lowest && done; ++i)
                done = b * std::abs(es.eigenvectors()(k - 1, i)) < opts.tol;
            if (done || k == n || k == m_max) {
                tri_vals = es.eigenvalues();
                tri_vecs = es.eigenvectors();
                if (done || k == n) break;
                throw solver_error("lanczos_lowest: not converged", k);
            }
        }
        if (b < 1e-14) {
            // Invariant subspace hit; continue with a fresh orthogonal vector.
            for (int i = 0; i < n; ++i) w[i] = gauss(rng);
            for (int sweep = 0; sweep < 2; ++sweep)
                w.noalias() -=
                    basis.leftCols(k) * (basis.leftCols(k).transpose() * w);
            beta.push_back(0.0);
        } else {
            beta.push_back(b);
        }
        if (k < m_max) basis.col(k) = w / w.norm();
    }

    LanczosResult r;
    r.iterations = k;
    r.values.assign(tri_vals.data(), tri_vals.data() + n_lowest);
    r.vectors.noalias() = basis.leftCols(k) * tri_vecs.leftCols(n_lowest);
    r.residuals.resize(n_lowest);
    Eigen::VectorXd hx(n);
    for (int i = 0; i < n_lowest; ++i) {
        r.vectors.col(i).normalize();
        op.apply(r.vectors.col(i).data(), hx.data());
        r.residuals[i] = (hx - r.values[i] * r.vectors.col(i)).norm();
    }
    return r;
}

// Band solve on the iterative path; used for the larger wavefunction-map grids
// where the dense block solve is unnecessarily heavy.
inline std::array<TwoBodyState, 4> lowest_band_lanczos(const Grid& g, double kappa,
                                                       double g1d,
                                                       LanczosOptions opts = {}) {
    const BlockOperator sym_op(g, kappa, g1d, Exchange::symmetric);
    const BlockOperator anti_op(g, kappa, g1d, Exchange::antisymmetric);
    LanczosResult rs = lanczos_lowest(sym_op, 3, opts);
    LanczosResult ra = lanczos_lowest(anti_op, 1, opts);
    std::vector<Eigen::MatrixXd> ms(3), ma(1);
    for (int i = 0; i < 3; ++i)
        packed_to_matrix(sym_op.basis(), rs.vectors.col(i).data(), ms[i]);
    packed_to_matrix(anti_op.basis(), ra.vectors.col(0).data(), ma[0]);
    return assemble_band(g, std::move(rs.values), std::move(ms),
                         std::move(ra.values), std::move(ma));
}

}
