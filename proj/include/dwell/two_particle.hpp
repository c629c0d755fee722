#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "dwell/dvr.hpp"
#include "dwell/eig.hpp"
#include "dwell/errors.hpp"
#include "dwell/single_particle.hpp"

namespace dwell {

enum class Exchange { symmetric, antisymmetric };

inline const char* to_string(Exchange e) {
    return e == Exchange::symmetric ? "symmetric" : "antisymmetric";
}

struct TwoBodyState {
    double energy;
    Eigen::MatrixXd coeff;  // Psi(x_i, x_j); h^2 * sum Psi^2 = 1
    Exchange exchange;
    Parity parity;
    int band_index;  // 0..3 within the lowest band, -1 otherwise
};

// Packed basis of exchange-adapted pair states: (|ij> + s|ji>)/sqrt(2) for
// i < j plus the diagonal |ii> in the symmetric block.
struct PairBasis {
    int n;
    Exchange exchange;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> index;  // flat (i, j) -> packed index, -1 if absent

    static PairBasis make(int n, Exchange ex) {
        PairBasis b;
        b.n = n;
        b.exchange = ex;
        b.index.assign(static_cast<size_t>(n) * n, -1);
        const int skip = (ex == Exchange::antisymmetric) ? 1 : 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + skip; j < n; ++j) {
                b.index[static_cast<size_t>(i) * n + j] =
                    static_cast<int>(b.pairs.size());
                b.pairs.emplace_back(i, j);
            }
        return b;
    }

    int size() const { return static_cast<int>(pairs.size()); }
    int at(int i, int j) const { return index[static_cast<size_t>(i) * n + j]; }
};

// Unit packed vector <-> coefficient matrix with unit Frobenius norm.
inline void packed_to_matrix(const PairBasis& b, const double* v,
                             Eigen::MatrixXd& out) {
    const double s = (b.exchange == Exchange::symmetric) ? 1.0 : -1.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    out.setZero(b.n, b.n);
    for (int p = 0; p < b.size(); ++p) {
        const auto [i, j] = b.pairs[p];
        if (i == j) {
            out(i, i) = v[p];
        } else {
            out(i, j) = v[p] * inv_sqrt2;
            out(j, i) = s * v[p] * inv_sqrt2;
        }
    }
}

// Adjoint of packed_to_matrix on exchange-pure matrices (Y = s Y^T).
inline void matrix_to_packed(const PairBasis& b, const Eigen::MatrixXd& y,
                             double* out) {
    const double sqrt2 = std::sqrt(2.0);
    for (int p = 0; p < b.size(); ++p) {
        const auto [i, j] = b.pairs[p];
        out[p] = (i == j) ? y(i, i) : sqrt2 * y(i, j);
    }
}

// Full product-space Hamiltonian H = T(x1) + T(x2) + V(x1) + V(x2)
// + (g1d/h) delta_{x1 x2}, applied matrix-free to coefficient matrices.
class ProductOperator {
  public:
    ProductOperator(const Grid& g, double kappa, double g1d)
        : a_(single_particle_hamiltonian(g, kappa)), contact_(g1d / g.h) {}

    const Eigen::MatrixXd& one_body() const { return a_; }
    double contact() const { return contact_; }

    void apply(const Eigen::MatrixXd& c, Eigen::MatrixXd& y) const {
        y.noalias() = a_ * c;
        y.noalias() += c * a_;
        if (contact_ != 0.0) y.diagonal() += contact_ * c.diagonal();
    }

  private:
    Eigen::MatrixXd a_;  // one-body Hamiltonian; symmetric
    double contact_;
};

// Dense exchange block of the two-body Hamiltonian.  Element formula with
// A = T + diag(V), gamma = 1 (i<j) or 1/sqrt(2) (i=j), s = +-1:
//   <p|H|q> = gamma_p gamma_q [ A_ik d_jl + A_jl d_ik + s A_il d_jk
//             + s A_jk d_il + (g/h) d_ij (d_ik d_jl + s d_il d_jk) ].
// Assembled column-wise; only rows sharing an index with (k, l) are touched.
inline Eigen::MatrixXd block_hamiltonian(const Grid& g, double kappa, double g1d,
                                         Exchange ex) {
    const PairBasis basis = PairBasis::make(g.n, ex);
    const Eigen::MatrixXd a = single_particle_hamiltonian(g, kappa);
    const double s = (ex == Exchange::symmetric) ? 1.0 : -1.0;
    const int m = basis.size();
    Eigen::MatrixXd hb = Eigen::MatrixXd::Zero(m, m);

    std::vector<double> gamma(m);
    for (int p = 0; p < m; ++p)
        gamma[p] = (basis.pairs[p].first == basis.pairs[p].second)
                       ? 1.0 / std::sqrt(2.0)
                       : 1.0;

    for (int q = 0; q < m; ++q) {
        const auto [k, l] = basis.pairs[q];
        double* col = hb.col(q).data();
        auto add = [&](int i, int j, double v) {
            if (i > j) std::swap(i, j);
            const int p = basis.at(i, j);
            if (p >= 0) col[p] += v;
        };
        for (int t = 0; t < g.n; ++t) {
            const double c1 = (t < l) ? 1.0 : (t > l ? s : 1.0 + s);
            if (c1 != 0.0) add(t, l, c1 * a(t, k));
            const double c2 = (t > k) ? 1.0 : (t < k ? s : 1.0 + s);
            if (c2 != 0.0) add(k, t, c2 * a(t, l));
        }
        if (k == l && g1d != 0.0) col[q] += 2.0 * g1d / g.h;
        for (int p = 0; p < m; ++p) col[p] *= gamma[p] * gamma[q];
    }
    return hb;
}

namespace detail {

inline void fix_sign_matrix(Eigen::MatrixXd& c) {
    const double cut = 1e-6 * c.cwiseAbs().maxCoeff();
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
            if (std::abs(c(i, j)) > cut) {
                if (c(i, j) < 0.0) c = -c;
                return;
            }
}

inline Eigen::MatrixXd spatial_flip(const Eigen::MatrixXd& c) {
    return c.reverse();  // both indices reversed
}

inline Parity classify_parity_matrix(const Eigen::MatrixXd& c, double tol) {
    const Eigen::MatrixXd flipped = spatial_flip(c);
    if ((c - flipped).cwiseAbs().maxCoeff() < tol) return Parity::even;
    if ((c + flipped).cwiseAbs().maxCoeff() < tol) return Parity::odd;
    throw classification_error("two-body state has no definite parity");
}

// Parity rotation of numerically degenerate clusters, on coefficient matrices.
inline void rotate_band_parity(std::vector<double>& energies,
                               std::vector<Eigen::MatrixXd>& mats,
                               double degeneracy_tol) {
    const int m = static_cast<int>(mats.size());
    int lo = 0;
    while (lo < m) {
        int hi = lo + 1;
        while (hi < m && std::abs(energies[hi] - energies[hi - 1]) < degeneracy_tol)
            ++hi;
        if (hi - lo > 1) {
            const int k = hi - lo;
            Eigen::MatrixXd p(k, k);
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b)
                    p(a, b) = (mats[lo + a].array() * spatial_flip(mats[lo + b]).array())
                                  .sum();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p);
            std::vector<Eigen::MatrixXd> rotated(k);
            for (int a = 0; a < k; ++a) {
                rotated[a].setZero(mats[lo].rows(), mats[lo].cols());
                for (int b = 0; b < k; ++b)
                    rotated[a] += es.eigenvectors()(b, a) * mats[lo + b];
            }
            for (int a = 0; a < k; ++a) mats[lo + a] = std::move(rotated[a]);
        }
        lo = hi;
    }
}

}  // namespace detail

namespace detail {

// Shared post-processing for any block eigensolver backend: parity rotation of
// degenerate clusters, sign fix, labeling, continuum normalization (1/h).
inline TwoBodyState finish_state(double energy, Eigen::MatrixXd coeff, Exchange ex,
                                 int band, double h) {
    fix_sign_matrix(coeff);
    const Parity par = classify_parity_matrix(coeff, 1e-8);
    return {energy, coeff / h, ex, par, band};
}

}  // namespace detail

// The four-state lowest band keyed by band index: [0] lowest symmetric,
// [1] lowest antisymmetric, [2]/[3] second/third symmetric.  Labels follow
// exchange symmetry, not raw energy order, so they survive the level
// crossings that strong repulsion causes.
inline std::array<TwoBodyState, 4> assemble_band(
    const Grid& g, std::vector<double> es, std::vector<Eigen::MatrixXd> ms,
    std::vector<double> ea, std::vector<Eigen::MatrixXd> ma) {
    if (es.size() < 3 || ma.empty())
        throw precondition_error("assemble_band: need 3 symmetric + 1 antisymmetric");
    detail::rotate_band_parity(es, ms, 1e-9);
    detail::rotate_band_parity(ea, ma, 1e-9);
    std::array<TwoBodyState, 4> band;
    band[0] = detail::finish_state(es[0], std::move(ms[0]), Exchange::symmetric, 0, g.h);
    band[1] = detail::finish_state(ea[0], std::move(ma[0]), Exchange::antisymmetric, 1, g.h);
    band[2] = detail::finish_state(es[1], std::move(ms[1]), Exchange::symmetric, 2, g.h);
    band[3] = detail::finish_state(es[2], std::move(ms[2]), Exchange::symmetric, 3, g.h);
    return band;
}

inline std::array<TwoBodyState, 4> lowest_band(const Grid& g, double kappa,
                                               double g1d) {
    const PairBasis sym = PairBasis::make(g.n, Exchange::symmetric);
    const PairBasis anti = PairBasis::make(g.n, Exchange::antisymmetric);
    EigResult rs = eigh_lowest(block_hamiltonian(g, kappa, g1d, Exchange::symmetric),
                               std::min(3, sym.size()));
    EigResult ra = eigh_lowest(
        block_hamiltonian(g, kappa, g1d, Exchange::antisymmetric), 1);
    std::vector<Eigen::MatrixXd> ms(rs.values.size()), ma(1);
    for (size_t i = 0; i < rs.values.size(); ++i)
        packed_to_matrix(sym, rs.vectors.col(static_cast<int>(i)).data(), ms[i]);
    packed_to_matrix(anti, ra.vectors.col(0).data(), ma[0]);
    return assemble_band(g, std::move(rs.values), std::move(ms),
                         std::move(ra.values), std::move(ma));
}

// Quadrature inner product of two states on the same grid.
inline double overlap(const TwoBodyState& a, const TwoBodyState& b, const Grid& g) {
    if (a.coeff.rows() != g.n || b.coeff.rows() != g.n)
        throw precondition_error("overlap: states on a different grid");
    return g.h * g.h * (a.coeff.array() * b.coeff.array()).sum();
}

// Lowest band of the interacting pair.  Solves each exchange block densely,
// merges, and assigns band indices by exchange-resolved order (ground = lowest
// symmetric, first = lowest antisymmetric, second/third = next symmetric
// states); energy crossings do not reshuffle the assignment.
inline std::vector<TwoBodyState> solve_band(const Grid& g, double kappa, double g1d,
                                            int n_states = 4) {
    if (n_states < 4) throw precondition_error("solve_band: need n_states >= 4");

    struct Raw {
        double energy;
        Eigen::MatrixXd coeff;
        Exchange exchange;
        int rank;  // position within its exchange block
    };
    std::vector<Raw> raw;

    for (const Exchange ex : {Exchange::symmetric, Exchange::antisymmetric}) {
        const PairBasis basis = PairBasis::make(g.n, ex);
        const int want = std::min(n_states, basis.size());
        EigResult r = eigh_lowest(block_hamiltonian(g, kappa, g1d, ex), want);
        std::vector<Eigen::MatrixXd> mats(want);
        for (int i = 0; i < want; ++i)
            packed_to_matrix(basis, r.vectors.col(i).data(), mats[i]);
        detail::rotate_band_parity(r.values, mats, 1e-9);
        for (int i = 0; i < want; ++i)
            raw.push_back({r.values[i], std::move(mats[i]), ex, i});
    }

    std::stable_sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.exchange < b.exchange;  // deterministic tie-break at g1d = 0
    });

    std::vector<TwoBodyState> states;
    states.reserve(n_states);
    const double inv_h = 1.0 / g.h;
    for (int i = 0; i < n_states; ++i) {
        Raw& rw = raw[i];
        detail::fix_sign_matrix(rw.coeff);
        const Parity par = detail::classify_parity_matrix(rw.coeff, 1e-8);
        int band = -1;
        if (rw.exchange == Exchange::symmetric && rw.rank < 3)
            band = (rw.rank == 0) ? 0 : rw.rank + 1;
        else if (rw.exchange == Exchange::antisymmetric && rw.rank == 0)
            band = 1;
        states.push_back({rw.energy, rw.coeff * inv_h, rw.exchange, par, band});
    }
    return states;
}

// Separable g1d = 0 references: u0 u0, (u0 u1 +- u1 u0)/sqrt(2), u1 u1.
inline std::array<TwoBodyState, 4> noninteracting_reference(
    const SingleParticleState& u0, const SingleParticleState& u1, const Grid& g) {
    const auto as_vec = [&](const SingleParticleState& u) {
        return Eigen::Map<const Eigen::VectorXd>(u.orbital.data(), g.n);
    };
    const Eigen::VectorXd a = as_vec(u0), b = as_vec(u1);
    if (std::abs(g.h * a.dot(b)) > 1e-8 ||
        std::abs(g.h * a.squaredNorm() - 1.0) > 1e-8 ||
        std::abs(g.h * b.squaredNorm() - 1.0) > 1e-8)
        throw precondition_error("noninteracting_reference: orbitals not orthonormal");

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::array<TwoBodyState, 4> out;
    out[0] = {2.0 * u0.energy, a * a.transpose(), Exchange::symmetric,
              Parity::even, 0};
    out[1] = {u0.energy + u1.energy,
              (a * b.transpose() - b * a.transpose()) * inv_sqrt2,
              Exchange::antisymmetric, Parity::odd, 1};
    out[2] = {u0.energy + u1.energy,
              (a * b.transpose() + b * a.transpose()) * inv_sqrt2,
              Exchange::symmetric, Parity::odd, 2};
    out[3] = {2.0 * u1.energy, b * b.transpose(), Exchange::symmetric,
              Parity::even, 3};
    for (auto& st : out) detail::fix_sign_matrix(st.coeff);
    return out;
}

// Fermi-Bose map: the Tonks-Girardeau ground state is |Psi_antisym|.
inline TwoBodyState fermi_bose_map(const TwoBodyState& antisym, const Grid& g) {
    if (antisym.exchange != Exchange::antisymmetric)
        throw precondition_error("fermi_bose_map: input must be antisymmetric");
    TwoBodyState out = antisym;
    out.coeff = antisym.coeff.cwiseAbs();
    out.coeff /= std::sqrt(out.coeff.squaredNorm()) * g.h;
    out.exchange = Exchange::symmetric;
    out.parity = detail::classify_parity_matrix(out.coeff, 1e-8);
    out.band_index = 0;
    return out;
}

struct Moments {
    double dipole;      // <a| x1 + x2 |b>
    double quadrupole;  // <a| x1^2 + x2^2 |b>
};

inline Moments transition_moments(const TwoBodyState& a, const TwoBodyState& b,
                                  const Grid& g) {
    if (a.coeff.rows() != g.n || b.coeff.rows() != g.n)
        throw precondition_error("transition_moments: states on a different grid");
    double dip = 0.0, quad = 0.0;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
            const double w = a.coeff(i, j) * b.coeff(i, j);
            dip += w * (g.x[i] + g.x[j]);
            quad += w * (g.x[i] * g.x[i] + g.x[j] * g.x[j]);
        }
    const double h2 = g.h * g.h;
    return {dip * h2, quad * h2};
}

}
