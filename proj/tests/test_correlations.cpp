#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "dwell/correlations.hpp"
#include "dwell/lanczos.hpp"
#include "dwell/two_particle.hpp"

using namespace dwell;
using Catch::Approx;

namespace {

const Grid& grid61() {
    static const Grid g = make_grid(61, 0.16);
    return g;
}

const std::array<TwoBodyState, 4>& band61(double kappa, double g1d) {
    static std::map<std::pair<double, double>, std::array<TwoBodyState, 4>> cache;
    auto it = cache.find({kappa, g1d});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(kappa, g1d),
                           lowest_band(grid61(), kappa, g1d)).first;
    return it->second;
}

double entropy_of(const TwoBodyState& st, const Grid& g) {
    return von_neumann_entropy(natural_orbitals(rspdm(st, g), g));
}

}  // namespace

TEST_CASE("product state has one occupied orbital", "[correlations]") {
    const auto& band = band61(2.0, 0.0);
    const Rspdm r = rspdm(band[0], grid61());

    REQUIRE(grid61().h * r.rho.trace() == Approx(1.0).margin(1e-10));
    REQUIRE((r.rho - r.rho.transpose()).cwiseAbs().maxCoeff() < 1e-12);

    const SpectralDecomposition d = natural_orbitals(r, grid61());
    REQUIRE(d.occupations[0] == Approx(1.0).margin(1e-9));
    REQUIRE(std::abs(d.occupations[1]) < 1e-9);
    REQUIRE(von_neumann_entropy(d) == Approx(0.0).margin(1e-8));
    REQUIRE(schmidt_number(d, 1e-6) == 1);
}

TEST_CASE("exchange-odd free state occupies two orbitals equally", "[correlations]") {
    const auto singles = solve_single(grid61(), 2.0, 2);
    const auto ref = noninteracting_reference(singles[0], singles[1], grid61());
    const Rspdm r = rspdm(ref[1], grid61());

    // rho(x, x') = (u0 u0' + u1 u1') / 2 for the antisymmetrized pair.
    Eigen::Map<const Eigen::VectorXd> u0(singles[0].orbital.data(), grid61().n);
    Eigen::Map<const Eigen::VectorXd> u1(singles[1].orbital.data(), grid61().n);
    const Eigen::MatrixXd expected =
        0.5 * (u0 * u0.transpose() + u1 * u1.transpose());
    REQUIRE((r.rho - expected).cwiseAbs().maxCoeff() < 1e-10);

    const SpectralDecomposition d = natural_orbitals(r, grid61());
    REQUIRE(d.occupations[0] == Approx(0.5).margin(1e-12));
    REQUIRE(d.occupations[1] == Approx(0.5).margin(1e-12));
    REQUIRE(von_neumann_entropy(d) == Approx(1.0).margin(1e-10));
    REQUIRE(schmidt_number(d, 0.01) == 2);
}

TEST_CASE("density matrix invariants on an interacting state", "[correlations]") {
    for (const int b : {0, 1, 2, 3}) {
        const Rspdm r = rspdm(band61(0.0, 1.0)[b], grid61());
        REQUIRE(grid61().h * r.rho.trace() == Approx(1.0).margin(1e-10));
        const SpectralDecomposition d = natural_orbitals(r, grid61());
        double sum = 0.0;
        for (size_t i = 0; i < d.occupations.size(); ++i) {
            REQUIRE(d.occupations[i] >= 0.0);
            if (i) REQUIRE(d.occupations[i] <= d.occupations[i - 1] + 1e-14);
            sum += d.occupations[i];
        }
        REQUIRE(sum == Approx(1.0).margin(1e-10));
        for (int a = 0; a < 6; ++a)
            for (int c = 0; c <= a; ++c)
                REQUIRE(grid61().h * d.orbitals.col(a).dot(d.orbitals.col(c)) ==
                        Approx(a == c ? 1.0 : 0.0).margin(1e-8));
    }
    REQUIRE_THROWS_AS(rspdm(band61(0.0, 1.0)[0], make_grid(41, 0.24)),
                      precondition_error);
}

TEST_CASE("orbital-sum and direct momentum transforms agree", "[correlations]") {
    const auto kgrid = default_k_grid(grid61());
    REQUIRE(kgrid.size() == 4u * 61u);
    REQUIRE(kgrid.front() == Approx(-std::numbers::pi / 0.16).margin(1e-12));
    REQUIRE(kgrid.back() == Approx(std::numbers::pi / 0.16).margin(1e-12));

    for (const int b : {0, 3}) {
        const Rspdm r = rspdm(band61(0.0, 1.0)[b], grid61());
        const SpectralDecomposition d = natural_orbitals(r, grid61());
        const auto by_orbitals = momentum_distribution(d, grid61(), kgrid);
        const auto by_kernel = momentum_distribution_direct(r, grid61(), kgrid);
        double worst = 0.0;
        for (size_t i = 0; i < kgrid.size(); ++i)
            worst = std::max(worst, std::abs(by_orbitals.n[i] - by_kernel.n[i]));
        REQUIRE(worst < 1e-8);

        REQUIRE(trapezoid(by_kernel.k, by_kernel.n) == Approx(1.0).margin(1e-6));
        for (size_t i = 0; i < kgrid.size(); ++i)
            REQUIRE(std::abs(by_kernel.n[i] - by_kernel.n[kgrid.size() - 1 - i]) <
                    1e-10);
    }
}

TEST_CASE("gaussian orbital transforms to the known gaussian profile",
          "[correlations]") {
    const Grid g = make_grid(101, 0.15);
    Eigen::VectorXd phi(g.n);
    for (int i = 0; i < g.n; ++i)
        phi[i] = std::exp(-0.5 * g.x[i] * g.x[i]);
    phi /= std::sqrt(g.h) * phi.norm();  // h-normalized

    const Rspdm r{phi * phi.transpose(), 0};
    const auto nk = momentum_distribution_direct(r, g, default_k_grid(g));
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    double worst = 0.0;
    for (size_t i = 0; i < nk.k.size(); ++i)
        worst = std::max(
            worst, std::abs(nk.n[i] - inv_sqrt_pi * std::exp(-nk.k[i] * nk.k[i])));
    REQUIRE(worst < 1e-8);
}

TEST_CASE("deep-well momentum profiles", "[correlations]") {
    const auto kgrid = default_k_grid(grid61());

    SECTION("third free level has a node at k = 0") {
        const Rspdm r = rspdm(band61(5.0, 0.0)[3], grid61());
        const SpectralDecomposition d = natural_orbitals(r, grid61());
        const double at_zero =
            momentum_distribution(d, grid61(), {0.0}).n[0];
        const auto nk = momentum_distribution(d, grid61(), kgrid);
        const double peak = *std::max_element(nk.n.begin(), nk.n.end());
        REQUIRE(at_zero < 1e-6 * peak);
    }

    SECTION("split ground state carries secondary peaks") {
        const Rspdm r = rspdm(band61(5.0, 0.0)[0], grid61());
        const auto nk =
            momentum_distribution_direct(r, grid61(), kgrid);
        int maxima = 0;
        for (size_t i = 1; i + 1 < nk.k.size(); ++i)
            if (nk.k[i] > 0.0 && nk.n[i] > nk.n[i - 1] && nk.n[i] > nk.n[i + 1])
                ++maxima;
        REQUIRE(maxima >= 2);
    }
}

TEST_CASE("exchange-odd entropy is exactly one bit", "[correlations]") {
    for (const double kappa : {0.0, 1.0, 2.0, 5.0})
        REQUIRE(entropy_of(band61(kappa, 0.0)[1], grid61()) ==
                Approx(1.0).margin(1e-10));
}

TEST_CASE("ground-state entropy saturates near one bit in the deep well",
          "[correlations]") {
    REQUIRE(entropy_of(band61(5.0, 5.0)[0], grid61()) > 0.95);
    REQUIRE(entropy_of(band61(5.0, 5.0)[0], grid61()) < 1.05);
}

TEST_CASE("strong repulsion spreads the occupations", "[correlations]") {
    const SpectralDecomposition d =
        natural_orbitals(rspdm(band61(0.0, 20.0)[0], grid61()), grid61());
    REQUIRE(d.occupations[0] == Approx(0.795626).margin(1e-3));
    REQUIRE(d.occupations[1] == Approx(0.170994).margin(1e-3));
    REQUIRE(d.occupations[0] - d.occupations[1] > 0.5);
    REQUIRE(von_neumann_entropy(d) == Approx(0.895343).margin(1e-3));
    REQUIRE(von_neumann_entropy(d) > entropy_of(band61(0.0, 1.0)[0], grid61()));
}

TEST_CASE("ground-state entropy grows with the coupling", "[correlations]") {
    // Coarser grid keeps the 21-point coupling scan cheap; the trend is
    // grid-independent.
    const Grid g = make_grid(41, 0.24);
    for (const double kappa : {0.0, 2.0}) {
        double prev = -1.0;
        for (double g1d = 0.0; g1d <= 10.0 + 1e-9; g1d += 0.5) {
            const auto band = lowest_band(g, kappa, g1d);
            const double s = entropy_of(band[0], g);
            REQUIRE(s >= prev - 1e-6);
            prev = s;
        }
    }
}

TEST_CASE("upper doublet entropies track each other in the deep well",
          "[correlations]") {
    // The wavefunction-map grid resolves the near-degenerate doublet better
    // than the default one.
    const Grid g = make_grid(81, 0.14);
    for (const double g1d : {1.0, 2.0, 5.0}) {
        const auto band = lowest_band_lanczos(g, 5.0, g1d);
        REQUIRE(std::abs(entropy_of(band[2], g) - entropy_of(band[3], g)) < 0.02);
    }
}

TEST_CASE("schmidt counting", "[correlations]") {
    const SpectralDecomposition d =
        natural_orbitals(rspdm(band61(5.0, 1.0)[0], grid61()), grid61());
    REQUIRE(schmidt_number(d, 1e-3) == 2);
    REQUIRE(schmidt_number(d, 0.01) == 2);
    REQUIRE_THROWS_AS(schmidt_number(d, 0.0), precondition_error);
    REQUIRE_THROWS_AS(schmidt_number(d, 1.0), precondition_error);
    REQUIRE_THROWS_AS(schmidt_number(d, -0.5), precondition_error);
}

TEST_CASE("trapezoid quadrature basics", "[correlations]") {
    REQUIRE(trapezoid({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}) == 2.0);
    REQUIRE(trapezoid({0.0, 1.0}, {0.0, 1.0}) == 0.5);
}
