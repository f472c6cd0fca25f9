#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace hermicurv;
using hc_test::Rng;

namespace {

double max_block(const std::vector<CMatrix>& blocks) {
    double m = 0.0;
    for (const auto& b : blocks) m = std::max(m, b.cwiseAbs().maxCoeff());
    return m;
}

double max_block(const std::vector<RMatrix>& blocks) {
    double m = 0.0;
    for (const auto& b : blocks) m = std::max(m, b.cwiseAbs().maxCoeff());
    return m;
}

}  // namespace

TEST_CASE("catalog: euclidean has identity metric and zero jets") {
    Rng rng(31);
    const auto m = catalog_metric("euclidean", 3);
    for (int s = 0; s < 5; ++s) {
        const auto jet = jet_at(m, hc_test::random_point(rng, "euclidean", 3));
        CHECK((jet.h - CMatrix::Identity(3, 3)).norm() == 0.0);
        CHECK(max_block(jet.d1_holo) == 0.0);
        CHECK(max_block(jet.d1_anti) == 0.0);
        CHECK(max_block(jet.d2_mixed) == 0.0);
        CHECK(max_block(jet.d2_holo) == 0.0);
        CHECK(max_block(jet.d2_anti) == 0.0);
        const auto rjet = real_jet_from(jet);
        CHECK((rjet.g - RMatrix::Identity(6, 6)).norm() == 0.0);
        CHECK(max_block(rjet.dg) == 0.0);
        CHECK(max_block(rjet.d2g) == 0.0);
    }
    const auto fd = fd_oracle_jet(m, ChartPoint{Complex(0.2, 0.1), Complex(0, 0), Complex(-1, 2)});
    CHECK(max_block(fd.d1_holo) == 0.0);
    CHECK(max_block(fd.d2_mixed) == 0.0);
}

TEST_CASE("catalog: fubini_study n=1 at the origin") {
    const auto m = catalog_metric("fubini_study", 1);
    const ChartPoint o{Complex(0, 0)};
    const auto jet = jet_at(m, o);
    CHECK(std::abs(jet.h(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(jet.dz(0)(0, 0)) < 1e-15);
    CHECK(std::abs(jet.dzb(0)(0, 0)) < 1e-15);
    CHECK(std::abs(jet.dzdzb(0, 0)(0, 0) - Complex(-2, 0)) < 1e-14);

    // Independent: central differences of the evaluated entry.
    const auto fd = fd_oracle_jet(m, o);
    CHECK(std::abs(fd.dzdzb(0, 0)(0, 0) - Complex(-2, 0)) < 1e-4);

    const auto rjet = real_jet_from(jet);
    CHECK((rjet.g - RMatrix::Identity(2, 2)).norm() < 1e-15);
    CHECK(std::abs(rjet.dd(0, 0)(0, 0) + 4.0) < 1e-13);
    // Re(1/(1+x^2)^2) has second x-derivative -4 at 0; checked by differences.
    const double h = 1e-4;
    auto g11 = [&](double x) { return hc_test::oracle_g(m, (RVector(2) << x, 0.0).finished())(0, 0); };
    CHECK(std::abs((g11(h) - 2 * g11(0) + g11(-h)) / (h * h) + 4.0) < 1e-5);
}

TEST_CASE("catalog: nk_diag is not Kaehler at (1, 0)") {
    const auto m = catalog_metric("nk_diag", 2);
    const auto jet = jet_at(m, ChartPoint{Complex(1, 0), Complex(0, 0)});
    // d h_{2 2bar}/dz^1 = zbar^1 exp(z^1 zbar^1) = e, d h_{1 2bar}/dz^2 = 0.
    CHECK(std::abs(jet.dh(1, 1, 0) - Complex(std::exp(1.0), 0)) < 1e-13);
    CHECK(std::abs(jet.dh(0, 1, 1)) == 0.0);
}

TEST_CASE("catalog: errors") {
    CHECK_THROWS_AS(catalog_metric("no_such_metric", 2), InvalidArgument);
    CHECK_THROWS_AS(catalog_metric("fubini_study", 0), InvalidArgument);
    CHECK_THROWS_AS(catalog_metric("hopf", 1), InvalidArgument);
    const auto hopf = catalog_metric("hopf", 2);
    CHECK_THROWS_AS(jet_at(hopf, ChartPoint{Complex(0, 0), Complex(0, 0)}), Error);
    const auto ball = catalog_metric("poincare_ball", 2);
    CHECK_THROWS_AS(jet_at(ball, ChartPoint{Complex(1, 0), Complex(0.5, 0)}), Error);
    CHECK_THROWS_AS(jet_at(ball, ChartPoint{Complex(0.1, 0)}), Error);
    CHECK(is_catalog_name("hopf"));
    CHECK_FALSE(is_catalog_name("Hopf"));
}

TEST_CASE("catalog source text parses back to the same metric") {
    Rng rng(32);
    for (const auto& name : hc_test::kAllMetrics) {
        const auto m = catalog_metric(name, 2);
        const auto r = dsl::parse_metric(catalog_source(name, 2));
        for (int s = 0; s < 5; ++s) {
            const auto p = hc_test::random_point(rng, name, 2);
            CHECK((m.evaluate(p) - r.evaluate(p)).norm() < 1e-14);
        }
    }
}

TEST_CASE("property: jet invariants hold on every catalog metric") {
    Rng rng(33);
    for (const auto& name : hc_test::kAllMetrics) {
        for (std::size_t n : {2u, 3u}) {
            const auto m = catalog_metric(name, n);
            for (int s = 0; s < 20; ++s) {
                const auto jet = jet_at(m, hc_test::random_point(rng, name, n));
                INFO(name);
                CHECK(jet.consistency_defect() < 1e-10);
                CHECK((jet.h_inv * jet.h - CMatrix::Identity(n, n)).norm() < 1e-10);
                for (std::size_t g = 0; g < n; ++g)
                    for (std::size_t d = 0; d < n; ++d)
                        CHECK((jet.dzdzb(g, d) - jet.dzdzb(d, g).adjoint()).norm() < 1e-10);
                const auto rjet = real_jet_from(jet);
                CHECK((rjet.g - rjet.g.transpose()).norm() < 1e-14);
            }
        }
    }
}

TEST_CASE("property: symbolic jets agree with finite differences") {
    Rng rng(34);
    for (const auto& name : hc_test::kAllMetrics) {
        const auto m = catalog_metric(name, 2);
        for (int s = 0; s < 20; ++s) {
            const auto p = hc_test::random_point(rng, name, 2);
            const auto d = compare_jets(jet_at(m, p), fd_oracle_jet(m, p));
            INFO(name);
            CHECK(d.first < 1e-6);
            CHECK(d.second < 1e-4);
        }
    }
    const auto fs = catalog_metric("fubini_study", 1);
    const auto d = compare_jets(jet_at(fs, ChartPoint{Complex(0.3, 0)}), fd_oracle_jet(fs, ChartPoint{Complex(0.3, 0)}));
    CHECK(d.first < 1e-6);
    CHECK(d.second < 1e-4);
}

TEST_CASE("finite-difference first derivatives converge at second order") {
    const auto m = catalog_metric("fubini_study", 2);
    const ChartPoint p{Complex(0.3, 0.2), Complex(-0.1, 0.4)};
    const auto exact = jet_at(m, p);
    const double e1 = compare_jets(exact, fd_oracle_jet(m, p, 1e-2)).first;
    const double e2 = compare_jets(exact, fd_oracle_jet(m, p, 5e-3)).first;
    CHECK(e2 > 0.0);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("property: real jet matches real finite differences of g") {
    Rng rng(35);
    for (const auto& name : hc_test::kAllMetrics) {
        const auto m = catalog_metric(name, 2);
        for (int s = 0; s < 5; ++s) {
            const auto p = hc_test::random_point(rng, name, 2);
            const auto rjet = real_jet_at(m, p);
            const RVector x = p.real_coords();
            CHECK((rjet.g - hc_test::oracle_g(m, x)).norm() < 1e-13);
            const double h = 1e-5;
            for (Eigen::Index k = 0; k < 4; ++k) {
                RVector xp = x, xm = x;
                xp[k] += h;
                xm[k] -= h;
                const RMatrix fd = (hc_test::oracle_g(m, xp) - hc_test::oracle_g(m, xm)) / (2 * h);
                INFO(name);
                CHECK((fd - rjet.d(static_cast<std::size_t>(k))).cwiseAbs().maxCoeff() < 1e-6);
            }
        }
    }
}

TEST_CASE("property: g positive definite exactly when h is") {
    Rng rng(36);
    for (int s = 0; s < 200; ++s) {
        CMatrix h(2, 2);
        const double a = rng.uniform(-1, 2), b = rng.uniform(-1, 2);
        const Complex c(rng.normal(), rng.normal());
        h << a, c, std::conj(c), b;
        const bool h_pd = HermitianMatrixValue(h).min_eigenvalue() > 0.0;
        const RMatrix g = real_metric_from_hermitian(h);
        const bool g_pd = Eigen::SelfAdjointEigenSolver<RMatrix>(g).eigenvalues().minCoeff() > 0.0;
        CHECK(h_pd == g_pd);
    }
}
