#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace hermicurv;
using hc_test::Rng;

namespace {

const std::vector<std::string> kKahler = {"euclidean", "fubini_study", "poincare_ball"};

RealTangentVector e(std::size_t dim, std::size_t i) {
    RVector v = RVector::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(i)] = 1.0;
    return RealTangentVector(v);
}

HoloTangentVector hv(std::initializer_list<Complex> xs) {
    CVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index k = 0;
    for (auto x : xs) v[k++] = x;
    return HoloTangentVector(v);
}

double K_of(const PointCurvatures& pc, const Plane& pl) { return riemann_sectional(pc.real, pc.rjet, pl); }
double KD_of(const PointCurvatures& pc, const Plane& pl) { return chern_sectional(pc.chern, pc.jet.metric(), pl); }

}  // namespace

TEST_CASE("euclidean: all scalar curvatures vanish") {
    Rng rng(61);
    const auto m = catalog_metric("euclidean", 2);
    const ChartPoint p{Complex(0.1, 0.2), Complex(-0.3, 0.4)};
    const auto pc = curvatures_at(m, p);
    const Plane pl = hc_test::orthonormal_plane(rng, pc.rjet.g);
    CHECK(K_of(pc, pl) == 0.0);
    CHECK(KD_of(pc, pl) == 0.0);
    CHECK(holo_sectional(pc.chern, pc.jet.metric(), hv({1, 2})) == 0.0);
    CHECK(holo_bisectional(pc.chern, pc.jet.metric(), hv({1, 2}), hv({0, 1})) == 0.0);
    CHECK(thm11_lhs(induced_curvature(m, p), pc.rjet, pl.u, pl.v) == 0.0);
    const auto ids = identity_suite(pc, pl.u, pl.v);
    CHECK(ids.kahler_bisectional == 0.0);
    CHECK(ids.kahler_sectional == 0.0);
    CHECK(ids.kahler_holomorphic == 0.0);
    CHECK(ids.decomposition == 0.0);
    CHECK(ids.holomorphic_plane == 0.0);
}

// Holomorphic planes of fubini_study carry K = 4 = 2 H in this normalisation
// (R(u,Ju,Ju,u) = 2 KR(xi,xibar,xi,xibar) with KR = 2 at the origin).
TEST_CASE("constant-curvature models at the origin") {
    const auto fs1 = curvatures_at(catalog_metric("fubini_study", 1), ChartPoint{Complex(0, 0)});
    const Plane pl{e(2, 0), e(2, 1)};
    CHECK(K_of(fs1, pl) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(KD_of(fs1, pl) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(holo_sectional(fs1.chern, fs1.jet.metric(), hv({1})) == doctest::Approx(2.0).epsilon(1e-12));

    const auto pb1 = curvatures_at(catalog_metric("poincare_ball", 1), ChartPoint{Complex(0, 0)});
    CHECK(K_of(pb1, holomorphic_plane(e(2, 0))) == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(holo_sectional(pb1.chern, pb1.jet.metric(), hv({1})) == doctest::Approx(-2.0).epsilon(1e-12));

    const auto fs2 = curvatures_at(catalog_metric("fubini_study", 2), ChartPoint{Complex(0, 0), Complex(0, 0)});
    const auto h = fs2.jet.metric();
    CHECK(holo_sectional(fs2.chern, h, hv({1, 0})) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(holo_bisectional(fs2.chern, h, hv({1, 0}), hv({0, 1})) == doctest::Approx(1.0).epsilon(1e-12));
    // same bisectional value through the finite-difference jet
    const auto fd = fd_oracle_jet(catalog_metric("fubini_study", 2), ChartPoint{Complex(0, 0), Complex(0, 0)});
    CHECK(holo_bisectional(chern_curvature(fd), fd.metric(), hv({1, 0}), hv({0, 1})) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("curvature of D on fubini_study with v = Ju at the origin") {
    const auto m = catalog_metric("fubini_study", 1);
    const ChartPoint o{Complex(0, 0)};
    const auto pc = curvatures_at(m, o);
    const auto u = e(2, 0), v = apply_J(u);
    CHECK(thm11_lhs(induced_curvature(m, o), pc.rjet, u, v) == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(chern_sectional_numerator(pc.chern, to_holomorphic(u), to_holomorphic(v)) ==
          doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("errors: degenerate planes and zero vectors") {
    const auto pc = curvatures_at(catalog_metric("fubini_study", 2), ChartPoint{Complex(0.1, 0), Complex(0, 0.2)});
    const RealTangentVector u(RVector::Ones(4));
    const Plane bad{u, RealTangentVector(2.0 * u.comps)};
    CHECK_THROWS_AS(K_of(pc, bad), InvalidArgument);
    CHECK_THROWS_AS(KD_of(pc, bad), InvalidArgument);
    CHECK_THROWS_AS(K_of(pc, Plane{u, RealTangentVector(RVector::Zero(4))}), InvalidArgument);
    CHECK_THROWS_AS(holo_sectional(pc.chern, pc.jet.metric(), hv({0, 0})), InvalidArgument);
    CHECK_THROWS_AS(holo_bisectional(pc.chern, pc.jet.metric(), hv({1, 0}), hv({0, 0})), InvalidArgument);
    CHECK_THROWS_AS(K_of(pc, Plane{e(6, 0), e(6, 1)}), DimensionError);
}

TEST_CASE("property: K and K_D are invariant under re-spanning the plane; K_D is symmetric") {
    Rng rng(62);
    for (const auto& name : hc_test::kAllMetrics) {
        const auto m = catalog_metric(name, 2);
        for (int s = 0; s < 10; ++s) {
            const auto pc = curvatures_at(m, hc_test::random_point(rng, name, 2));
            const Plane pl{RealTangentVector(rng.rvec(4)), RealTangentVector(rng.rvec(4))};
            const double a = rng.normal(), b = rng.normal(), c = rng.normal(), d = rng.normal();
            if (std::abs(a * d - b * c) < 0.1) continue;
            const Plane q{RealTangentVector(a * pl.u.comps + b * pl.v.comps),
                          RealTangentVector(c * pl.u.comps + d * pl.v.comps)};
            const double k = K_of(pc, pl), kd = KD_of(pc, pl);
            INFO(name);
            CHECK(std::abs(K_of(pc, q) - k) <= 1e-8 * std::max(1.0, std::abs(k)));
            CHECK(std::abs(KD_of(pc, q) - kd) <= 1e-8 * std::max(1.0, std::abs(kd)));
            CHECK(std::abs(KD_of(pc, Plane{pl.v, pl.u}) - kd) <= 1e-10 * std::max(1.0, std::abs(kd)));
        }
    }
}

TEST_CASE("property: H is scale invariant and B(xi, xi) = H(xi)") {
    Rng rng(63);
    for (const auto& name : hc_test::kAllMetrics) {
        const auto m = catalog_metric(name, 3);
        for (int s = 0; s < 20; ++s) {
            const auto jet = jet_at(m, hc_test::random_point(rng, name, 3));
            const auto kr = chern_curvature(jet);
            const HoloTangentVector xi(rng.cvec(3));
            const Complex c(rng.normal(), rng.normal());
            const double H = holo_sectional(kr, jet.metric(), xi);
            INFO(name);
            CHECK(std::abs(holo_sectional(kr, jet.metric(), HoloTangentVector(c * xi.comps)) - H) <=
                  1e-10 * std::max(1.0, std::abs(H)));
            CHECK(std::abs(holo_bisectional(kr, jet.metric(), xi, xi) - H) <= 1e-10 * std::max(1.0, std::abs(H)));
        }
    }
}

TEST_CASE("property: fubini_study sectional curvature is 1 + 3 g(u, Jv)^2 on orthonormal pairs") {
    Rng rng(64);
    const auto m = catalog_metric("fubini_study", 2);
    for (int s = 0; s < 50; ++s) {
        const auto pc = curvatures_at(m, hc_test::random_point(rng, "fubini_study", 2));
        const Plane pl = hc_test::orthonormal_plane(rng, pc.rjet.g);
        const double c = pc.rjet.inner(pl.u, apply_J(pl.v));
        CHECK(K_of(pc, pl) == doctest::Approx(1.0 + 3.0 * c * c).epsilon(1e-9));
    }
}

TEST_CASE("property: Kaehler metrics have K = K_D; nk_diag has a plane where they differ") {
    Rng rng(65);
    for (const auto& name : kKahler) {
        const auto m = catalog_metric(name, 2);
        for (int s = 0; s < 100; ++s) {
            const auto pc = curvatures_at(m, hc_test::random_point(rng, name, 2));
            const Plane pl = hc_test::orthonormal_plane(rng, pc.rjet.g);
            CHECK(std::abs(K_of(pc, pl) - KD_of(pc, pl)) < 1e-7);
        }
    }
    const auto pc = curvatures_at(catalog_metric("nk_diag", 2), ChartPoint{Complex(1, 0), Complex(0, 0)});
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
        const Plane pl = hc_test::orthonormal_plane(rng, pc.rjet.g);
        worst = std::max(worst, std::abs(K_of(pc, pl) - KD_of(pc, pl)));
    }
    CHECK(worst > 1e-3);
}

TEST_CASE("property: curvature of D matches the KR contraction on every catalog metric") {
    Rng rng(66);
    for (const auto& name : hc_test::kAllMetrics) {
        const auto m = catalog_metric(name, 2);
        for (int s = 0; s < 10; ++s) {
            const auto p = hc_test::random_point(rng, name, 2);
            const auto pc = curvatures_at(m, p);
            const auto rd = induced_curvature(m, p);
            for (int t = 0; t < 5; ++t) {
                const Plane pl = hc_test::orthonormal_plane(rng, pc.rjet.g);
                const double lhs = thm11_lhs(rd, pc.rjet, pl.u, pl.v);
                const double rhs = chern_sectional_numerator(pc.chern, to_holomorphic(pl.u), to_holomorphic(pl.v));
                INFO(name);
                CHECK(std::abs(lhs - rhs) <= 1e-5 * std::max(1.0, std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("property: v = Ju turns the K_D numerator into 2 KR(xi, xibar, xi, xibar)") {
    Rng rng(67);
    for (const auto& name : hc_test::kAllMetrics) {
        const auto m = catalog_metric(name, 2);
        for (int s = 0; s < 20; ++s) {
            const auto pc = curvatures_at(m, hc_test::random_point(rng, name, 2));
            const RealTangentVector u(rng.rvec(4));
            const CVector xi = to_holomorphic(u).comps;
            const double num = chern_sectional_numerator(pc.chern, to_holomorphic(u), to_holomorphic(apply_J(u)));
            const double direct = 2.0 * pc.chern.contract(xi, xi, xi, xi).real();
            INFO(name);
            CHECK(std::abs(num - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("property: identity suite") {
    Rng rng(68);
    for (const auto& name : hc_test::kAllMetrics) {
        const bool kahler = std::find(kKahler.begin(), kKahler.end(), name) != kKahler.end();
        const auto m = catalog_metric(name, 2);
        for (int s = 0; s < 10; ++s) {
            const auto pc = curvatures_at(m, hc_test::random_point(rng, name, 2));
            for (int t = 0; t < 5; ++t) {
                const Plane pl = hc_test::orthonormal_plane(rng, pc.rjet.g);
                const auto ids = identity_suite(pc, pl.u, pl.v);
                const double scale = std::max(1.0, pc.real.r.max_abs());
                INFO(name);
                CHECK(std::abs(ids.decomposition) < 1e-6 * scale);
                CHECK(std::abs(ids.holomorphic_plane) < 1e-6 * scale);
                if (kahler) {
                    CHECK(std::abs(ids.kahler_bisectional) < 1e-7 * scale);
                    CHECK(std::abs(ids.kahler_sectional) < 1e-7 * scale);
                    CHECK(std::abs(ids.kahler_holomorphic) < 1e-7 * scale);
                }
            }
        }
    }
    // nk_diag violates the Kaehler-only sectional identity somewhere.
    const auto pc = curvatures_at(catalog_metric("nk_diag", 2), ChartPoint{Complex(1, 0), Complex(0, 0)});
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const Plane pl = hc_test::orthonormal_plane(rng, pc.rjet.g);
        worst = std::max(worst, std::abs(identity_suite(pc, pl.u, pl.v).kahler_sectional));
    }
    CHECK(worst > 1e-3);
}

TEST_CASE("property: Riemann sectional curvature agrees with the finite-difference oracle") {
    Rng rng(69);
    for (const auto& name : hc_test::kAllMetrics) {
        const auto m = catalog_metric(name, 2);
        const auto p = hc_test::random_point(rng, name, 2);
        const auto pc = curvatures_at(m, p);
        const auto oracle = hc_test::oracle_riemann(m, p);
        for (int t = 0; t < 10; ++t) {
            const Plane pl = hc_test::orthonormal_plane(rng, pc.rjet.g);
            double r = 0.0;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    for (std::size_t k = 0; k < 4; ++k)
                        for (std::size_t l = 0; l < 4; ++l)
                            r += oracle(i, j, k, l) * pl.u.comps[i] * pl.v.comps[j] * pl.v.comps[k] * pl.u.comps[l];
            INFO(name);
            CHECK(std::abs(K_of(pc, pl) - r) < 1e-4 * std::max(1.0, std::abs(r)));
        }
    }
}
