#pragma once

// Shared test helpers: random generators and oracles that do not go through
// the library's jet/curvature pipelines. Everything here is computed from
// metric values h(z) alone, by finite differences and textbook formulas.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hermicurv/analysis.hpp"

namespace hc_test {

using namespace hermicurv;

inline const std::vector<std::string> kAllMetrics = {"euclidean", "fubini_study", "poincare_ball", "nk_diag", "hopf"};

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    RVector rvec(std::size_t m) {
        RVector v(static_cast<Eigen::Index>(m));
        for (auto& x : v) x = normal();
        return v;
    }
    CVector cvec(std::size_t n) {
        CVector v(static_cast<Eigen::Index>(n));
        for (auto& x : v) x = Complex(normal(), normal());
        return v;
    }
};

// A point inside the natural domain of the catalog metric: the unit ball for
// poincare_ball (kept well inside), away from the origin for hopf.
inline ChartPoint random_point(Rng& rng, const std::string& metric, std::size_t n) {
    for (;;) {
        CVector z(static_cast<Eigen::Index>(n));
        for (auto& c : z) c = Complex(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6));
        const double r = z.norm();
        if (metric == "poincare_ball" && r > 0.7) continue;
        if (metric == "hopf" && r < 0.3) continue;
        return ChartPoint(z);
    }
}

// ---------------------------------------------------------------------------
// Real metric straight from h(z): g(e_i, e_j) = Re h(xi_i, xi_j) with
// xi^a = u^a + i u^{n+a}, written out here rather than using the library's
// block formula.
inline RMatrix oracle_g(const MetricDefinition& m, const RVector& x) {
    const std::size_t n = m.dim();
    const CMatrix h = m.evaluate(ChartPoint::from_real(x));
    const std::size_t dim = 2 * n;
    RMatrix g(dim, dim);
    auto xi = [&](std::size_t i) {
        CVector v = CVector::Zero(static_cast<Eigen::Index>(n));
        if (i < n) v[i] = 1.0;
        else v[i - n] = Complex(0.0, 1.0);
        return v;
    };
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const CVector a = xi(i), b = xi(j);
            Complex s = 0.0;
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) s += h(p, q) * a[p] * std::conj(b[q]);
            g(i, j) = s.real();
        }
    return g;
}

// Levi-Civita Gamma^k_{ij} (returned as gam[k](i, j)) from central
// differences of g.
inline std::vector<RMatrix> oracle_christoffel(const MetricDefinition& m, const RVector& x, double step = 1e-5) {
    const auto dim = x.size();
    std::vector<RMatrix> dg;
    for (Eigen::Index k = 0; k < dim; ++k) {
        RVector xp = x, xm = x;
        xp[k] += step;
        xm[k] -= step;
        dg.push_back((oracle_g(m, xp) - oracle_g(m, xm)) / (2 * step));
    }
    const RMatrix ginv = oracle_g(m, x).inverse();
    std::vector<RMatrix> gam(dim, RMatrix::Zero(dim, dim));
    for (Eigen::Index k = 0; k < dim; ++k)
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j) {
                double s = 0.0;
                for (Eigen::Index l = 0; l < dim; ++l)
                    s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                gam[k](i, j) = 0.5 * s;
            }
    return gam;
}

// Riemann tensor from derivatives of the Christoffel symbols,
//   Rm^a_{bcd} = d_c Gam^a_{bd} - d_d Gam^a_{bc} + Gam^a_{ce} Gam^e_{bd} - Gam^a_{de} Gam^e_{bc},
// lowered with g and reordered so that out(u, v, v, u) = K(u, v) * area.
inline Tensor4<double> oracle_riemann(const MetricDefinition& m, const ChartPoint& p, double outer = 1e-4) {
    const RVector x = p.real_coords();
    const auto dim = static_cast<std::size_t>(x.size());
    const auto gam = oracle_christoffel(m, x);
    std::vector<std::vector<RMatrix>> dgam;  // dgam[c][a](b, d)
    for (std::size_t c = 0; c < dim; ++c) {
        RVector xp = x, xm = x;
        xp[c] += outer;
        xm[c] -= outer;
        const auto gp = oracle_christoffel(m, xp), gm = oracle_christoffel(m, xm);
        std::vector<RMatrix> d;
        for (std::size_t a = 0; a < dim; ++a) d.push_back((gp[a] - gm[a]) / (2 * outer));
        dgam.push_back(std::move(d));
    }
    const RMatrix g = oracle_g(m, x);
    Tensor4<double> up(dim);  // up(a, b, c, d) = Rm^a_{bcd}
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t c = 0; c < dim; ++c)
                for (std::size_t d = 0; d < dim; ++d) {
                    double s = dgam[c][a](b, d) - dgam[d][a](b, c);
                    for (std::size_t e = 0; e < dim; ++e) s += gam[a](c, e) * gam[e](b, d) - gam[a](d, e) * gam[e](b, c);
                    up(a, b, c, d) = s;
                }
    Tensor4<double> out(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                for (std::size_t l = 0; l < dim; ++l) {
                    double s = 0.0;
                    for (std::size_t a = 0; a < dim; ++a) s += g(i, a) * up(a, j, l, k);
                    out(i, j, k, l) = s;
                }
    return out;
}

// Constant holomorphic sectional curvature c: KR = c/2 (h h + h h).
inline Tensor4<Complex> constant_holomorphic_kr(const CMatrix& h, double c) {
    const auto n = static_cast<std::size_t>(h.rows());
    Tensor4<Complex> t(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t d = 0; d < n; ++d) t(a, b, g, d) = 0.5 * c * (h(a, b) * h(g, d) + h(a, d) * h(g, b));
    return t;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// g-orthonormal pair from two random vectors.
inline Plane orthonormal_plane(Rng& rng, const RMatrix& g) {
    RVector u = rng.rvec(static_cast<std::size_t>(g.rows()));
    RVector v = rng.rvec(static_cast<std::size_t>(g.rows()));
    u /= std::sqrt(u.dot(g * u));
    v -= u.dot(g * v) * u;
    v /= std::sqrt(v.dot(g * v));
    return Plane{RealTangentVector(u), RealTangentVector(v)};
}

// ---------------------------------------------------------------------------
// Random DSL expressions over z1..zn, zb1..zbn. Function arguments and
// denominators are shifted away from zero and branch cuts so the expressions
// are smooth for |z| <= 0.5.
inline std::string random_expression(Rng& rng, std::size_t n, int depth) {
    auto var = [&] {
        const int k = rng.integer(1, static_cast<int>(n));
        return (rng.integer(0, 1) ? "z" : "zb") + std::to_string(k);
    };
    auto coef = [&] {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", rng.uniform(0.1, 1.5));
        return std::string(buf);
    };
    if (depth <= 0) {
        switch (rng.integer(0, 3)) {
            case 0: return coef();
            case 1: return "(" + coef() + "*i)";
            default: return var();
        }
    }
    const std::string a = random_expression(rng, n, depth - 1);
    const std::string b = random_expression(rng, n, depth - 1);
    switch (rng.integer(0, 7)) {
        case 0: return "(" + a + " + " + b + ")";
        case 1: return "(" + a + " - " + b + ")";
        case 2: return "(" + a + " * " + b + ")";
        case 3: return "(" + a + " / (4 + 0.05*" + b + "))";
        case 4: return "(" + a + ")^" + std::to_string(rng.integer(2, 3));
        case 5: return "exp(0.3*" + a + ")";
        case 6: return "log(4 + 0.05*" + a + ")";
        default: return "sqrt(4 + 0.05*" + a + ")";
    }
}

}  // namespace hc_test
