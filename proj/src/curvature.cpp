#include "hermicurv/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace hermicurv {

Complex ChernCurvature::contract(const CVector& a, const CVector& b, const CVector& c, const CVector& d) const {
    return contract_hermitian(kr, a, b, c, d);
}

Complex contract_hermitian(const Tensor4<Complex>& kr, const CVector& a, const CVector& b, const CVector& c,
                           const CVector& d) {
    const std::size_t n = kr.extent();
    if (static_cast<std::size_t>(a.size()) != n || static_cast<std::size_t>(b.size()) != n ||
        static_cast<std::size_t>(c.size()) != n || static_cast<std::size_t>(d.size()) != n)
        throw DimensionError("contract_hermitian: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const Complex pq = a[p] * std::conj(b[q]);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t t = 0; t < n; ++t) s += kr(p, q, r, t) * pq * c[r] * std::conj(d[t]);
        }
    return s;
}

double ChernCurvature::hermitian_defect() const {
    const std::size_t n = dim();
    double m = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t d = 0; d < n; ++d)
                    m = std::max(m, std::abs(kr(a, b, g, d) - std::conj(kr(b, a, d, g))));
    return m;
}

double RealCurvature::eval(const RVector& x, const RVector& y, const RVector& z, const RVector& w) const {
    const std::size_t m = real_dim();
    if (static_cast<std::size_t>(x.size()) != m || static_cast<std::size_t>(y.size()) != m ||
        static_cast<std::size_t>(z.size()) != m || static_cast<std::size_t>(w.size()) != m)
        throw DimensionError("RealCurvature::eval: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (x[i] == 0.0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            const double xy = x[i] * y[j];
            if (xy == 0.0) continue;
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) s += r(i, j, k, l) * xy * z[k] * w[l];
        }
    }
    return s;
}

double RealCurvature::symmetry_defect() const {
    const std::size_t m = real_dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) {
                    const double v = r(i, j, k, l);
                    worst = std::max({worst, std::abs(v + r(j, i, k, l)), std::abs(v + r(i, j, l, k)),
                                      std::abs(v - r(k, l, i, j)),
                                      std::abs(v + r(j, k, i, l) + r(k, i, j, l))});
                }
    return worst / std::max(1.0, r.max_abs());
}

CVector holo_part(const CVector& xi) {
    const auto n = xi.size();
    CVector v = CVector::Zero(2 * n);
    v.head(n) = xi;
    return v;
}

CVector anti_part(const CVector& xi) {
    const auto n = xi.size();
    CVector v = CVector::Zero(2 * n);
    v.tail(n) = xi.conjugate();
    return v;
}

Complex ComplexifiedCurvature::contract(const CVector& a, const CVector& b, const CVector& c,
                                        const CVector& d) const {
    const std::size_t m = 2 * n;
    if (static_cast<std::size_t>(a.size()) != m || static_cast<std::size_t>(b.size()) != m ||
        static_cast<std::size_t>(c.size()) != m || static_cast<std::size_t>(d.size()) != m)
        throw DimensionError("ComplexifiedCurvature::contract: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == Complex(0.0)) continue;
        for (std::size_t j = 0; j < m; ++j) {
            const Complex ab = a[i] * b[j];
            if (ab == Complex(0.0)) continue;
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) s += r(i, j, k, l) * ab * c[k] * d[l];
        }
    }
    return s;
}

Tensor4<Complex> ComplexifiedCurvature::block_11() const {
    Tensor4<Complex> out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t d = 0; d < n; ++d) out(a, b, g, d) = r(a, n + b, g, n + d);
    return out;
}

double ComplexifiedCurvature::gray_defect() const {
    double m = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t d = 0; d < n; ++d)
                    m = std::max({m, std::abs(r(a, b, g, d)), std::abs(r(n + a, n + b, n + g, n + d))});
    return m;
}

double ComplexifiedCurvature::conjugation_defect() const {
    const std::size_t m = 2 * n;
    auto bar = [this](std::size_t i) { return i < n ? i + n : i - n; };
    double worst = 0.0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < m; ++d)
                    worst = std::max(worst, std::abs(r(bar(a), bar(b), bar(c), bar(d)) - std::conj(r(a, b, c, d))));
    return worst;
}

double ComplexifiedCurvature::symmetry_defect() const {
    const std::size_t m = 2 * n;
    double worst = 0.0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < m; ++d) {
                    const Complex v = r(a, b, c, d);
                    worst = std::max({worst, std::abs(v + r(b, a, c, d)), std::abs(v + r(a, b, d, c)),
                                      std::abs(v - r(c, d, a, b)),
                                      std::abs(v + r(b, c, a, d) + r(c, a, b, d))});
                }
    return worst;
}

double ComplexifiedCurvature::g_kahler_like_residual() const {
    double m = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t d = 0; d < n; ++d)
                    m = std::max({m, std::abs(r(a, b, g, n + d)), std::abs(r(a, b, n + g, n + d))});
    return m;
}

ChernCurvature chern_curvature(const MetricJet& jet) {
    const std::size_t n = jet.n;
    ChernCurvature c{Tensor4<Complex>(n)};
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t d = 0; d < n; ++d) {
            const CMatrix block = -jet.dzdzb(g, d) + jet.dz(g) * jet.h_inv * jet.dzb(d);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) c.kr(a, b, g, d) = block(a, b);
        }
    }
    return c;
}

RealCurvature real_curvature(const RealMetricJet& rjet, const RealChristoffel& rchris) {
    const std::size_t m = rjet.real_dim();
    if (rchris.brackets.extent() != m) throw DimensionError("real_curvature: jet and Christoffel symbols disagree");
    const auto& br = rchris.brackets;
    // quad(j, l, i, k) = g^{st} [jl, s][ik, t]
    Tensor4<double> quad(m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < m; ++k) {
                    double v = 0.0;
                    for (std::size_t s = 0; s < m; ++s)
                        for (std::size_t t = 0; t < m; ++t) v += rjet.g_inv(s, t) * br(j, l, s) * br(i, k, t);
                    quad(j, l, i, k) = v;
                }

    RealCurvature rc{Tensor4<double>(m)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) {
                    const double second = 0.5 * (rjet.dd(j, l)(i, k) + rjet.dd(i, k)(j, l) - rjet.dd(j, k)(i, l) -
                                                 rjet.dd(i, l)(j, k));
                    rc.r(i, j, k, l) = second + quad(j, l, i, k) - quad(j, k, i, l);
                }
    return rc;
}

ComplexifiedCurvature complexify_curvature(const RealCurvature& rc) {
    const std::size_t m = rc.real_dim();
    const std::size_t n = m / 2;
    // Column A holds the d/dx components of basis vector A.
    CMatrix t = CMatrix::Zero(m, m);
    for (std::size_t a = 0; a < n; ++a) {
        t(a, a) = 0.5;
        t(n + a, a) = -0.5 * kI;
        t(a, n + a) = 0.5;
        t(n + a, n + a) = 0.5 * kI;
    }

    // Four successive single-index contractions.
    std::vector<Complex> cur(rc.r.data().begin(), rc.r.data().end());
    std::vector<Complex> next(cur.size());
    const std::size_t m2 = m * m, m3 = m2 * m;
    for (int pass = 0; pass < 4; ++pass) {
        // Contract the leading index and rotate it to the back.
        for (std::size_t rest = 0; rest < m3; ++rest) {
            for (std::size_t A = 0; A < m; ++A) {
                Complex s = 0.0;
                for (std::size_t i = 0; i < m; ++i) s += t(i, A) * cur[i * m3 + rest];
                next[rest * m + A] = s;
            }
        }
        std::swap(cur, next);
    }

    ComplexifiedCurvature out;
    out.n = n;
    out.r = Tensor4<Complex>(m);
    for (std::size_t k = 0; k < cur.size(); ++k) out.r.data()[k] = 2.0 * cur[k];
    return out;
}

Tensor4<Complex> complexified_11_direct(const MetricJet& jet) {
    const std::size_t n = jet.n;
    const CMatrix& X = jet.h_inv;  // X(l, k) = h^{lbar k}
    Tensor4<Complex> out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t mu = 0; mu < n; ++mu)
                for (std::size_t nu = 0; nu < n; ++nu) {
                    Complex v = -0.5 * (jet.dzdzb(mu, b)(a, nu) + jet.dzdzb(a, nu)(mu, b));
                    Complex sym = 0.0, tor1 = 0.0, tor2 = 0.0;
                    for (std::size_t l = 0; l < n; ++l) {
                        const Complex p = jet.dh(a, l, mu) + jet.dh(mu, l, a);
                        const Complex t1 = jet.dbh(mu, l, b) - jet.dbh(mu, b, l);
                        const Complex t2 = jet.dbh(a, l, nu) - jet.dbh(a, nu, l);
                        for (std::size_t k = 0; k < n; ++k) {
                            const Complex x = X(l, k);
                            sym += p * x * (jet.dbh(k, nu, b) + jet.dbh(k, b, nu));
                            tor1 += t1 * x * (jet.dh(k, nu, a) - jet.dh(a, nu, k));
                            tor2 += t2 * x * (jet.dh(k, b, mu) - jet.dh(mu, b, k));
                        }
                    }
                    v += 0.25 * sym - 0.25 * tor1 - 0.25 * tor2;
                    out(a, b, mu, nu) = v;
                }
    return out;
}

PointCurvatures curvatures_at(const MetricDefinition& metric, const ChartPoint& p) {
    PointCurvatures pc;
    pc.point = p;
    pc.jet = jet_at(metric, p);
    pc.rjet = real_jet_from(pc.jet);
    pc.rchris = real_christoffel(pc.rjet);
    pc.chern = chern_curvature(pc.jet);
    pc.real = real_curvature(pc.rjet, pc.rchris);
    pc.complexified = complexify_curvature(pc.real);
    return pc;
}

}  // namespace hermicurv
