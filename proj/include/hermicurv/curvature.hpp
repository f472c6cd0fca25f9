#pragma once

#include "hermicurv/connection.hpp"
#include "hermicurv/core.hpp"
#include "hermicurv/metric.hpp"

namespace hermicurv {

// Chern curvature kr(a, b, g, d) = KR_{a bbar g dbar}
//   = -d^2 h_{a bbar}/dz^g dzbar^d + d_g h_{a lbar} h^{lbar k} dbar_d h_{k bbar}.
struct ChernCurvature {
    Tensor4<Complex> kr;

    [[nodiscard]] std::size_t dim() const { return kr.extent(); }

    // KR(a, conj b, c, conj d) = KR_{p qbar r sbar} a^p conj(b^q) c^r conj(d^s).
    [[nodiscard]] Complex contract(const CVector& a, const CVector& b, const CVector& c, const CVector& d) const;

    // max |kr(a,b,g,d) - conj(kr(b,a,d,g))|
    [[nodiscard]] double hermitian_defect() const;
};

// r(i, j, k, l) = R_{ijkl} = g(R(d_i, d_j) d_k, d_l) with
// R(X, Y) = [nabla_X, nabla_Y] - nabla_[X,Y]; R(u, v, v, u) > 0 on a round sphere.
struct RealCurvature {
    Tensor4<double> r;

    [[nodiscard]] std::size_t real_dim() const { return r.extent(); }
    [[nodiscard]] double eval(const RVector& x, const RVector& y, const RVector& z, const RVector& w) const;
    [[nodiscard]] double eval(const RealTangentVector& x, const RealTangentVector& y, const RealTangentVector& z,
                              const RealTangentVector& w) const {
        return eval(x.comps, y.comps, z.comps, w.comps);
    }
    // Largest violation of the algebraic symmetries and the first Bianchi
    // identity, relative to max(1, max |R|).
    [[nodiscard]] double symmetry_defect() const;
};

// Complex-linear extension of R in the basis (d/dz^1..d/dz^n, d/dzbar^1..d/dzbar^n),
// normalised as R_{ABCD} = 2 g([nabla_A, nabla_B] d_C, d_D) so that it agrees
// with KR for Kaehler metrics. Index A < n is holomorphic, A >= n is A-n barred.
struct ComplexifiedCurvature {
    std::size_t n = 0;
    Tensor4<Complex> r;

    // Multilinear evaluation on vectors given in the (dz, dzbar) basis.
    [[nodiscard]] Complex contract(const CVector& a, const CVector& b, const CVector& c, const CVector& d) const;

    // R_{a bbar g dbar} block as an n^4 tensor.
    [[nodiscard]] Tensor4<Complex> block_11() const;

    // max |R_{abgd}| and max |R_{abar bbar gbar dbar}|.
    [[nodiscard]] double gray_defect() const;
    // max |R_{ABCD bar-swapped} - conj(R_{ABCD})|.
    [[nodiscard]] double conjugation_defect() const;
    // Skew in (A,B) and (C,D), pair symmetry and first Bianchi, absolute.
    [[nodiscard]] double symmetry_defect() const;
    // max over |R_{a b g dbar}| and |R_{a b gbar dbar}|: zero iff G-Kaehler-like.
    [[nodiscard]] double g_kahler_like_residual() const;
};

// A_{p qbar r sbar} a^p conj(b^q) c^r conj(d^s) for any n^4 tensor A.
Complex contract_hermitian(const Tensor4<Complex>& A, const CVector& a, const CVector& b, const CVector& c,
                           const CVector& d);

// Curvature data at one point, computed once and shared by the scalar
// curvature routines.
struct PointCurvatures {
    ChartPoint point;
    MetricJet jet;
    RealMetricJet rjet;
    RealChristoffel rchris;
    ChernCurvature chern;
    RealCurvature real;
    ComplexifiedCurvature complexified;
};

// (xi, 0) and (0, conj xi) in the (dz, dzbar) basis.
CVector holo_part(const CVector& xi);
CVector anti_part(const CVector& xi);

ChernCurvature chern_curvature(const MetricJet& jet);

RealCurvature real_curvature(const RealMetricJet& rjet, const RealChristoffel& rchris);

ComplexifiedCurvature complexify_curvature(const RealCurvature& rc);

// R_{a bbar m nbar} straight from the metric jet, without passing through the
// real tensor.
Tensor4<Complex> complexified_11_direct(const MetricJet& jet);

PointCurvatures curvatures_at(const MetricDefinition& metric, const ChartPoint& p);

}  // namespace hermicurv
