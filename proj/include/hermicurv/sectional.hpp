#pragma once

// Scalar curvatures: the Riemannian sectional curvature K, the Chern sectional
// curvature K_D of the induced metric connection, and the holomorphic
// (bi)sectional curvatures H and B, plus the identities that relate them.

#include "hermicurv/connection.hpp"
#include "hermicurv/core.hpp"
#include "hermicurv/curvature.hpp"
#include "hermicurv/metric.hpp"

namespace hermicurv {

struct Plane {
    RealTangentVector u;
    RealTangentVector v;

    // g(u,u)g(v,v) - g(u,v)^2
    [[nodiscard]] double area2(const RMatrix& g) const;
    // Throws InvalidArgument unless area2 > 1e-12 g(u,u) g(v,v).
    void require_nondegenerate(const RMatrix& g) const;
};

// Holomorphic plane section Pi(u, Ju).
Plane holomorphic_plane(const RealTangentVector& u);

double riemann_sectional(const RealCurvature& rc, const RealMetricJet& rjet, const Plane& pl);

// 1/2 KR_{a bbar g dbar} (xi^a conj(eta^b) - eta^a conj(xi^b)) (eta^g conj(xi^d) - xi^g conj(eta^d)).
// Real for any Hermitian-symmetric KR; throws EvaluationError if the imaginary
// part exceeds 1e-10 relative to the magnitude of the terms.
double chern_sectional_numerator(const ChernCurvature& kr, const HoloTangentVector& xi,
                                 const HoloTangentVector& eta);

double chern_sectional(const ChernCurvature& kr, const HermitianMatrixValue& h, const Plane& pl);

double holo_sectional(const ChernCurvature& kr, const HermitianMatrixValue& h, const HoloTangentVector& xi);

double holo_bisectional(const ChernCurvature& kr, const HermitianMatrixValue& h, const HoloTangentVector& xi,
                        const HoloTangentVector& eta);

// Curvature of the induced real connection D, with the derivatives of its
// coefficients taken by central differences of induced_real_connection at
// neighbouring points. r(a, b, i, m) is the d/dx^m component of
// R^D(d_a, d_b) d_i.
struct InducedCurvature {
    Tensor4<double> r;
};

InducedCurvature induced_curvature(const MetricDefinition& metric, const ChartPoint& p, double step_scale = 1e-5);

// g((D^2 u)(v, u), v) = g(R^D(v, u) u, v).
double thm11_lhs(const InducedCurvature& rd, const RealMetricJet& rjet, const RealTangentVector& u,
                 const RealTangentVector& v);

// Residuals of the identities relating R, KR and the complexified tensor.
// The Kaehler-only entries are meaningful as identities only for Kaehler
// metrics; for other metrics they measure the departure.
struct IdentityResiduals {
    double kahler_bisectional = 0.0;  // R(Ju,u,v,Jv) - 2 KR(xi,xi,eta,eta)
    double kahler_sectional = 0.0;    // R(u,v,v,u) - 1/2 [KR combination]
    double kahler_holomorphic = 0.0;  // R(Ju,u,u,Ju) - 2 KR(xi,xi,xi,xi)
    double decomposition = 0.0;       // R(u,v,v,u) vs its type decomposition
    double holomorphic_plane = 0.0;   // R(u,Ju,Ju,u) - 2 R(xi,xibar,xi,xibar)
};

IdentityResiduals identity_suite(const PointCurvatures& pc, const RealTangentVector& u, const RealTangentVector& v);

}  // namespace hermicurv
