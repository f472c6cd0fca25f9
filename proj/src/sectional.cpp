#include "hermicurv/sectional.hpp"

#include <cmath>

namespace hermicurv {

double Plane::area2(const RMatrix& g) const {
    const double uu = u.comps.dot(g * u.comps);
    const double vv = v.comps.dot(g * v.comps);
    const double uv = u.comps.dot(g * v.comps);
    return uu * vv - uv * uv;
}

void Plane::require_nondegenerate(const RMatrix& g) const {
    if (u.real_dim() != static_cast<std::size_t>(g.rows()) || v.real_dim() != static_cast<std::size_t>(g.rows()))
        throw DimensionError("plane vectors do not match the real dimension");
    const double uu = u.comps.dot(g * u.comps);
    const double vv = v.comps.dot(g * v.comps);
    if (!(area2(g) > 1e-12 * uu * vv) || uu <= 0.0 || vv <= 0.0)
        throw InvalidArgument("degenerate plane: u and v are (nearly) linearly dependent");
}

Plane holomorphic_plane(const RealTangentVector& u) { return Plane{u, apply_J(u)}; }

double riemann_sectional(const RealCurvature& rc, const RealMetricJet& rjet, const Plane& pl) {
    pl.require_nondegenerate(rjet.g);
    return rc.eval(pl.u, pl.v, pl.v, pl.u) / pl.area2(rjet.g);
}

double chern_sectional_numerator(const ChernCurvature& kr, const HoloTangentVector& xi,
                                 const HoloTangentVector& eta) {
    const std::size_t n = kr.dim();
    if (xi.dim() != n || eta.dim() != n) throw DimensionError("chern_sectional_numerator: dimension mismatch");
    const CVector& x = xi.comps;
    const CVector& y = eta.comps;
    CMatrix p(n, n), q(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            p(a, b) = x[a] * std::conj(y[b]) - y[a] * std::conj(x[b]);
            q(a, b) = y[a] * std::conj(x[b]) - x[a] * std::conj(y[b]);
        }
    Complex s = 0.0;
    double mag = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t d = 0; d < n; ++d) {
                    const Complex t = kr.kr(a, b, g, d) * p(a, b) * q(g, d);
                    s += t;
                    mag += std::abs(t);
                }
    s *= 0.5;
    if (std::abs(s.imag()) > 1e-10 * std::max(1.0, mag))
        throw EvaluationError("Chern sectional numerator is not real; curvature lacks Hermitian symmetry");
    return s.real();
}

double chern_sectional(const ChernCurvature& kr, const HermitianMatrixValue& h, const Plane& pl) {
    const RMatrix g = real_metric_from_hermitian(h.entries);
    pl.require_nondegenerate(g);
    const auto xi = to_holomorphic(pl.u);
    const auto eta = to_holomorphic(pl.v);
    const double hxx = hermitian_pairing(h, xi, xi).real();
    const double hyy = hermitian_pairing(h, eta, eta).real();
    const Complex hxy = hermitian_pairing(h, xi, eta);
    const Complex hyx = hermitian_pairing(h, eta, xi);
    const double cross = (hxy + hyx).real();
    const double den = hxx * hyy - 0.25 * cross * cross;
    return chern_sectional_numerator(kr, xi, eta) / den;
}

double holo_sectional(const ChernCurvature& kr, const HermitianMatrixValue& h, const HoloTangentVector& xi) {
    return holo_bisectional(kr, h, xi, xi);
}

double holo_bisectional(const ChernCurvature& kr, const HermitianMatrixValue& h, const HoloTangentVector& xi,
                        const HoloTangentVector& eta) {
    const double nx = hermitian_pairing(h, xi, xi).real();
    const double ny = hermitian_pairing(h, eta, eta).real();
    if (!(nx > 0.0) || !(ny > 0.0)) throw InvalidArgument("holomorphic (bi)sectional curvature of a zero vector");
    const Complex num = kr.contract(xi.comps, xi.comps, eta.comps, eta.comps);
    if (std::abs(num.imag()) > 1e-10 * std::max(1.0, std::abs(num)))
        throw EvaluationError("bisectional numerator is not real; curvature lacks Hermitian symmetry");
    return num.real() / (nx * ny);
}

InducedCurvature induced_curvature(const MetricDefinition& metric, const ChartPoint& p, double step_scale) {
    const std::size_t n = metric.dim();
    const std::size_t m = 2 * n;
    const double s = step_scale * std::max(1.0, p.coords.norm());
    const RVector x0 = p.real_coords();
    const auto conn = induced_real_connection(jet_at(metric, p));
    const auto& C = conn.theta_tilde;

    // dC[a](i, j, k) = d_a C(i, j, k)
    std::vector<Tensor3<double>> dC;
    dC.reserve(m);
    for (std::size_t a = 0; a < m; ++a) {
        RVector xp = x0, xm = x0;
        xp[a] += s;
        xm[a] -= s;
        const auto cp = induced_real_connection(jet_at(metric, ChartPoint::from_real(xp)));
        const auto cm = induced_real_connection(jet_at(metric, ChartPoint::from_real(xm)));
        Tensor3<double> d(m);
        for (std::size_t k = 0; k < d.size(); ++k)
            d.data()[k] = (cp.theta_tilde.data()[k] - cm.theta_tilde.data()[k]) / (2 * s);
        dC.push_back(std::move(d));
    }

    InducedCurvature out{Tensor4<double>(m)};
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t mm = 0; mm < m; ++mm) {
                    double v = dC[a](i, mm, b) - dC[b](i, mm, a);
                    for (std::size_t j = 0; j < m; ++j) v += C(i, j, b) * C(j, mm, a) - C(i, j, a) * C(j, mm, b);
                    out.r(a, b, i, mm) = v;
                }
    return out;
}

double thm11_lhs(const InducedCurvature& rd, const RealMetricJet& rjet, const RealTangentVector& u,
                 const RealTangentVector& v) {
    const std::size_t m = rjet.real_dim();
    if (u.real_dim() != m || v.real_dim() != m || rd.r.extent() != m) throw DimensionError("thm11_lhs: dimension mismatch");
    // w = R^D(v, u) u
    RVector w = RVector::Zero(static_cast<Eigen::Index>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const double vu = v.comps[a] * u.comps[b];
            if (vu == 0.0) continue;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t k = 0; k < m; ++k) w[k] += vu * u.comps[i] * rd.r(a, b, i, k);
        }
    return w.dot(rjet.g * v.comps);
}

IdentityResiduals identity_suite(const PointCurvatures& pc, const RealTangentVector& u, const RealTangentVector& v) {
    const auto& R = pc.real;
    const auto& KR = pc.chern;
    const auto& Rc = pc.complexified;
    const RealTangentVector ju = apply_J(u);
    const RealTangentVector jv = apply_J(v);
    const CVector xi = to_holomorphic(u).comps;
    const CVector eta = to_holomorphic(v).comps;

    IdentityResiduals res;
    res.kahler_bisectional = std::abs(R.eval(ju, u, v, jv) - 2.0 * KR.contract(xi, xi, eta, eta));

    const double ruvvu = R.eval(u, v, v, u);
    const Complex kr_comb = 0.5 * (KR.contract(xi, eta, eta, xi) + KR.contract(eta, xi, xi, eta) -
                                   KR.contract(xi, eta, xi, eta) - KR.contract(eta, xi, eta, xi));
    res.kahler_sectional = std::abs(ruvvu - kr_comb);
    res.kahler_holomorphic = std::abs(R.eval(ju, u, u, ju) - 2.0 * KR.contract(xi, xi, xi, xi));

    const CVector X = holo_part(xi), Xb = anti_part(xi);
    const CVector Y = holo_part(eta), Yb = anti_part(eta);
    const Complex decomposition = 2.0 * (Rc.contract(X, Y, Y, Xb) + Rc.contract(X, Y, Yb, X)).real() +
                                  Rc.contract(X, Yb, Y, Xb) - Rc.contract(X, Y, Xb, Yb) -
                                  0.5 * (Rc.contract(X, Yb, X, Yb) + Rc.contract(Y, Xb, Y, Xb));
    res.decomposition = std::abs(ruvvu - decomposition);
    res.holomorphic_plane = std::abs(R.eval(u, ju, ju, u) - 2.0 * Rc.contract(X, Xb, X, Xb));
    return res;
}

}  // namespace hermicurv
