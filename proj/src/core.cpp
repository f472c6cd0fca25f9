#include "hermicurv/core.hpp"

#include <cmath>
#include <string>

namespace hermicurv {

ChartPoint::ChartPoint(CVector z) : coords(std::move(z)) {
    if (coords.size() < 1) throw DimensionError("chart point needs at least one coordinate");
    for (Eigen::Index k = 0; k < coords.size(); ++k) {
        if (!std::isfinite(coords[k].real()) || !std::isfinite(coords[k].imag()))
            throw InvalidArgument("chart point coordinate " + std::to_string(k + 1) + " is not finite");
    }
}

ChartPoint::ChartPoint(std::initializer_list<Complex> z)
    : ChartPoint(CVector::Map(z.begin(), static_cast<Eigen::Index>(z.size()))) {}

RVector ChartPoint::real_coords() const {
    const auto n = coords.size();
    RVector x(2 * n);
    x.head(n) = coords.real();
    x.tail(n) = coords.imag();
    return x;
}

ChartPoint ChartPoint::from_real(const RVector& x) {
    if (x.size() % 2 != 0) throw DimensionError("real coordinate vector must have even length");
    const auto n = x.size() / 2;
    CVector z(n);
    for (Eigen::Index a = 0; a < n; ++a) z[a] = Complex(x[a], x[n + a]);
    return ChartPoint(std::move(z));
}

RealTangentVector RealTangentVector::basis(std::size_t n, std::size_t i) {
    if (i >= 2 * n) throw DimensionError("basis index out of range");
    RVector u = RVector::Zero(static_cast<Eigen::Index>(2 * n));
    u[static_cast<Eigen::Index>(i)] = 1.0;
    return RealTangentVector(std::move(u));
}

double HermitianMatrixValue::hermitian_defect() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

double HermitianMatrixValue::min_eigenvalue() const {
    const CMatrix sym = 0.5 * (entries + entries.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

HoloTangentVector to_holomorphic(const RealTangentVector& u) {
    const auto m = u.comps.size();
    if (m == 0 || m % 2 != 0) throw DimensionError("real tangent vector must have even, nonzero length");
    const auto n = m / 2;
    CVector xi(n);
    for (Eigen::Index a = 0; a < n; ++a) xi[a] = Complex(u.comps[a], u.comps[n + a]);
    return HoloTangentVector(std::move(xi));
}

RealTangentVector to_real(const HoloTangentVector& xi) {
    const auto n = xi.comps.size();
    RVector u(2 * n);
    u.head(n) = xi.comps.real();
    u.tail(n) = xi.comps.imag();
    return RealTangentVector(std::move(u));
}

RealTangentVector apply_J(const RealTangentVector& u) {
    const auto m = u.comps.size();
    if (m == 0 || m % 2 != 0) throw DimensionError("real tangent vector must have even, nonzero length");
    const auto n = m / 2;
    RVector ju(m);
    ju.head(n) = -u.comps.tail(n);
    ju.tail(n) = u.comps.head(n);
    return RealTangentVector(std::move(ju));
}

Complex hermitian_pairing(const HermitianMatrixValue& h, const HoloTangentVector& xi,
                          const HoloTangentVector& eta) {
    if (h.dim() != xi.dim() || h.dim() != eta.dim())
        throw DimensionError("hermitian_pairing: dimension mismatch");
    // xi^T H conj(eta)
    return xi.comps.transpose() * h.entries * eta.comps.conjugate();
}

RMatrix real_block(const CMatrix& m) {
    const auto n = m.rows();
    RMatrix g(2 * n, 2 * n);
    g.topLeftCorner(n, n) = m.real();
    g.topRightCorner(n, n) = m.imag();
    g.bottomLeftCorner(n, n) = -m.imag();
    g.bottomRightCorner(n, n) = m.real();
    return g;
}

RMatrix real_metric_from_hermitian(const CMatrix& h) { return real_block(h); }

CMatrix checked_hermitian_inverse(const CMatrix& h, double max_condition) {
    const CMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    const double hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0)) throw SingularMetricError("metric is not positive definite at this point");
    if (hi / lo > max_condition) throw SingularMetricError("metric is too ill-conditioned at this point");
    Eigen::FullPivLU<CMatrix> lu(h);
    return lu.inverse();
}

}  // namespace hermicurv
