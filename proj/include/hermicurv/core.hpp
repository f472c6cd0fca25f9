#pragma once

// Complex linear algebra primitives, the real/holomorphic tangent models, the
// standard complex structure J and the bundle isomorphism u -> u_o.
//
// Coordinates: z^a = x^a + i x^{n+a}. A real tangent vector is stored as the
// 2n components (u^1..u^n, u^{n+1}..u^{2n}) in the d/dx basis.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hermicurv {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

inline constexpr Complex kI{0.0, 1.0};

// Error hierarchy. Everything the library throws derives from Error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

// h(p) is not positive definite, or is too ill-conditioned to invert.
class SingularMetricError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

struct ChartPoint {
    CVector coords;

    ChartPoint() = default;
    explicit ChartPoint(CVector z);
    ChartPoint(std::initializer_list<Complex> z);

    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(coords.size()); }
    // Real coordinates (x^1..x^n, x^{n+1}..x^{2n}).
    [[nodiscard]] RVector real_coords() const;
    static ChartPoint from_real(const RVector& x);
};

struct RealTangentVector {
    RVector comps;

    RealTangentVector() = default;
    explicit RealTangentVector(RVector u) : comps(std::move(u)) {}

    [[nodiscard]] std::size_t real_dim() const { return static_cast<std::size_t>(comps.size()); }
    // Basis vector d/dx^{i+1} in real dimension 2n.
    static RealTangentVector basis(std::size_t n, std::size_t i);
};

struct HoloTangentVector {
    CVector comps;

    HoloTangentVector() = default;
    explicit HoloTangentVector(CVector xi) : comps(std::move(xi)) {}

    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(comps.size()); }
};

// The matrix (h_{a bbar}) at one point. Row index a is holomorphic, column
// index b antiholomorphic.
struct HermitianMatrixValue {
    CMatrix entries;

    HermitianMatrixValue() = default;
    explicit HermitianMatrixValue(CMatrix h) : entries(std::move(h)) {}

    [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
    [[nodiscard]] double hermitian_defect() const;
    [[nodiscard]] double min_eigenvalue() const;
};

// u_o = 1/2 (u - i J u); in components xi^a = u^a + i u^{n+a}, so that
// (d/dx^a)_o = d/dz^a.
HoloTangentVector to_holomorphic(const RealTangentVector& u);

// Inverse of to_holomorphic: the real vector whose (1,0) part is xi.
RealTangentVector to_real(const HoloTangentVector& xi);

// J d/dx^a = d/dx^{n+a}, J d/dx^{n+a} = -d/dx^a.
RealTangentVector apply_J(const RealTangentVector& u);

// h(xi, eta) = h_{a bbar} xi^a conj(eta^b).
Complex hermitian_pairing(const HermitianMatrixValue& h, const HoloTangentVector& xi,
                          const HoloTangentVector& eta);

// Real metric g = Re h as a 2n x 2n block matrix [[Re H, Im H], [-Im H, Re H]].
RMatrix real_metric_from_hermitian(const CMatrix& h);

// Splits a complex matrix M into the real 2n x 2n block [[Re M, Im M], [-Im M, Re M]].
RMatrix real_block(const CMatrix& m);

// Hermitian inverse of h with a condition-number guard. Throws
// SingularMetricError if h is not positive definite or cond(h) > max_condition.
CMatrix checked_hermitian_inverse(const CMatrix& h, double max_condition = 1e12);

// Dense cube tensor: every index ranges over the same extent.
template <typename T, std::size_t Rank>
class CubeTensor {
public:
    CubeTensor() = default;
    explicit CubeTensor(std::size_t extent) : extent_(extent), data_(ipow(extent), T{}) {}

    [[nodiscard]] std::size_t extent() const { return extent_; }
    [[nodiscard]] std::size_t size() const { return data_.size(); }

    template <typename... Idx>
    T& operator()(Idx... idx) {
        static_assert(sizeof...(Idx) == Rank);
        return data_[flat({static_cast<std::size_t>(idx)...})];
    }
    template <typename... Idx>
    const T& operator()(Idx... idx) const {
        static_assert(sizeof...(Idx) == Rank);
        return data_[flat({static_cast<std::size_t>(idx)...})];
    }

    [[nodiscard]] const std::vector<T>& data() const { return data_; }
    std::vector<T>& data() { return data_; }

    [[nodiscard]] double max_abs() const {
        double m = 0.0;
        for (const auto& x : data_) m = std::max(m, static_cast<double>(std::abs(x)));
        return m;
    }

private:
    std::size_t ipow(std::size_t e) const {
        std::size_t r = 1;
        for (std::size_t k = 0; k < Rank; ++k) r *= e;
        return r;
    }
    std::size_t flat(const std::array<std::size_t, Rank>& idx) const {
        std::size_t f = 0;
        for (auto i : idx) f = f * extent_ + i;
        return f;
    }

    std::size_t extent_ = 0;
    std::vector<T> data_;
};

template <typename T>
using Tensor3 = CubeTensor<T, 3>;
template <typename T>
using Tensor4 = CubeTensor<T, 4>;

// Max |a - b| over two equally shaped tensors.
template <typename T, std::size_t Rank>
double max_abs_diff(const CubeTensor<T, Rank>& a, const CubeTensor<T, Rank>& b) {
    if (a.size() != b.size()) throw DimensionError("tensor shape mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        m = std::max(m, static_cast<double>(std::abs(a.data()[k] - b.data()[k])));
    return m;
}

}  // namespace hermicurv
