#pragma once

#include "hermicurv/core.hpp"
#include "hermicurv/metric.hpp"

namespace hermicurv {

// Chern connection coefficients gamma(a, b, g) = Gamma^a_{b;g}
// = h^{lbar a} d h_{b lbar} / dz^g, i.e. D_{d/dz^g} d/dz^b = Gamma^a_{b;g} d/dz^a.
struct ChernConnectionCoeffs {
    Tensor3<Complex> gamma;
};

// Levi-Civita connection extended complex-linearly. gamma_hh(a, b, g) =
// Gamma^a_{bg}, gamma_hb(a, b, g) = Gamma^a_{bbar g}; the remaining blocks are
// their conjugates.
struct ComplexifiedChristoffel {
    Tensor3<Complex> gamma_hh;
    Tensor3<Complex> gamma_hb;
};

// brackets(j, k, s) = [jk, s]; gamma(i, j, k) = Gamma^k_{ij} so that
// nabla_{d_i} d_j = Gamma^k_{ij} d_k.
struct RealChristoffel {
    Tensor3<double> brackets;
    Tensor3<double> gamma;
};

// The metric connection on TM induced by the Chern connection, in the
// d/dx basis: D_{d/dx^k} d/dx^i = theta_tilde(i, j, k) d/dx^j.
struct InducedRealConnection {
    Tensor3<double> theta_tilde;

    // Coefficient of d/dx^k in D_{d/dx^i} d/dx^j.
    [[nodiscard]] double coeff(std::size_t i, std::size_t j, std::size_t k) const { return theta_tilde(j, k, i); }
};

ChernConnectionCoeffs chern_coeffs(const MetricJet& jet);

ComplexifiedChristoffel complexified_christoffel(const MetricJet& jet);

RealChristoffel real_christoffel(const RealMetricJet& rjet);

InducedRealConnection induced_real_connection(const MetricJet& jet);

// T(i, j, k) = T^k_{ij}: the d/dx^k component of D_i d_j - D_j d_i.
Tensor3<double> chern_torsion(const InducedRealConnection& conn);

// max_k |d_k g_{ij} - g(D_k d_i, d_j) - g(d_i, D_k d_j)|.
double metric_compatibility_defect(const InducedRealConnection& conn, const RealMetricJet& rjet);

// max |d_l g_{jk} - [lj,k] - [lk,j]|.
double bracket_compatibility_defect(const RealChristoffel& chris, const RealMetricJet& rjet);

// max |Gamma^k_{ij}(Levi-Civita) - coefficient of D_i d_j along d_k|.
double connection_difference(const InducedRealConnection& conn, const RealChristoffel& chris);

}  // namespace hermicurv
