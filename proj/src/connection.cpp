#include "hermicurv/connection.hpp"

#include <algorithm>
#include <cmath>

namespace hermicurv {

ChernConnectionCoeffs chern_coeffs(const MetricJet& jet) {
    const std::size_t n = jet.n;
    ChernConnectionCoeffs c{Tensor3<Complex>(n)};
    for (std::size_t g = 0; g < n; ++g) {
        // (dH_g * h_inv)(b, a) = sum_l d_g h_{b lbar} h^{lbar a}
        const CMatrix m = jet.dz(g) * jet.h_inv;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) c.gamma(a, b, g) = m(b, a);
    }
    return c;
}

ComplexifiedChristoffel complexified_christoffel(const MetricJet& jet) {
    const std::size_t n = jet.n;
    ComplexifiedChristoffel c{Tensor3<Complex>(n), Tensor3<Complex>(n)};
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t g = 0; g < n; ++g) {
                Complex hh = 0.0;
                Complex hb = 0.0;
                for (std::size_t l = 0; l < n; ++l) {
                    const Complex inv = jet.h_inv(l, a);
                    hh += inv * (jet.dh(b, l, g) + jet.dh(g, l, b));
                    hb += inv * (jet.dbh(g, l, b) - jet.dbh(g, b, l));
                }
                c.gamma_hh(a, b, g) = 0.5 * hh;
                c.gamma_hb(a, b, g) = 0.5 * hb;
            }
        }
    }
    return c;
}

RealChristoffel real_christoffel(const RealMetricJet& rjet) {
    const std::size_t m = rjet.real_dim();
    RealChristoffel c{Tensor3<double>(m), Tensor3<double>(m)};
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t s = 0; s < m; ++s)
                c.brackets(j, k, s) = 0.5 * (rjet.d(k)(j, s) + rjet.d(j)(k, s) - rjet.d(s)(j, k));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < m; ++k) {
                double v = 0.0;
                for (std::size_t s = 0; s < m; ++s) v += rjet.g_inv(k, s) * c.brackets(i, j, s);
                c.gamma(i, j, k) = v;
            }
        }
    }
    return c;
}

InducedRealConnection induced_real_connection(const MetricJet& jet) {
    const std::size_t n = jet.n;
    const auto chern = chern_coeffs(jet);
    InducedRealConnection conn{Tensor3<double>(2 * n)};
    for (std::size_t k = 0; k < 2 * n; ++k) {
        // dz^g(d/dx^k): 1 along x^g, i along x^{n+g}.
        const std::size_t g = k % n;
        const Complex c = k < n ? Complex(1.0) : kI;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                // theta_a^b(d/dx^k); the real form is multiplication by w.
                const Complex w = chern.gamma(b, a, g) * c;
                conn.theta_tilde(a, b, k) = w.real();
                conn.theta_tilde(a, n + b, k) = w.imag();
                conn.theta_tilde(n + a, b, k) = -w.imag();
                conn.theta_tilde(n + a, n + b, k) = w.real();
            }
        }
    }
    return conn;
}

Tensor3<double> chern_torsion(const InducedRealConnection& conn) {
    const std::size_t m = conn.theta_tilde.extent();
    Tensor3<double> t(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) t(i, j, k) = conn.coeff(i, j, k) - conn.coeff(j, i, k);
    return t;
}

double metric_compatibility_defect(const InducedRealConnection& conn, const RealMetricJet& rjet) {
    const std::size_t m = rjet.real_dim();
    double worst = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                double rhs = 0.0;
                for (std::size_t l = 0; l < m; ++l)
                    rhs += conn.coeff(k, i, l) * rjet.g(l, j) + conn.coeff(k, j, l) * rjet.g(i, l);
                worst = std::max(worst, std::abs(rjet.d(k)(i, j) - rhs));
            }
        }
    }
    return worst;
}

double bracket_compatibility_defect(const RealChristoffel& chris, const RealMetricJet& rjet) {
    const std::size_t m = rjet.real_dim();
    double worst = 0.0;
    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                worst = std::max(worst,
                                 std::abs(rjet.d(l)(j, k) - chris.brackets(l, j, k) - chris.brackets(l, k, j)));
    return worst;
}

double connection_difference(const InducedRealConnection& conn, const RealChristoffel& chris) {
    const std::size_t m = conn.theta_tilde.extent();
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                worst = std::max(worst, std::abs(chris.gamma(i, j, k) - conn.coeff(i, j, k)));
    return worst;
}

}  // namespace hermicurv
