#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hermicurv/core.hpp"
#include "hermicurv/dsl.hpp"

namespace hermicurv {

using dsl::MetricDefinition;

// Second-order jet of h_{a bbar} at a point. Every block is an n x n matrix
// indexed (a, b) for h_{a bbar}; the vectors are indexed by the derivative
// direction(s), flattened row-major for the second-order blocks.
struct MetricJet {
    std::size_t n = 0;
    CMatrix h;
    // h_inv(l, k) = h^{lbar k}, the matrix inverse of h. The contraction
    // d h_{a lbar} h^{lbar k} dbar h_{k bbar} is the product dH * h_inv * dbarH.
    CMatrix h_inv;
    std::vector<CMatrix> d1_holo;   // [g]      d h / dz^g
    std::vector<CMatrix> d1_anti;   // [d]      d h / dzbar^d
    std::vector<CMatrix> d2_mixed;  // [g*n+d]  d^2 h / dz^g dzbar^d
    std::vector<CMatrix> d2_holo;   // [g*n+m]  d^2 h / dz^g dz^m
    std::vector<CMatrix> d2_anti;   // [d*n+m]  d^2 h / dzbar^d dzbar^m

    [[nodiscard]] const CMatrix& dz(std::size_t g) const { return d1_holo.at(g); }
    [[nodiscard]] const CMatrix& dzb(std::size_t d) const { return d1_anti.at(d); }
    [[nodiscard]] const CMatrix& dzdzb(std::size_t g, std::size_t d) const { return d2_mixed.at(g * n + d); }
    [[nodiscard]] const CMatrix& dzdz(std::size_t g, std::size_t m) const { return d2_holo.at(g * n + m); }
    [[nodiscard]] const CMatrix& dzbdzb(std::size_t d, std::size_t m) const { return d2_anti.at(d * n + m); }

    // d h_{a bbar}/dz^g as a scalar (all 0-based).
    [[nodiscard]] Complex dh(std::size_t a, std::size_t b, std::size_t g) const { return d1_holo[g](a, b); }
    [[nodiscard]] Complex dbh(std::size_t a, std::size_t b, std::size_t d) const { return d1_anti[d](a, b); }

    [[nodiscard]] HermitianMatrixValue metric() const { return HermitianMatrixValue(h); }

    // Largest violation of the Hermitian-consistency relations between blocks.
    [[nodiscard]] double consistency_defect() const;
};

// g_{ij} and its first and second x-derivatives, real dimension 2n.
struct RealMetricJet {
    std::size_t n = 0;      // complex dimension
    RMatrix g;
    RMatrix g_inv;
    std::vector<RMatrix> dg;   // [k]       d g / dx^k
    std::vector<RMatrix> d2g;  // [k*2n+l]  d^2 g / dx^k dx^l

    [[nodiscard]] std::size_t real_dim() const { return 2 * n; }
    [[nodiscard]] const RMatrix& d(std::size_t k) const { return dg.at(k); }
    [[nodiscard]] const RMatrix& dd(std::size_t k, std::size_t l) const { return d2g.at(k * 2 * n + l); }

    [[nodiscard]] double inner(const RealTangentVector& u, const RealTangentVector& v) const;
};

inline constexpr std::string_view kCatalogNames[] = {"euclidean", "fubini_study", "poincare_ball", "hopf",
                                                     "nk_diag"};

// Built-in metrics, returned as DSL definitions:
//   euclidean      h = delta
//   fubini_study   delta/(1+|z|^2) - zbar^a z^b/(1+|z|^2)^2
//   poincare_ball  delta/(1-|z|^2) + zbar^a z^b/(1-|z|^2)^2       (|z| < 1)
//   hopf           delta/|z|^2                                   (n >= 2, z != 0)
//   nk_diag        diag(1, exp(z^1 zbar^1), 1, ...)
MetricDefinition catalog_metric(std::string_view name, std::size_t n);

// DSL source text for a catalog metric.
std::string catalog_source(std::string_view name, std::size_t n);

[[nodiscard]] bool is_catalog_name(std::string_view name);

// Symbolic jet. Throws SingularMetricError if h(p) is not positive definite,
// is not Hermitian, or has condition number > 1e12; EvaluationError if an
// expression cannot be evaluated at p.
MetricJet jet_at(const MetricDefinition& metric, const ChartPoint& p);

// Real jet assembled from the complex jet with d/dx^a = d_a + dbar_a and
// d/dx^{n+a} = i(d_a - dbar_a).
RealMetricJet real_jet_from(const MetricJet& jet);
RealMetricJet real_jet_at(const MetricDefinition& metric, const ChartPoint& p);

// Central finite differences of the evaluated entries on real coordinates,
// recombined into Wirtinger form. The step is step_scale * max(1, |z|).
MetricJet fd_oracle_jet(const MetricDefinition& metric, const ChartPoint& p, double step_scale = 1e-5);

// Relative discrepancy between two jets: max abs difference over each block
// family divided by max(1, largest abs entry of the reference family).
struct JetDiscrepancy {
    double value = 0.0;
    double first = 0.0;
    double second = 0.0;
};
JetDiscrepancy compare_jets(const MetricJet& reference, const MetricJet& other);

}  // namespace hermicurv
