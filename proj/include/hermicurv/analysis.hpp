#pragma once

// Metric classification and the comparison statements: Lu's inequality for
// curvature-type tensors, extremal sectional / bisectional curvature searches
// over 2-planes, and the K vs K_D probe.

#include <cstdint>
#include <string>
#include <vector>

#include "hermicurv/curvature.hpp"
#include "hermicurv/metric.hpp"
#include "hermicurv/sectional.hpp"

namespace hermicurv {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct ResidualFlag {
    bool flag = false;
    double residual = 0.0;
};

// Per-point residuals, each divided by max(1, magnitude of the tensor involved):
//   kahler        max |d_g h_{a bbar} - d_a h_{g bbar}|
//   kahler_like   max |KR_{a bbar g dbar} - KR_{g bbar a dbar}|
//   g_kahler_like max |R_{a b g dbar}|, |R_{a b gbar dbar}|
struct PointResiduals {
    double kahler = 0.0;
    double kahler_like = 0.0;
    double g_kahler_like = 0.0;
};

PointResiduals point_residuals(const PointCurvatures& pc);

struct ClassificationReport {
    ResidualFlag kahler;
    ResidualFlag kahler_like;
    ResidualFlag g_kahler_like;
    std::vector<ChartPoint> points;
    std::vector<PointResiduals> per_point;
    double tolerance = 0.0;
};

// Residuals are aggregated by max over the points; flag = residual < tol.
ClassificationReport classify(const MetricDefinition& metric, const std::vector<ChartPoint>& points,
                              double tol = 1e-8);

// A_{a bbar m nbar} = A_{m bbar a nbar} = A_{a nbar m bbar} = conj(A_{b abar n mbar}).
// The residual is absolute; passed when residual <= tol * max(1, max |A|).
ResidualFlag lu_symmetry_check(const Tensor4<Complex>& A, double tol = 1e-8);

enum class Sign { NonNegative, NonPositive };

struct LuInequalityReport {
    bool applicable = false;  // symmetry condition and sign hypothesis both hold on the samples
    std::size_t samples = 0;
    std::size_t hypothesis_violations = 0;
    std::size_t conclusion_violations = 0;
    double symmetry_residual = 0.0;
    // min over samples of (A(x,x,x,x) A(y,y,y,y) - |A(x,x,y,y)|^2), normalised.
    double worst_margin = 0.0;
    std::string status;
};

// Samples random (xi, eta), checks the quadratic-form sign hypothesis
// A (xi^a conj(eta^b) - eta^a conj(xi^b)) conj(xi^n conj(eta^m) - eta^n conj(xi^m)) >= 0 (or <= 0),
// then |A(xi,xi,eta,eta)|^2 <= A(xi,xi,xi,xi) A(eta,eta,eta,eta).
LuInequalityReport lu_inequality_check(const Tensor4<Complex>& A, std::size_t samples, Sign sign,
                                       std::uint64_t seed = kDefaultSeed);

enum class ExtremalMode { Max, Min };

// Sign of a curvature quantity over random samples.
enum class SampledSign { NonNegative, NonPositive, Zero, Mixed };

std::string to_string(ExtremalMode m);
std::string to_string(SampledSign s);

struct ExtremalOptions {
    std::size_t restarts = 64;
    std::uint64_t seed = kDefaultSeed;
    std::size_t max_iterations = 200;
    std::size_t hypothesis_samples = 1000;
    double tolerance = 1e-8;
};

struct ExtremalResult {
    ExtremalMode mode = ExtremalMode::Max;
    double best_value = 0.0;
    Plane best_plane;
    double holo_best_value = 0.0;  // extremum of K(y, Jy) over unit y
    RealTangentVector holo_best_vector;
    std::size_t n_restarts = 0;
    // The restarts that produced best_value and holo_best_value both stopped on
    // the gradient or step-size criterion rather than the iteration cap.
    bool converged = false;
    // best - holo for max, holo - best for min; <= 0 (up to tolerance) when the
    // extremum over orthonormal planes is attained on a holomorphic plane.
    double gap = 0.0;
    SampledSign sampled_sign = SampledSign::Mixed;
    double g_kahler_like_residual = 0.0;
    bool hypothesis_holds = false;  // G-Kaehler-like at p and K of the matching sign
};

// Optimises K(u, v) over g-orthonormal pairs and K(y, Jy) over g-unit y.
ExtremalResult extremal_sectional(const MetricDefinition& metric, const ChartPoint& p, ExtremalMode mode,
                                  const ExtremalOptions& opts = {});

struct BisectionalResult {
    ExtremalMode mode = ExtremalMode::Max;
    double best_value = 0.0;
    HoloTangentVector best_xi;
    HoloTangentVector best_eta;
    double holo_best_value = 0.0;  // extremum of H over unit vectors
    HoloTangentVector holo_best_vector;
    std::size_t n_restarts = 0;
    bool converged = false;  // same meaning as in ExtremalResult
    double gap = 0.0;
    // |h(xi, eta)| for the best pair (both unit): 1 iff xi = eta up to phase.
    double alignment = 0.0;
    double kahler_like_residual = 0.0;
    SampledSign chern_sectional_sign = SampledSign::Mixed;
    bool hypothesis_holds = false;  // Kaehler-like at p and K_D of the matching sign
    std::string status;
};

// Optimises B(xi, eta) over h-unit pairs and H(zeta) over h-unit zeta.
BisectionalResult extremal_bisectional(const MetricDefinition& metric, const ChartPoint& p, ExtremalMode mode,
                                       const ExtremalOptions& opts = {});

struct Corollary12Report {
    double max_abs_difference = 0.0;  // max |K - K_D| found
    std::size_t samples = 0;
    ChartPoint witness_point;
    Plane witness_plane;
    double witness_K = 0.0;
    double witness_K_D = 0.0;
};

// Random planes at each point, then local refinement of the best one.
Corollary12Report corollary12_probe(const MetricDefinition& metric, const std::vector<ChartPoint>& points,
                                    std::size_t samples_per_point = 1000, std::uint64_t seed = kDefaultSeed,
                                    bool refine = true);

}  // namespace hermicurv
