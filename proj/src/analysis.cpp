#include "hermicurv/analysis.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace hermicurv {

namespace {

using Objective = std::function<double(const RVector&)>;
using Retraction = std::function<RVector(const RVector&)>;

struct Ascent {
    RVector x;
    double value = 0.0;
    bool converged = false;
};

// Projected gradient ascent with a central-difference gradient. Each
// iteration is one gradient step with a line search that doubles the step
// while the value improves and halves it on non-improvement; the point is
// retracted onto the constraint set after every trial.
Ascent ascend(const Objective& f, const Retraction& retract, const RVector& start, std::size_t max_iterations) {
    Ascent a;
    a.x = retract(start);
    a.value = f(a.x);
    double step = 0.1;
    const double h = 1e-6;
    RVector grad(a.x.size());
    for (std::size_t it = 0; it < max_iterations; ++it) {
        for (Eigen::Index i = 0; i < a.x.size(); ++i) {
            RVector xp = a.x, xm = a.x;
            xp[i] += h;
            xm[i] -= h;
            grad[i] = (f(xp) - f(xm)) / (2 * h);
        }
        // The central-difference noise floor is around 1e-9 relative.
        if (grad.norm() < 1e-7 * std::max(1.0, std::abs(a.value))) {
            a.converged = true;
            break;
        }
        RVector best_x = retract(a.x + step * grad);
        double best_f = f(best_x);
        if (best_f > a.value) {
            for (int k = 0; k < 30; ++k) {
                const RVector x = retract(a.x + 2 * step * grad);
                const double fx = f(x);
                if (!(fx > best_f)) break;
                best_x = x;
                best_f = fx;
                step *= 2;
            }
        } else {
            while (!(best_f > a.value) && step >= 1e-10) {
                step *= 0.5;
                best_x = retract(a.x + step * grad);
                best_f = f(best_x);
            }
            if (step < 1e-10) {
                a.converged = true;
                break;
            }
        }
        a.x = best_x;
        a.value = best_f;
    }
    return a;
}

RVector gaussian(std::mt19937_64& rng, Eigen::Index size) {
    std::normal_distribution<double> nd(0.0, 1.0);
    RVector v(size);
    for (Eigen::Index i = 0; i < size; ++i) v[i] = nd(rng);
    return v;
}

double g_dot(const RMatrix& g, const RVector& a, const RVector& b) { return a.dot(g * b); }

// g-orthonormalise the pair packed as (u, v).
RVector orthonormal_pair(const RMatrix& g, const RVector& x) {
    const Eigen::Index m = g.rows();
    RVector u = x.head(m);
    RVector v = x.tail(m);
    u /= std::sqrt(g_dot(g, u, u));
    v -= g_dot(g, u, v) * u;
    v /= std::sqrt(g_dot(g, v, v));
    RVector out(2 * m);
    out << u, v;
    return out;
}

CVector complex_from(const RVector& x, Eigen::Index offset, Eigen::Index n) {
    CVector z(n);
    for (Eigen::Index a = 0; a < n; ++a) z[a] = Complex(x[offset + a], x[offset + n + a]);
    return z;
}

double h_norm2(const CMatrix& h, const CVector& z) { return (z.transpose() * h * z.conjugate())(0, 0).real(); }

SampledSign classify_sign(double lo, double hi, double scale) {
    const double eps = 1e-10 * std::max(1.0, scale);
    const bool nonneg = lo >= -eps;
    const bool nonpos = hi <= eps;
    if (nonneg && nonpos) return SampledSign::Zero;
    if (nonneg) return SampledSign::NonNegative;
    if (nonpos) return SampledSign::NonPositive;
    return SampledSign::Mixed;
}

bool sign_matches(SampledSign s, ExtremalMode mode) {
    if (s == SampledSign::Zero) return true;
    return mode == ExtremalMode::Max ? s == SampledSign::NonNegative : s == SampledSign::NonPositive;
}

double tensor_scale(const Tensor4<Complex>& t) { return std::max(1.0, t.max_abs()); }

}  // namespace

std::string to_string(ExtremalMode m) { return m == ExtremalMode::Max ? "max" : "min"; }

std::string to_string(SampledSign s) {
    switch (s) {
        case SampledSign::NonNegative: return "nonnegative";
        case SampledSign::NonPositive: return "nonpositive";
        case SampledSign::Zero: return "zero";
        case SampledSign::Mixed: return "mixed";
    }
    return "mixed";
}

// ---------------------------------------------------------------------------
// Classification

PointResiduals point_residuals(const PointCurvatures& pc) {
    const std::size_t n = pc.jet.n;
    PointResiduals r;

    double dscale = 1.0, kd = 0.0;
    for (std::size_t g = 0; g < n; ++g) dscale = std::max(dscale, pc.jet.dz(g).cwiseAbs().maxCoeff());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g) kd = std::max(kd, std::abs(pc.jet.dh(a, b, g) - pc.jet.dh(g, b, a)));
    r.kahler = kd / dscale;

    const auto& kr = pc.chern.kr;
    double kl = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t g = 0; g < n; ++g)
                for (std::size_t d = 0; d < n; ++d) kl = std::max(kl, std::abs(kr(a, b, g, d) - kr(g, b, a, d)));
    r.kahler_like = kl / tensor_scale(kr);

    r.g_kahler_like = pc.complexified.g_kahler_like_residual() / std::max(1.0, pc.complexified.r.max_abs());
    return r;
}

ClassificationReport classify(const MetricDefinition& metric, const std::vector<ChartPoint>& points, double tol) {
    if (points.empty()) throw InvalidArgument("classify needs at least one point");
    ClassificationReport rep;
    rep.points = points;
    rep.tolerance = tol;
    for (const auto& p : points) {
        const auto pr = point_residuals(curvatures_at(metric, p));
        rep.per_point.push_back(pr);
        rep.kahler.residual = std::max(rep.kahler.residual, pr.kahler);
        rep.kahler_like.residual = std::max(rep.kahler_like.residual, pr.kahler_like);
        rep.g_kahler_like.residual = std::max(rep.g_kahler_like.residual, pr.g_kahler_like);
    }
    rep.kahler.flag = rep.kahler.residual < tol;
    rep.kahler_like.flag = rep.kahler_like.residual < tol;
    rep.g_kahler_like.flag = rep.g_kahler_like.residual < tol;
    return rep;
}

// ---------------------------------------------------------------------------
// Lu's inequality

ResidualFlag lu_symmetry_check(const Tensor4<Complex>& A, double tol) {
    const std::size_t n = A.extent();
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t v = 0; v < n; ++v) {
                    const Complex x = A(a, b, m, v);
                    worst = std::max({worst, std::abs(x - A(m, b, a, v)), std::abs(x - A(a, v, m, b)),
                                      std::abs(x - std::conj(A(b, a, v, m)))});
                }
    return {worst <= tol * tensor_scale(A), worst};
}

namespace {

// A (xi^a conj(eta^b) - eta^a conj(xi^b)) conj(xi^n conj(eta^m) - eta^n conj(xi^m))
Complex lu_quadratic_form(const Tensor4<Complex>& A, const CVector& x, const CVector& y) {
    const std::size_t n = A.extent();
    Complex s = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Complex p = x[a] * std::conj(y[b]) - y[a] * std::conj(x[b]);
            if (p == Complex(0.0)) continue;
            for (std::size_t m = 0; m < n; ++m)
                for (std::size_t v = 0; v < n; ++v) {
                    const Complex q = std::conj(x[v] * std::conj(y[m]) - y[v] * std::conj(x[m]));
                    s += A(a, b, m, v) * p * q;
                }
        }
    return s;
}

CVector random_complex(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> nd(0.0, 1.0);
    CVector z(static_cast<Eigen::Index>(n));
    for (std::size_t a = 0; a < n; ++a) z[a] = Complex(nd(rng), nd(rng));
    return z;
}

}  // namespace

LuInequalityReport lu_inequality_check(const Tensor4<Complex>& A, std::size_t samples, Sign sign,
                                       std::uint64_t seed) {
    LuInequalityReport rep;
    rep.samples = samples;
    const auto sym = lu_symmetry_check(A);
    rep.symmetry_residual = sym.residual;
    const double scale = tensor_scale(A);
    std::mt19937_64 rng(seed);
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < samples; ++s) {
        CVector x = random_complex(rng, A.extent());
        CVector y = random_complex(rng, A.extent());
        x /= x.norm();
        y /= y.norm();
        const double q = lu_quadratic_form(A, x, y).real();
        const double eps = 1e-10 * scale;
        if ((sign == Sign::NonNegative && q < -eps) || (sign == Sign::NonPositive && q > eps))
            ++rep.hypothesis_violations;
        const Complex axy = contract_hermitian(A, x, x, y, y);
        const double axx = contract_hermitian(A, x, x, x, x).real();
        const double ayy = contract_hermitian(A, y, y, y, y).real();
        const double margin = (axx * ayy - std::norm(axy)) / (scale * scale);
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (margin < -1e-10) ++rep.conclusion_violations;
    }
    if (samples == 0) rep.worst_margin = 0.0;
    rep.applicable = sym.flag && rep.hypothesis_violations == 0;
    if (!sym.flag) rep.status = "theorem inapplicable: symmetry condition fails";
    else if (rep.hypothesis_violations > 0) rep.status = "theorem inapplicable: sign hypothesis fails";
    else if (rep.conclusion_violations > 0) rep.status = "inequality violated";
    else rep.status = "inequality holds";
    return rep;
}

// ---------------------------------------------------------------------------
// Extremal searches

ExtremalResult extremal_sectional(const MetricDefinition& metric, const ChartPoint& p, ExtremalMode mode,
                                  const ExtremalOptions& opts) {
    if (opts.restarts == 0) throw InvalidArgument("extremal search needs at least one restart");
    const auto pc = curvatures_at(metric, p);
    const RMatrix& g = pc.rjet.g;
    const Eigen::Index m = g.rows();
    const double sgn = mode == ExtremalMode::Max ? 1.0 : -1.0;
    std::mt19937_64 rng(opts.seed);

    auto sectional = [&](const RVector& u, const RVector& v) {
        const double uu = g_dot(g, u, u), vv = g_dot(g, v, v), uv = g_dot(g, u, v);
        const double area = uu * vv - uv * uv;
        if (!(area > 1e-14 * uu * vv)) return -std::numeric_limits<double>::infinity();
        return pc.real.eval(u, v, v, u) / area;
    };
    const Objective pair_objective = [&](const RVector& x) {
        return sgn * sectional(x.head(m), x.tail(m));
    };
    const Retraction pair_retract = [&](const RVector& x) { return orthonormal_pair(g, x); };
    const Objective holo_objective = [&](const RVector& y) {
        return sgn * sectional(y, apply_J(RealTangentVector(y)).comps);
    };
    const Retraction unit = [&](const RVector& y) { return RVector(y / std::sqrt(g_dot(g, y, y))); };

    ExtremalResult res;
    res.mode = mode;
    res.n_restarts = opts.restarts;
    double best = -std::numeric_limits<double>::infinity();
    double holo_best = -std::numeric_limits<double>::infinity();
    bool best_conv = false, holo_conv = false;
    RVector best_x, holo_x;
    for (std::size_t r = 0; r < opts.restarts; ++r) {
        const Ascent a = ascend(pair_objective, pair_retract, gaussian(rng, 2 * m), opts.max_iterations);
        if (a.value > best + 1e-10) {
            best = a.value;
            best_x = a.x;
            best_conv = a.converged;
        }
        const Ascent b = ascend(holo_objective, unit, gaussian(rng, m), opts.max_iterations);
        if (b.value > holo_best + 1e-10) {
            holo_best = b.value;
            holo_x = b.x;
            holo_conv = b.converged;
        }
    }
    res.converged = best_conv && holo_conv;
    res.best_value = sgn * best;
    res.best_plane = Plane{RealTangentVector(best_x.head(m)), RealTangentVector(best_x.tail(m))};
    res.holo_best_value = sgn * holo_best;
    res.holo_best_vector = RealTangentVector(holo_x);
    res.gap = sgn * (res.best_value - res.holo_best_value);

    double lo = std::numeric_limits<double>::infinity(), hi = -lo, mag = 0.0;
    for (std::size_t s = 0; s < opts.hypothesis_samples; ++s) {
        const RVector x = orthonormal_pair(g, gaussian(rng, 2 * m));
        const double k = sectional(x.head(m), x.tail(m));
        lo = std::min(lo, k);
        hi = std::max(hi, k);
        mag = std::max(mag, std::abs(k));
    }
    res.sampled_sign = classify_sign(lo, hi, mag);
    res.g_kahler_like_residual = point_residuals(pc).g_kahler_like;
    res.hypothesis_holds = res.g_kahler_like_residual < opts.tolerance && sign_matches(res.sampled_sign, mode);
    return res;
}

BisectionalResult extremal_bisectional(const MetricDefinition& metric, const ChartPoint& p, ExtremalMode mode,
                                       const ExtremalOptions& opts) {
    if (opts.restarts == 0) throw InvalidArgument("extremal search needs at least one restart");
    const auto pc = curvatures_at(metric, p);
    const CMatrix& h = pc.jet.h;
    const HermitianMatrixValue hv(h);
    const auto n = static_cast<Eigen::Index>(pc.jet.n);
    const double sgn = mode == ExtremalMode::Max ? 1.0 : -1.0;
    std::mt19937_64 rng(opts.seed);

    auto bisectional = [&](const CVector& x, const CVector& y) {
        const double nx = h_norm2(h, x), ny = h_norm2(h, y);
        if (!(nx > 0.0) || !(ny > 0.0)) return -std::numeric_limits<double>::infinity();
        return pc.chern.contract(x, x, y, y).real() / (nx * ny);
    };
    // Packed as (Re xi, Im xi, Re eta, Im eta).
    const Objective pair_objective = [&](const RVector& v) {
        return sgn * bisectional(complex_from(v, 0, n), complex_from(v, 2 * n, n));
    };
    auto normalise = [&](const RVector& v, Eigen::Index offset) {
        const CVector z = complex_from(v, offset, n);
        return RVector(v.segment(offset, 2 * n) / std::sqrt(h_norm2(h, z)));
    };
    const Retraction pair_retract = [&](const RVector& v) {
        RVector out(4 * n);
        out << normalise(v, 0), normalise(v, 2 * n);
        return out;
    };
    const Objective holo_objective = [&](const RVector& v) {
        const CVector z = complex_from(v, 0, n);
        return sgn * bisectional(z, z);
    };
    const Retraction unit = [&](const RVector& v) { return normalise(v, 0); };

    BisectionalResult res;
    res.mode = mode;
    res.n_restarts = opts.restarts;
    double best = -std::numeric_limits<double>::infinity();
    double holo_best = best;
    bool best_conv = false, holo_conv = false;
    RVector best_x, holo_x;
    for (std::size_t r = 0; r < opts.restarts; ++r) {
        const Ascent a = ascend(pair_objective, pair_retract, gaussian(rng, 4 * n), opts.max_iterations);
        if (a.value > best + 1e-10) {
            best = a.value;
            best_x = a.x;
            best_conv = a.converged;
        }
        const Ascent b = ascend(holo_objective, unit, gaussian(rng, 2 * n), opts.max_iterations);
        if (b.value > holo_best + 1e-10) {
            holo_best = b.value;
            holo_x = b.x;
            holo_conv = b.converged;
        }
    }
    res.converged = best_conv && holo_conv;
    res.best_value = sgn * best;
    res.best_xi = HoloTangentVector(complex_from(best_x, 0, n));
    res.best_eta = HoloTangentVector(complex_from(best_x, 2 * n, n));
    res.holo_best_value = sgn * holo_best;
    res.holo_best_vector = HoloTangentVector(complex_from(holo_x, 0, n));
    res.gap = sgn * (res.best_value - res.holo_best_value);
    res.alignment = std::abs(hermitian_pairing(hv, res.best_xi, res.best_eta));

    const Eigen::Index m = 2 * n;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, mag = 0.0;
    for (std::size_t s = 0; s < opts.hypothesis_samples; ++s) {
        const RVector x = orthonormal_pair(pc.rjet.g, gaussian(rng, 2 * m));
        const double num = chern_sectional_numerator(pc.chern, to_holomorphic(RealTangentVector(x.head(m))),
                                                     to_holomorphic(RealTangentVector(x.tail(m))));
        lo = std::min(lo, num);
        hi = std::max(hi, num);
        mag = std::max(mag, std::abs(num));
    }
    res.chern_sectional_sign = classify_sign(lo, hi, mag);
    res.kahler_like_residual = point_residuals(pc).kahler_like;
    const bool kahler_like = res.kahler_like_residual < opts.tolerance;
    res.hypothesis_holds = kahler_like && sign_matches(res.chern_sectional_sign, mode);
    if (!kahler_like) res.status = "theorem inapplicable: metric is not Kaehler-like at this point";
    else if (!res.hypothesis_holds) res.status = "theorem inapplicable: Chern sectional curvature sign hypothesis fails";
    else res.status = "hypotheses hold";
    return res;
}

// ---------------------------------------------------------------------------
// K vs K_D

Corollary12Report corollary12_probe(const MetricDefinition& metric, const std::vector<ChartPoint>& points,
                                    std::size_t samples_per_point, std::uint64_t seed, bool refine) {
    if (points.empty()) throw InvalidArgument("corollary12_probe needs at least one point");
    std::mt19937_64 rng(seed);
    Corollary12Report rep;
    rep.max_abs_difference = -1.0;
    std::size_t best_point = 0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto pc = curvatures_at(metric, points[k]);
        const RMatrix& g = pc.rjet.g;
        const Eigen::Index m = g.rows();
        const HermitianMatrixValue hv = pc.jet.metric();
        auto diff = [&](const RVector& x) {
            const Plane pl{RealTangentVector(x.head(m)), RealTangentVector(x.tail(m))};
            return std::abs(riemann_sectional(pc.real, pc.rjet, pl) - chern_sectional(pc.chern, hv, pl));
        };
        for (std::size_t s = 0; s < samples_per_point; ++s) {
            const RVector x = orthonormal_pair(g, gaussian(rng, 2 * m));
            const double d = diff(x);
            ++rep.samples;
            if (d > rep.max_abs_difference) {
                rep.max_abs_difference = d;
                rep.witness_plane = Plane{RealTangentVector(x.head(m)), RealTangentVector(x.tail(m))};
                best_point = k;
            }
        }
    }
    rep.witness_point = points[best_point];
    const auto pc = curvatures_at(metric, rep.witness_point);
    const RMatrix& g = pc.rjet.g;
    const Eigen::Index m = g.rows();
    const HermitianMatrixValue hv = pc.jet.metric();
    if (refine && rep.samples > 0) {
        const Objective f = [&](const RVector& x) {
            const Plane pl{RealTangentVector(x.head(m)), RealTangentVector(x.tail(m))};
            return std::abs(riemann_sectional(pc.real, pc.rjet, pl) - chern_sectional(pc.chern, hv, pl));
        };
        RVector x0(2 * m);
        x0 << rep.witness_plane.u.comps, rep.witness_plane.v.comps;
        const Ascent a = ascend(f, [&](const RVector& x) { return orthonormal_pair(g, x); }, x0, 200);
        if (a.value > rep.max_abs_difference) {
            rep.max_abs_difference = a.value;
            rep.witness_plane = Plane{RealTangentVector(a.x.head(m)), RealTangentVector(a.x.tail(m))};
        }
    }
    if (rep.samples > 0) {
        rep.witness_K = riemann_sectional(pc.real, pc.rjet, rep.witness_plane);
        rep.witness_K_D = chern_sectional(pc.chern, hv, rep.witness_plane);
    } else {
        rep.max_abs_difference = 0.0;
    }
    return rep;
}

}  // namespace hermicurv
