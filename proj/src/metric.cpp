#include "hermicurv/metric.hpp"

#include <algorithm>
#include <cmath>

namespace hermicurv {

double MetricJet::consistency_defect() const {
    double m = 0.0;
    for (std::size_t g = 0; g < n; ++g) {
        m = std::max(m, (d1_anti[g] - d1_holo[g].adjoint()).cwiseAbs().maxCoeff());
        for (std::size_t d = 0; d < n; ++d)
            m = std::max(m, (dzdzb(g, d) - dzdzb(d, g).adjoint()).cwiseAbs().maxCoeff());
    }
    m = std::max(m, (h - h.adjoint()).cwiseAbs().maxCoeff());
    return m;
}

double RealMetricJet::inner(const RealTangentVector& u, const RealTangentVector& v) const {
    if (u.real_dim() != 2 * n || v.real_dim() != 2 * n) throw DimensionError("inner: dimension mismatch");
    return u.comps.dot(g * v.comps);
}

// ---------------------------------------------------------------------------
// Catalog

bool is_catalog_name(std::string_view name) {
    return std::find(std::begin(kCatalogNames), std::end(kCatalogNames), name) != std::end(kCatalogNames);
}

std::string catalog_source(std::string_view name, std::size_t n) {
    if (!is_catalog_name(name)) throw InvalidArgument("unknown catalog metric '" + std::string(name) + "'");
    if (n < 1) throw InvalidArgument("catalog metric dimension must be at least 1");
    if (name == "hopf" && n < 2) throw InvalidArgument("hopf metric requires n >= 2");

    auto s = [](std::size_t k) { return std::to_string(k); };
    std::string r;
    for (std::size_t k = 1; k <= n; ++k) r += (k > 1 ? " + " : "") + ("z" + s(k) + "*zb" + s(k));
    r = "(" + r + ")";

    std::string src = "# " + std::string(name) + ", n = " + s(n) + "\ndim " + s(n) + ";\n";
    auto entry = [&](std::size_t a, std::size_t b, const std::string& e) {
        src += "h[" + s(a) + "," + s(b) + "] = " + e + ";\n";
    };

    if (name == "euclidean") {
        entry(1, 1, "1");
    } else if (name == "fubini_study" || name == "poincare_ball") {
        const bool fs = name == "fubini_study";
        const std::string den = fs ? "(1 + " + r + ")" : "(1 - " + r + ")";
        const std::string sign = fs ? " - " : " + ";
        for (std::size_t a = 1; a <= n; ++a) {
            for (std::size_t b = a; b <= n; ++b) {
                const std::string cross = "zb" + s(a) + "*z" + s(b) + "/" + den + "^2";
                if (a == b) entry(a, b, "1/" + den + sign + cross);
                else entry(a, b, (fs ? "-" : "") + cross);
            }
        }
    } else if (name == "hopf") {
        for (std::size_t a = 1; a <= n; ++a) entry(a, a, "1/" + r);
    } else {  // nk_diag
        if (n >= 2) entry(2, 2, "exp(z1*zb1)");
        else entry(1, 1, "1");
    }
    return src;
}

MetricDefinition catalog_metric(std::string_view name, std::size_t n) {
    return dsl::parse_metric(catalog_source(name, n));
}

// ---------------------------------------------------------------------------
// Jets

namespace {

void finish_jet(MetricJet& jet) {
    const double scale = std::max(1.0, jet.h.cwiseAbs().maxCoeff());
    if ((jet.h - jet.h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw SingularMetricError("metric is not Hermitian at this point");
    jet.h_inv = checked_hermitian_inverse(jet.h);
}

}  // namespace

MetricJet jet_at(const MetricDefinition& metric, const ChartPoint& p) {
    const std::size_t n = metric.dim();
    if (p.dim() != n) throw DimensionError("point dimension does not match metric dimension");
    MetricJet jet;
    jet.n = n;
    jet.h = metric.evaluate(p);
    finish_jet(jet);

    auto eval_block = [&](auto&& expr_of) {
        CMatrix m(n, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) m(a, b) = dsl::evaluate(expr_of(a, b), p);
        return m;
    };

    for (std::size_t g = 0; g < n; ++g) {
        jet.d1_holo.push_back(eval_block([&](auto a, auto b) -> const auto& { return metric.d_holo(a, b, g); }));
        jet.d1_anti.push_back(eval_block([&](auto a, auto b) -> const auto& { return metric.d_anti(a, b, g); }));
    }
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t m = 0; m < n; ++m) {
            jet.d2_mixed.push_back(
                eval_block([&](auto a, auto b) -> const auto& { return metric.d2_mixed(a, b, g, m); }));
            jet.d2_holo.push_back(
                eval_block([&](auto a, auto b) -> const auto& { return metric.d2_holo(a, b, g, m); }));
            jet.d2_anti.push_back(
                eval_block([&](auto a, auto b) -> const auto& { return metric.d2_anti(a, b, g, m); }));
        }
    }
    return jet;
}

RealMetricJet real_jet_from(const MetricJet& jet) {
    const std::size_t n = jet.n;
    const std::size_t m = 2 * n;
    RealMetricJet r;
    r.n = n;
    r.g = real_block(jet.h);
    r.g_inv = r.g.inverse();

    // Real direction k is p_k d_{a_k} + q_k dbar_{a_k}.
    struct Dir {
        std::size_t a;
        Complex p, q;
    };
    std::vector<Dir> dirs(m);
    for (std::size_t a = 0; a < n; ++a) {
        dirs[a] = {a, 1.0, 1.0};
        dirs[n + a] = {a, kI, -kI};
    }

    for (std::size_t k = 0; k < m; ++k) {
        const auto& dk = dirs[k];
        const CMatrix dh = dk.p * jet.dz(dk.a) + dk.q * jet.dzb(dk.a);
        r.dg.push_back(real_block(dh));
    }
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
            const auto& dk = dirs[k];
            const auto& dl = dirs[l];
            const CMatrix ddh = dk.p * dl.p * jet.dzdz(dk.a, dl.a) + dk.p * dl.q * jet.dzdzb(dk.a, dl.a) +
                                dk.q * dl.p * jet.dzdzb(dl.a, dk.a) + dk.q * dl.q * jet.dzbdzb(dk.a, dl.a);
            r.d2g.push_back(real_block(ddh));
        }
    }
    return r;
}

RealMetricJet real_jet_at(const MetricDefinition& metric, const ChartPoint& p) {
    return real_jet_from(jet_at(metric, p));
}

MetricJet fd_oracle_jet(const MetricDefinition& metric, const ChartPoint& p, double step_scale) {
    const std::size_t n = metric.dim();
    if (p.dim() != n) throw DimensionError("point dimension does not match metric dimension");
    const std::size_t m = 2 * n;
    const double s = step_scale * std::max(1.0, p.coords.norm());
    const RVector x0 = p.real_coords();

    auto at = [&](const RVector& x) { return metric.evaluate(ChartPoint::from_real(x)); };
    auto shifted = [&](std::size_t k, double dk, std::size_t l, double dl) {
        RVector x = x0;
        x[k] += dk;
        x[l] += dl;
        return at(x);
    };

    MetricJet jet;
    jet.n = n;
    jet.h = at(x0);
    finish_jet(jet);

    std::vector<CMatrix> first(m);
    for (std::size_t k = 0; k < m; ++k) first[k] = (shifted(k, s, k, 0.0) - shifted(k, -s, k, 0.0)) / (2 * s);

    std::vector<CMatrix> second(m * m);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = k; l < m; ++l) {
            CMatrix v;
            if (k == l) {
                v = (shifted(k, s, k, 0.0) - 2.0 * jet.h + shifted(k, -s, k, 0.0)) / (s * s);
            } else {
                v = (shifted(k, s, l, s) - shifted(k, s, l, -s) - shifted(k, -s, l, s) + shifted(k, -s, l, -s)) /
                    (4 * s * s);
            }
            second[k * m + l] = v;
            second[l * m + k] = v;
        }
    }

    auto S = [&](std::size_t k, std::size_t l) -> const CMatrix& { return second[k * m + l]; };
    for (std::size_t a = 0; a < n; ++a) {
        jet.d1_holo.push_back(0.5 * (first[a] - kI * first[n + a]));
        jet.d1_anti.push_back(0.5 * (first[a] + kI * first[n + a]));
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const CMatrix& xx = S(a, b);
            const CMatrix& xy = S(a, n + b);
            const CMatrix& yx = S(n + a, b);
            const CMatrix& yy = S(n + a, n + b);
            jet.d2_mixed.push_back(0.25 * (xx + kI * xy - kI * yx + yy));
            jet.d2_holo.push_back(0.25 * (xx - kI * xy - kI * yx - yy));
            jet.d2_anti.push_back(0.25 * (xx + kI * xy + kI * yx - yy));
        }
    }
    return jet;
}

JetDiscrepancy compare_jets(const MetricJet& reference, const MetricJet& other) {
    if (reference.n != other.n) throw DimensionError("compare_jets: dimension mismatch");
    auto family = [](const std::vector<const std::vector<CMatrix>*>& ref,
                     const std::vector<const std::vector<CMatrix>*>& oth) {
        double scale = 1.0;
        double diff = 0.0;
        for (std::size_t f = 0; f < ref.size(); ++f) {
            for (std::size_t k = 0; k < ref[f]->size(); ++k) {
                scale = std::max(scale, (*ref[f])[k].cwiseAbs().maxCoeff());
                diff = std::max(diff, ((*ref[f])[k] - (*oth[f])[k]).cwiseAbs().maxCoeff());
            }
        }
        return diff / scale;
    };
    JetDiscrepancy d;
    d.value = (reference.h - other.h).cwiseAbs().maxCoeff() / std::max(1.0, reference.h.cwiseAbs().maxCoeff());
    d.first = family({&reference.d1_holo, &reference.d1_anti}, {&other.d1_holo, &other.d1_anti});
    d.second = family({&reference.d2_mixed, &reference.d2_holo, &reference.d2_anti},
                      {&other.d2_mixed, &other.d2_holo, &other.d2_anti});
    return d;
}

}  // namespace hermicurv
