#include "hermicurv/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#ifndef HERMICURV_VERSION
#define HERMICURV_VERSION "0.0.0"
#endif

namespace hermicurv::cli {

using nlohmann::json;

namespace {

// Thrown for malformed command-line input that is not a library error.
struct UsageError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// JSON encoding

json encode(Complex c) { return json::array({c.real(), c.imag()}); }

json encode(const CVector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(encode(v[i]));
    return a;
}

json encode(const RVector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

json encode(const CMatrix& m) {
    json a = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(encode(CVector(m.row(r).transpose())));
    return a;
}

template <typename T>
json encode(const Tensor4<T>& t) {
    const std::size_t n = t.extent();
    json a = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json b = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            json c = json::array();
            for (std::size_t k = 0; k < n; ++k) {
                json d = json::array();
                for (std::size_t l = 0; l < n; ++l) {
                    if constexpr (std::is_same_v<T, Complex>) d.push_back(encode(t(i, j, k, l)));
                    else d.push_back(t(i, j, k, l));
                }
                c.push_back(std::move(d));
            }
            b.push_back(std::move(c));
        }
        a.push_back(std::move(b));
    }
    return a;
}

json encode(const Plane& pl) { return {{"u", encode(pl.u.comps)}, {"v", encode(pl.v.comps)}}; }

json encode(const ResidualFlag& f) { return {{"flag", f.flag}, {"residual", f.residual}}; }

bool all_finite(const json& j) {
    if (j.is_number_float()) return std::isfinite(j.get<double>());
    if (j.is_structured())
        for (const auto& e : j)
            if (!all_finite(e)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Input parsing

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(what + " is not valid JSON: " + e.what());
    }
}

double json_real(const json& j, const std::string& what) {
    if (!j.is_number()) throw UsageError(what + " must be a number");
    return j.get<double>();
}

RVector random_vector(std::mt19937_64& rng, std::size_t m) {
    std::normal_distribution<double> nd(0.0, 1.0);
    RVector v(static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) v[static_cast<Eigen::Index>(i)] = nd(rng);
    return v;
}

double g_norm2(const RMatrix& g, const RVector& u) { return u.dot(g * u); }

// ---------------------------------------------------------------------------
// Commands

json request_echo(const RunRequest& r, std::size_t n) {
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(encode(p.coords));
    json e = {{"command", r.command}, {"metric", r.metric}, {"n", n}, {"points", pts}, {"seed", r.seed}};
    if (r.plane) e["plane"] = encode(*r.plane);
    if (r.tol) e["tol"] = *r.tol;
    if (r.command == "extremal") {
        e["restarts"] = r.restarts;
        e["mode"] = r.mode;
        e["kind"] = r.kind;
    }
    if (r.command == "lu") e["sign"] = r.sign;
    if (r.samples != 0) e["samples"] = r.samples;
    return e;
}

int cmd_classify(const RunRequest& r, const MetricDefinition& m, json& out) {
    const auto rep = classify(m, r.points, r.tol.value_or(1e-8));
    out["kahler"] = rep.kahler.flag;
    out["kahler_like"] = rep.kahler_like.flag;
    out["g_kahler_like"] = rep.g_kahler_like.flag;
    out["residuals"] = {{"kahler", rep.kahler.residual},
                        {"kahler_like", rep.kahler_like.residual},
                        {"g_kahler_like", rep.g_kahler_like.residual}};
    out["tolerance"] = rep.tolerance;
    json per = json::array();
    for (std::size_t i = 0; i < rep.per_point.size(); ++i) {
        const auto& p = rep.per_point[i];
        per.push_back({{"point", encode(rep.points[i].coords)},
                       {"kahler", p.kahler},
                       {"kahler_like", p.kahler_like},
                       {"g_kahler_like", p.g_kahler_like}});
    }
    out["per_point"] = per;
    return kExitOk;
}

int cmd_curvature(const RunRequest& r, const MetricDefinition& m, json& out) {
    const double tol = r.tol.value_or(1e-6);
    bool ok = true;
    json per = json::array();
    for (const auto& p : r.points) {
        const auto pc = curvatures_at(m, p);
        const double scale = std::max(1.0, pc.complexified.r.max_abs());
        const double eq38 = max_abs_diff(complexified_11_direct(pc.jet), pc.complexified.block_11());
        const double gray = pc.complexified.gray_defect();
        ok = ok && eq38 <= tol * scale && gray <= tol * scale;
        per.push_back({{"point", encode(p.coords)},
                       {"h", encode(pc.jet.h)},
                       {"chern_curvature", encode(pc.chern.kr)},
                       {"riemann", encode(pc.real.r)},
                       {"residuals",
                        {{"direct_vs_complexified_11", eq38},
                         {"gray", gray},
                         {"chern_hermitian", pc.chern.hermitian_defect()},
                         {"riemann_symmetry", pc.real.symmetry_defect()},
                         {"complexified_conjugation", pc.complexified.conjugation_defect()}}}});
    }
    out["tolerance"] = tol;
    out["passed"] = ok;
    out["per_point"] = per;
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_sectional(const RunRequest& r, const MetricDefinition& m, json& out) {
    if (!r.plane) throw UsageError("sectional needs --plane");
    const double tol = r.tol.value_or(1e-5);
    const Plane& pl = *r.plane;
    bool ok = true;
    json per = json::array();
    for (const auto& p : r.points) {
        const auto pc = curvatures_at(m, p);
        const auto hv = pc.jet.metric();
        const double k = riemann_sectional(pc.real, pc.rjet, pl);
        const double kd = chern_sectional(pc.chern, hv, pl);
        const auto xi = to_holomorphic(pl.u);
        const auto eta = to_holomorphic(pl.v);
        const double lhs = thm11_lhs(induced_curvature(m, p), pc.rjet, pl.u, pl.v);
        const double rhs = chern_sectional_numerator(pc.chern, xi, eta);
        const double resid = std::abs(lhs - rhs);
        const bool pass = resid <= tol * std::max(1.0, std::abs(rhs));
        ok = ok && pass;
        json e = {{"point", encode(p.coords)},
                  {"K", k},
                  {"K_D", kd},
                  {"K_minus_K_D", k - kd},
                  {"induced_curvature_form", {{"lhs", lhs}, {"rhs", rhs}, {"residual", resid}, {"passed", pass}}}};
        if (xi.comps.norm() > 0.0) e["H_u"] = holo_sectional(pc.chern, hv, xi);
        if (xi.comps.norm() > 0.0 && eta.comps.norm() > 0.0) e["B_uv"] = holo_bisectional(pc.chern, hv, xi, eta);
        per.push_back(std::move(e));
    }
    out["tolerance"] = tol;
    out["passed"] = ok;
    out["per_point"] = per;
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_identities(const RunRequest& r, const MetricDefinition& m, json& out) {
    const double tol = r.tol.value_or(1e-6);
    const std::size_t samples = r.samples ? r.samples : 50;
    std::mt19937_64 rng(r.seed);
    bool ok = true;
    json per = json::array();
    for (const auto& p : r.points) {
        const auto pc = curvatures_at(m, p);
        const double scale = std::max(1.0, pc.real.r.max_abs());
        const std::size_t dim = pc.rjet.real_dim();
        IdentityResiduals worst;
        auto take = [&](const RealTangentVector& u, const RealTangentVector& v) {
            const auto res = identity_suite(pc, u, v);
            const double s = scale * g_norm2(pc.rjet.g, u.comps) * g_norm2(pc.rjet.g, v.comps);
            worst.kahler_bisectional = std::max(worst.kahler_bisectional, res.kahler_bisectional / s);
            worst.kahler_sectional = std::max(worst.kahler_sectional, res.kahler_sectional / s);
            worst.kahler_holomorphic = std::max(worst.kahler_holomorphic, res.kahler_holomorphic / s);
            worst.decomposition = std::max(worst.decomposition, res.decomposition / s);
            worst.holomorphic_plane = std::max(worst.holomorphic_plane, res.holomorphic_plane / s);
        };
        if (r.plane) {
            take(r.plane->u, r.plane->v);
        } else {
            for (std::size_t s = 0; s < samples; ++s)
                take(RealTangentVector(random_vector(rng, dim)), RealTangentVector(random_vector(rng, dim)));
        }
        const bool pass = worst.decomposition <= tol && worst.holomorphic_plane <= tol;
        ok = ok && pass;
        per.push_back({{"point", encode(p.coords)},
                       {"kahler_only",
                        {{"bisectional", worst.kahler_bisectional},
                         {"sectional", worst.kahler_sectional},
                         {"holomorphic", worst.kahler_holomorphic}}},
                       {"universal",
                        {{"decomposition", worst.decomposition}, {"holomorphic_plane", worst.holomorphic_plane}}},
                       {"passed", pass}});
    }
    out["samples"] = r.plane ? std::size_t{1} : samples;
    out["tolerance"] = tol;
    out["passed"] = ok;
    out["per_point"] = per;
    return ok ? kExitOk : kExitCheckFailed;
}

ExtremalMode parse_mode(const std::string& s) {
    if (s == "max") return ExtremalMode::Max;
    if (s == "min") return ExtremalMode::Min;
    throw UsageError("--mode must be max or min");
}

int cmd_extremal(const RunRequest& r, const MetricDefinition& m, json& out) {
    const ExtremalMode mode = parse_mode(r.mode);
    if (r.kind != "sectional" && r.kind != "bisectional") throw UsageError("--kind must be sectional or bisectional");
    ExtremalOptions opts;
    opts.restarts = r.restarts;
    opts.seed = r.seed;
    if (r.samples) opts.hypothesis_samples = r.samples;
    const double gap_tol = r.tol.value_or(1e-4);
    bool ok = true;
    json per = json::array();
    for (const auto& p : r.points) {
        json e = {{"point", encode(p.coords)}};
        bool hyp = false;
        double gap = 0.0;
        if (r.kind == "sectional") {
            const auto res = extremal_sectional(m, p, mode, opts);
            hyp = res.hypothesis_holds;
            gap = res.gap;
            e.update({{"best_value", res.best_value},
                      {"best_plane", encode(res.best_plane)},
                      {"holo_best_value", res.holo_best_value},
                      {"holo_best_vector", encode(res.holo_best_vector.comps)},
                      {"gap", res.gap},
                      {"converged", res.converged},
                      {"n_restarts", res.n_restarts},
                      {"sampled_sign", to_string(res.sampled_sign)},
                      {"g_kahler_like_residual", res.g_kahler_like_residual},
                      {"hypothesis_holds", res.hypothesis_holds}});
        } else {
            const auto res = extremal_bisectional(m, p, mode, opts);
            hyp = res.hypothesis_holds;
            gap = res.gap;
            e.update({{"best_value", res.best_value},
                      {"best_xi", encode(res.best_xi.comps)},
                      {"best_eta", encode(res.best_eta.comps)},
                      {"holo_best_value", res.holo_best_value},
                      {"holo_best_vector", encode(res.holo_best_vector.comps)},
                      {"gap", res.gap},
                      {"alignment", res.alignment},
                      {"converged", res.converged},
                      {"n_restarts", res.n_restarts},
                      {"chern_sectional_sign", to_string(res.chern_sectional_sign)},
                      {"kahler_like_residual", res.kahler_like_residual},
                      {"hypothesis_holds", res.hypothesis_holds},
                      {"status", res.status}});
        }
        // The statement is only checked where its hypotheses hold.
        const bool pass = !hyp || gap <= gap_tol;
        e["passed"] = pass;
        ok = ok && pass;
        per.push_back(std::move(e));
    }
    out["gap_tolerance"] = gap_tol;
    out["passed"] = ok;
    out["per_point"] = per;
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_lu(const RunRequest& r, const MetricDefinition& m, json& out) {
    if (r.sign != "nonneg" && r.sign != "nonpos" && r.sign != "auto")
        throw UsageError("--sign must be nonneg, nonpos or auto");
    const std::size_t samples = r.samples ? r.samples : 1000;
    bool ok = true;
    json per = json::array();
    for (const auto& p : r.points) {
        const auto pc = curvatures_at(m, p);
        const auto& A = pc.chern.kr;
        const auto sym = lu_symmetry_check(A, r.tol.value_or(1e-8));
        Sign sign = r.sign == "nonpos" ? Sign::NonPositive : Sign::NonNegative;
        auto rep = lu_inequality_check(A, samples, sign, r.seed);
        if (r.sign == "auto" && rep.hypothesis_violations > 0) {
            auto alt = lu_inequality_check(A, samples, Sign::NonPositive, r.seed);
            if (alt.hypothesis_violations == 0) {
                rep = alt;
                sign = Sign::NonPositive;
            }
        }
        const bool pass = !rep.applicable || rep.conclusion_violations == 0;
        ok = ok && pass;
        per.push_back({{"point", encode(p.coords)},
                       {"symmetry", encode(sym)},
                       {"sign", sign == Sign::NonNegative ? "nonneg" : "nonpos"},
                       {"applicable", rep.applicable},
                       {"hypothesis_violations", rep.hypothesis_violations},
                       {"conclusion_violations", rep.conclusion_violations},
                       {"worst_margin", rep.worst_margin},
                       {"status", rep.status},
                       {"passed", pass}});
    }
    out["samples"] = samples;
    out["passed"] = ok;
    out["per_point"] = per;
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_probe(const RunRequest& r, const MetricDefinition& m, json& out) {
    const std::size_t samples = r.samples ? r.samples : 1000;
    const auto rep = corollary12_probe(m, r.points, samples, r.seed);
    out["max_abs_difference"] = rep.max_abs_difference;
    out["samples"] = rep.samples;
    out["witness"] = {{"point", encode(rep.witness_point.coords)},
                      {"plane", encode(rep.witness_plane)},
                      {"K", rep.witness_K},
                      {"K_D", rep.witness_K_D}};
    return kExitOk;
}

json error_report(const std::string& kind, const std::string& message) {
    return {{"version", HERMICURV_VERSION}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

ChartPoint parse_point(const std::string& text) {
    const json j = parse_json_text(text, "point");
    if (!j.is_array() || j.empty()) throw UsageError("point must be a nonempty array of [re, im] pairs");
    CVector z(static_cast<Eigen::Index>(j.size()));
    for (std::size_t a = 0; a < j.size(); ++a) {
        const json& c = j[a];
        if (!c.is_array() || c.size() != 2) throw UsageError("point coordinates must be [re, im] pairs");
        z[static_cast<Eigen::Index>(a)] = Complex(json_real(c[0], "re"), json_real(c[1], "im"));
    }
    return ChartPoint(z);
}

Plane parse_plane(const std::string& text, std::size_t n) {
    const json j = parse_json_text(text, "plane");
    if (!j.is_object() || !j.contains("u") || !j.contains("v"))
        throw UsageError("plane must be an object {\"u\": [...], \"v\": [...]}");
    auto vec = [&](const json& a, const char* name) {
        if (!a.is_array() || a.size() != 2 * n)
            throw UsageError(std::string("plane vector ") + name + " must have " + std::to_string(2 * n) + " reals");
        RVector v(static_cast<Eigen::Index>(2 * n));
        for (std::size_t i = 0; i < 2 * n; ++i) v[static_cast<Eigen::Index>(i)] = json_real(a[i], name);
        return RealTangentVector(v);
    };
    return Plane{vec(j["u"], "u"), vec(j["v"], "v")};
}

MetricDefinition load_metric(const std::string& source, std::size_t n) {
    if (is_catalog_name(source)) return catalog_metric(source, n);
    std::ifstream in(source);
    if (!in) throw UsageError("cannot read metric file '" + source + "' (and it is not a catalog name)");
    std::stringstream ss;
    ss << in.rdbuf();
    MetricDefinition m = dsl::parse_metric(ss.str());
    if (m.dim() != n)
        throw DimensionError("metric has dimension " + std::to_string(m.dim()) + " but the point has " +
                             std::to_string(n) + " coordinates");
    return m;
}

RunResult run(const RunRequest& request) {
    const auto t0 = std::chrono::steady_clock::now();
    RunResult res;
    try {
        if (std::find(kCommands.begin(), kCommands.end(), request.command) == kCommands.end())
            throw UsageError("unknown command '" + request.command + "'");
        if (request.points.empty()) throw UsageError("at least one --point is required");
        const std::size_t n = request.points.front().dim();
        for (const auto& p : request.points)
            if (p.dim() != n) throw DimensionError("all points must have the same number of coordinates");
        if (request.plane && request.plane->u.real_dim() != 2 * n)
            throw DimensionError("plane vectors must have 2n components");
        const MetricDefinition metric = load_metric(request.metric, n);

        json out;
        const std::string& c = request.command;
        if (c == "classify") res.exit_code = cmd_classify(request, metric, out);
        else if (c == "curvature") res.exit_code = cmd_curvature(request, metric, out);
        else if (c == "sectional") res.exit_code = cmd_sectional(request, metric, out);
        else if (c == "identities") res.exit_code = cmd_identities(request, metric, out);
        else if (c == "extremal") res.exit_code = cmd_extremal(request, metric, out);
        else if (c == "lu") res.exit_code = cmd_lu(request, metric, out);
        else res.exit_code = cmd_probe(request, metric, out);

        if (!all_finite(out)) throw EvaluationError("report contains non-finite values");
        res.report = {{"version", HERMICURV_VERSION}, {"request", request_echo(request, n)}, {"result", out}};
        res.report["elapsed_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } catch (const dsl::ParseError& e) {
        res.exit_code = kExitUsage;
        res.report = error_report("parse_error", e.what());
        res.report["error"]["line"] = e.line();
        res.report["error"]["column"] = e.column();
    } catch (const UsageError& e) {
        res.exit_code = kExitUsage;
        res.report = error_report("usage", e.what());
    } catch (const SingularMetricError& e) {
        res.exit_code = kExitUsage;
        res.report = error_report("inadmissible_point", e.what());
    } catch (const EvaluationError& e) {
        res.exit_code = kExitUsage;
        res.report = error_report("evaluation_error", e.what());
    } catch (const Error& e) {
        res.exit_code = kExitUsage;
        res.report = error_report("invalid_input", e.what());
    }
    return res;
}

json without_timing(json report) {
    report.erase("elapsed_seconds");
    return report;
}

namespace {

bool write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) return false;
        f << text;
        if (!f) return false;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    return !ec;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curvature computations for Hermitian metrics given in local coordinates", "hermicurv"};
    app.set_version_flag("--version", HERMICURV_VERSION);

    RunRequest req;
    std::vector<std::string> points;
    std::string plane;
    std::string json_path;
    double tol = 0.0;
    app.add_option("command", req.command, "classify | curvature | sectional | identities | extremal | lu | probe-corollary")
        ->required();
    app.add_option("--metric", req.metric, "catalog name or path to a metric file")->required();
    app.add_option("--point", points, "point as [[re,im],...]; may be repeated")
        ->required()
        ->allow_extra_args(false);  // keep the JSON text whole
    app.add_option("--plane", plane, R"(plane as {"u": [2n reals], "v": [2n reals]})");
    app.add_option("--seed", req.seed, "random seed");
    app.add_option("--restarts", req.restarts, "optimiser restarts (extremal)")->check(CLI::PositiveNumber);
    app.add_option("--samples", req.samples, "random samples per point");
    auto* tol_opt = app.add_option("--tol", tol, "tolerance override");
    app.add_option("--mode", req.mode, "max | min (extremal)");
    app.add_option("--kind", req.kind, "sectional | bisectional (extremal)");
    app.add_option("--sign", req.sign, "nonneg | nonpos | auto (lu)");
    app.add_option("--json", json_path, "also write the report to this file");

    RunResult res;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*tol_opt) req.tol = tol;
        try {
            for (const auto& p : points) req.points.push_back(parse_point(p));
            if (!plane.empty()) req.plane = parse_plane(plane, req.points.front().dim());
            res = run(req);
        } catch (const UsageError& e) {
            res = {kExitUsage, error_report("usage", e.what())};
        } catch (const Error& e) {
            res = {kExitUsage, error_report("invalid_input", e.what())};
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << HERMICURV_VERSION << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        res = {kExitUsage, error_report("usage", e.what())};
    }

    const std::string text = res.report.dump(2) + "\n";
    out << text;
    if (res.report.contains("error")) err << "error: " << res.report["error"]["message"].get<std::string>() << '\n';
    if (!json_path.empty() && !write_atomically(json_path, text)) {
        err << "error: cannot write report to '" << json_path << "'\n";
        return kExitUsage;
    }
    return res.exit_code;
}

}  // namespace hermicurv::cli
