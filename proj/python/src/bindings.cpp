#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermicurv/analysis.hpp"
#include "hermicurv/cli.hpp"

namespace py = pybind11;
using namespace hermicurv;

namespace {

ChartPoint point_from(const CVector& z) { return ChartPoint(z); }

std::vector<ChartPoint> points_from(const std::vector<CVector>& zs) {
    std::vector<ChartPoint> out;
    out.reserve(zs.size());
    for (const auto& z : zs) out.emplace_back(z);
    return out;
}

Plane plane_from(const RVector& u, const RVector& v) { return Plane{RealTangentVector(u), RealTangentVector(v)}; }

template <typename T>
py::array_t<T> to_numpy(const Tensor4<T>& t) {
    const auto n = static_cast<py::ssize_t>(t.extent());
    py::array_t<T> a({n, n, n, n});
    std::copy(t.data().begin(), t.data().end(), a.mutable_data());
    return a;
}

py::dict plane_dict(const Plane& pl) {
    py::dict d;
    d["u"] = pl.u.comps;
    d["v"] = pl.v.comps;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Curvature of Hermitian metrics in local holomorphic coordinates";

    py::register_exception<Error>(m, "HermicurvError", PyExc_ValueError);

    py::enum_<ExtremalMode>(m, "ExtremalMode").value("MAX", ExtremalMode::Max).value("MIN", ExtremalMode::Min);

    py::class_<MetricDefinition>(m, "MetricDefinition")
        .def_property_readonly("dim", &MetricDefinition::dim)
        .def("to_source", &MetricDefinition::to_source)
        .def("__call__", [](const MetricDefinition& md, const CVector& z) { return md.evaluate(point_from(z)); },
             py::arg("point"), "h_{a bbar} as an n x n complex matrix");

    m.def("catalog_names", [] {
        std::vector<std::string> out;
        for (auto s : kCatalogNames) out.emplace_back(s);
        return out;
    });
    m.def("catalog_metric", [](const std::string& name, std::size_t n) { return catalog_metric(name, n); },
          py::arg("name"), py::arg("n"));
    m.def("parse_metric", [](const std::string& src) { return dsl::parse_metric(src); }, py::arg("source"));

    m.def("to_holomorphic", [](const RVector& u) { return to_holomorphic(RealTangentVector(u)).comps; },
          py::arg("u"));
    m.def("to_real", [](const CVector& xi) { return to_real(HoloTangentVector(xi)).comps; }, py::arg("xi"));

    m.def("metric_at", [](const MetricDefinition& md, const CVector& z) { return jet_at(md, point_from(z)).h; },
          py::arg("metric"), py::arg("point"));
    m.def("chern_curvature",
          [](const MetricDefinition& md, const CVector& z) { return to_numpy(chern_curvature(jet_at(md, point_from(z))).kr); },
          py::arg("metric"), py::arg("point"), "KR[a, b, g, d] for the a bbar g dbar component");

    m.def("riemann_sectional",
          [](const MetricDefinition& md, const CVector& z, const RVector& u, const RVector& v) {
              const auto pc = curvatures_at(md, point_from(z));
              return riemann_sectional(pc.real, pc.rjet, plane_from(u, v));
          },
          py::arg("metric"), py::arg("point"), py::arg("u"), py::arg("v"));
    m.def("chern_sectional",
          [](const MetricDefinition& md, const CVector& z, const RVector& u, const RVector& v) {
              const auto jet = jet_at(md, point_from(z));
              return chern_sectional(chern_curvature(jet), jet.metric(), plane_from(u, v));
          },
          py::arg("metric"), py::arg("point"), py::arg("u"), py::arg("v"));
    m.def("holomorphic_sectional",
          [](const MetricDefinition& md, const CVector& z, const CVector& xi) {
              const auto jet = jet_at(md, point_from(z));
              return holo_sectional(chern_curvature(jet), jet.metric(), HoloTangentVector(xi));
          },
          py::arg("metric"), py::arg("point"), py::arg("xi"));
    m.def("holomorphic_bisectional",
          [](const MetricDefinition& md, const CVector& z, const CVector& xi, const CVector& eta) {
              const auto jet = jet_at(md, point_from(z));
              return holo_bisectional(chern_curvature(jet), jet.metric(), HoloTangentVector(xi), HoloTangentVector(eta));
          },
          py::arg("metric"), py::arg("point"), py::arg("xi"), py::arg("eta"));

    m.def("classify",
          [](const MetricDefinition& md, const std::vector<CVector>& zs, double tol) {
              const auto rep = classify(md, points_from(zs), tol);
              py::dict d;
              d["kahler"] = rep.kahler.flag;
              d["kahler_like"] = rep.kahler_like.flag;
              d["g_kahler_like"] = rep.g_kahler_like.flag;
              d["residuals"] = py::dict(py::arg("kahler") = rep.kahler.residual,
                                        py::arg("kahler_like") = rep.kahler_like.residual,
                                        py::arg("g_kahler_like") = rep.g_kahler_like.residual);
              d["tolerance"] = rep.tolerance;
              return d;
          },
          py::arg("metric"), py::arg("points"), py::arg("tol") = 1e-8);

    m.def("lu_check",
          [](const MetricDefinition& md, const CVector& z, std::size_t samples, const std::string& sign,
             std::uint64_t seed) {
              if (sign != "nonneg" && sign != "nonpos") throw InvalidArgument("sign must be 'nonneg' or 'nonpos'");
              const auto kr = chern_curvature(jet_at(md, point_from(z))).kr;
              const auto sym = lu_symmetry_check(kr);
              const auto rep =
                  lu_inequality_check(kr, samples, sign == "nonneg" ? Sign::NonNegative : Sign::NonPositive, seed);
              py::dict d;
              d["symmetry_passed"] = sym.flag;
              d["symmetry_residual"] = sym.residual;
              d["applicable"] = rep.applicable;
              d["hypothesis_violations"] = rep.hypothesis_violations;
              d["conclusion_violations"] = rep.conclusion_violations;
              d["worst_margin"] = rep.worst_margin;
              d["status"] = rep.status;
              return d;
          },
          py::arg("metric"), py::arg("point"), py::arg("samples") = 1000, py::arg("sign") = "nonneg",
          py::arg("seed") = kDefaultSeed);

    m.def("extremal_sectional",
          [](const MetricDefinition& md, const CVector& z, ExtremalMode mode, std::size_t restarts, std::uint64_t seed) {
              ExtremalOptions opts;
              opts.restarts = restarts;
              opts.seed = seed;
              ExtremalResult r;
              {
                  py::gil_scoped_release release;
                  r = extremal_sectional(md, point_from(z), mode, opts);
              }
              py::dict d;
              d["best_value"] = r.best_value;
              d["best_plane"] = plane_dict(r.best_plane);
              d["holo_best_value"] = r.holo_best_value;
              d["holo_best_vector"] = r.holo_best_vector.comps;
              d["gap"] = r.gap;
              d["converged"] = r.converged;
              d["n_restarts"] = r.n_restarts;
              d["sampled_sign"] = to_string(r.sampled_sign);
              d["hypothesis_holds"] = r.hypothesis_holds;
              return d;
          },
          py::arg("metric"), py::arg("point"), py::arg("mode") = ExtremalMode::Max, py::arg("restarts") = 64,
          py::arg("seed") = kDefaultSeed);

    m.def("extremal_bisectional",
          [](const MetricDefinition& md, const CVector& z, ExtremalMode mode, std::size_t restarts, std::uint64_t seed) {
              ExtremalOptions opts;
              opts.restarts = restarts;
              opts.seed = seed;
              BisectionalResult r;
              {
                  py::gil_scoped_release release;
                  r = extremal_bisectional(md, point_from(z), mode, opts);
              }
              py::dict d;
              d["best_value"] = r.best_value;
              d["best_xi"] = r.best_xi.comps;
              d["best_eta"] = r.best_eta.comps;
              d["holo_best_value"] = r.holo_best_value;
              d["gap"] = r.gap;
              d["alignment"] = r.alignment;
              d["converged"] = r.converged;
              d["hypothesis_holds"] = r.hypothesis_holds;
              d["status"] = r.status;
              return d;
          },
          py::arg("metric"), py::arg("point"), py::arg("mode") = ExtremalMode::Max, py::arg("restarts") = 64,
          py::arg("seed") = kDefaultSeed);

    m.def("corollary12_probe",
          [](const MetricDefinition& md, const std::vector<CVector>& zs, std::size_t samples, std::uint64_t seed) {
              const auto r = corollary12_probe(md, points_from(zs), samples, seed);
              py::dict d;
              d["max_abs_difference"] = r.max_abs_difference;
              d["samples"] = r.samples;
              d["witness_point"] = r.witness_point.coords;
              d["witness_plane"] = plane_dict(r.witness_plane);
              d["K"] = r.witness_K;
              d["K_D"] = r.witness_K_D;
              return d;
          },
          py::arg("metric"), py::arg("points"), py::arg("samples") = 1000, py::arg("seed") = kDefaultSeed);

    m.def("_run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str());
    });
}
