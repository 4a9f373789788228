#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mollipath/curvature.hpp"
#include "mollipath/geometry.hpp"
#include "mollipath/kernel.hpp"
#include "mollipath/paths.hpp"
#include "mollipath/smoothing.hpp"
#include "mollipath/waypoint_io.hpp"

namespace py = pybind11;
using namespace mollipath;

namespace {

Vec toVec(const std::vector<double>& coords) {
    if (coords.size() < 1 || coords.size() > 3)
        throw std::invalid_argument("point needs 1 to 3 coordinates");
    Vec v(static_cast<int>(coords.size()));
    for (int i = 0; i < v.dim(); ++i) v[i] = coords[static_cast<std::size_t>(i)];
    return v;
}

std::vector<double> fromVec(const Vec& v) {
    std::vector<double> out(static_cast<std::size_t>(v.dim()));
    for (int i = 0; i < v.dim(); ++i) out[static_cast<std::size_t>(i)] = v[i];
    return out;
}

WaypointPath makePath(const std::vector<std::vector<double>>& points, bool closed) {
    std::vector<Vec> pts;
    pts.reserve(points.size());
    for (const auto& p : points) pts.push_back(toVec(p));
    return WaypointPath(std::move(pts), closed);
}

MollifiedPath makeMollified(const WaypointPath& path, const std::vector<double>& epsilons) {
    ExtendedPath ext(path, path.closed() ? ExtensionPolicy::Periodic : ExtensionPolicy::Clamp);
    std::vector<double> eps = epsilons;
    if (eps.size() == 1 && path.dimension() > 1)
        eps.assign(static_cast<std::size_t>(path.dimension()), eps[0]);
    return MollifiedPath(std::move(ext), std::move(eps));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mollifier-based path smoothing";

    py::class_<WaypointPath>(m, "WaypointPath")
        .def(py::init(&makePath), py::arg("points"), py::arg("closed") = false)
        .def_property_readonly("dimension", &WaypointPath::dimension)
        .def_property_readonly("closed", &WaypointPath::closed)
        .def_property_readonly("segment_count", &WaypointPath::segmentCount)
        .def_property_readonly("domain_length", &WaypointPath::domainLength)
        .def("eval", [](const WaypointPath& p, double t) { return fromVec(p.evalNative(t)); },
             py::arg("t"));

    py::class_<MollifiedPath>(m, "MollifiedPath")
        .def(py::init(&makeMollified), py::arg("path"), py::arg("epsilons"))
        .def("eval", [](const MollifiedPath& p, double t) { return fromVec(p.eval(t)); },
             py::arg("t"))
        .def("derivative",
             [](const MollifiedPath& p, double t, int order) {
                 return fromVec(p.derivative(t, order));
             },
             py::arg("t"), py::arg("order") = 1)
        .def("curvature", &MollifiedPath::curvatureAt, py::arg("t"))
        .def_property_readonly("epsilons",
                               [](const MollifiedPath& p) { return p.epsilons(); });

    m.def("plan_epsilons",
          [](const WaypointPath& path, double kappa_max, double eps_min, bool refine) {
              PlanOptions opts;
              opts.epsMin = eps_min;
              opts.refine = refine;
              const EpsilonPlan plan = planEpsilons(path, kappa_max, opts);
              py::list corners;
              for (const auto& c : plan.perCorner)
                  corners.append(py::make_tuple(c.cornerIndex, c.epsilon, c.bound));
              py::dict out;
              out["per_corner"] = corners;
              out["global_epsilon"] = plan.globalEpsilon;
              out["exact"] = plan.exact;
              out["budget"] = plan.budget;
              out["warning"] = plan.warning;
              return out;
          },
          py::arg("path"), py::arg("kappa_max"), py::arg("eps_min") = 1e-4,
          py::arg("refine") = false);

    m.def("speed_to_curvature_budget", &speedToCurvatureBudget, py::arg("v"), py::arg("r_min"),
          py::arg("r_max"), py::arg("v_max"));

    m.def("kernel_value", [](double x) { return bumpKernel().eval(x); }, py::arg("x"),
          "The normalized bump mollifier phi(x)");
    m.def("kernel_normalization", [] { return bumpKernel().normalization(); });
    m.def("kernel_cdf", [](double x, double eps) { return bumpKernel().cdf(x, eps); },
          py::arg("x"), py::arg("eps"));

    m.def("convex_hull_contains",
          [](const std::vector<std::vector<double>>& cloud, const std::vector<double>& query,
             double slack) {
              std::vector<Vec> pts;
              pts.reserve(cloud.size());
              for (const auto& p : cloud) pts.push_back(toVec(p));
              return convexHullContains(pts, toVec(query), slack);
          },
          py::arg("cloud"), py::arg("query"), py::arg("slack") = 1e-9);

    m.def("read_waypoint_file", &readWaypointFile, py::arg("path"));
}
