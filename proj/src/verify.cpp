#include "mollipath/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace mollipath {

namespace {

constexpr double kDiffTol = 1e-9;

MollifiedPath mollify1d(const Fn1D& fn, double eps) {
    ParametricPath p = ParametricPath::entireLine({fn.fn}, fn.kinks);
    return MollifiedPath(ExtendedPath(std::move(p), ExtensionPolicy::Clamp), eps);
}

std::vector<double> gridValues(const MollifiedPath& moll, const Grid& grid) {
    std::vector<double> v(static_cast<std::size_t>(grid.count));
    for (int i = 0; i < grid.count; ++i) {
        const double t = grid.lo + (grid.hi - grid.lo) * i / (grid.count - 1);
        v[static_cast<std::size_t>(i)] = moll.eval(t)[0];
    }
    return v;
}

}  // namespace

CheckReport checkConvexityPreservation(const Fn1D& fn, double eps, const Grid& grid) {
    const std::vector<double> v = gridValues(mollify1d(fn, eps), grid);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 2; i < v.size(); ++i)
        worst = std::min(worst, v[i] - 2.0 * v[i - 1] + v[i - 2]);
    return {"convexity_preservation", worst >= -kDiffTol, worst, grid.count, ""};
}

std::vector<CheckReport> checkLocalConvexityWindow(const Fn1D& fn, const Grid& window,
                                                   const std::vector<double>& epsList) {
    std::vector<CheckReport> reports;
    for (double eps : epsList) {
        CheckReport r = checkConvexityPreservation(fn, eps, window);
        std::ostringstream name;
        name << "local_convexity_eps_" << eps;
        r.name = name.str();
        reports.push_back(std::move(r));
    }
    return reports;
}

CheckReport checkDominance(const Fn1D& fn, double eps, const Grid& grid) {
    const MollifiedPath moll = mollify1d(fn, eps);
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.count; ++i) {
        const double t = grid.lo + (grid.hi - grid.lo) * i / (grid.count - 1);
        worst = std::min(worst, moll.eval(t)[0] - fn.fn(t));
    }
    return {"dominance_convex", worst >= -kDiffTol, worst, grid.count, ""};
}

CheckReport checkMonotonicity(const Fn1D& fn, double eps, const Grid& grid, bool increasing) {
    const std::vector<double> v = gridValues(mollify1d(fn, eps), grid);
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < v.size(); ++i) {
        const double d = increasing ? v[i] - v[i - 1] : v[i - 1] - v[i];
        worst = std::min(worst, d);
    }
    return {increasing ? "monotonicity_increasing" : "monotonicity_decreasing",
            worst >= -kDiffTol, worst, grid.count, ""};
}

CheckReport checkQuasiconvexity(const Fn1D& fn, double eps, const Grid& grid) {
    const std::vector<double> v = gridValues(mollify1d(fn, eps), grid);
    bool ok = true;
    double worst = std::numeric_limits<double>::infinity();
    for (double alpha : v) {
        // sublevel set {i : v_i <= alpha}; must be a contiguous run
        std::size_t first = v.size(), last = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] <= alpha + kDiffTol) {
                first = std::min(first, i);
                last = std::max(last, i);
            }
        }
        for (std::size_t i = first; i <= last && i < v.size(); ++i) {
            const double margin = alpha + kDiffTol - v[i];
            if (margin < 0) {
                ok = false;
                worst = std::min(worst, margin);
            }
        }
    }
    if (ok) worst = 0.0;
    return {"quasiconvexity", ok, worst, grid.count, ""};
}

CheckReport checkHullEnclosure(const ExtendedPath& source, const MollifiedPath& mollified,
                               double lo, double hi, int sampleCount, double slack) {
    std::vector<Vec> cloud(static_cast<std::size_t>(sampleCount));
    for (int i = 0; i < sampleCount; ++i)
        cloud[static_cast<std::size_t>(i)] =
            source.eval(lo + (hi - lo) * i / (sampleCount - 1));
    // same hull, far fewer points per containment query
    if (source.dimension() == 2) cloud = convexHull2D(cloud);
    long violations = 0;
    for (int i = 0; i < sampleCount; ++i) {
        const Vec q = mollified.eval(lo + (hi - lo) * i / (sampleCount - 1));
        if (!convexHullContains(cloud, q, slack)) ++violations;
    }
    return {"hull_enclosure", violations == 0, -static_cast<double>(violations), sampleCount, ""};
}

CheckReport checkLengthNonIncrease(const ExtendedPath& source, const MollifiedPath& mollified,
                                   double lo, double hi, PNorm p, double tol) {
    const double ls = refineLength([&](double t) { return source.eval(t); }, lo, hi, p, tol);
    const double lm = refineLength([&](double t) { return mollified.eval(t); }, lo, hi, p, tol);
    const double margin = ls + tol - lm;
    CheckReport r{"length_non_increase", margin >= 0, margin, 0, ""};
    std::ostringstream note;
    note << "source=" << ls << " mollified=" << lm;
    r.note = note.str();
    return r;
}

CheckReport checkUniformConvergence(const Fn1D& fn, double lipschitzConstant,
                                    const std::vector<double>& epsSequence, const Grid& grid) {
    if (lipschitzConstant < 0)
        return {"uniform_convergence", true, 0.0, 0, "skipped: source not Lipschitz"};
    double worst = std::numeric_limits<double>::infinity();
    double prevErr = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (double eps : epsSequence) {
        const MollifiedPath moll = mollify1d(fn, eps);
        double supErr = 0.0;
        for (int i = 0; i < grid.count; ++i) {
            const double t = grid.lo + (grid.hi - grid.lo) * i / (grid.count - 1);
            supErr = std::max(supErr, std::abs(moll.eval(t)[0] - fn.fn(t)));
        }
        const double margin = lipschitzConstant * eps + 1e-8 - supErr;
        worst = std::min(worst, margin);
        if (margin < 0) ok = false;
        if (supErr > prevErr + kDiffTol) ok = false;  // errors must not grow as eps shrinks
        prevErr = supErr;
    }
    return {"uniform_convergence", ok, worst, grid.count, ""};
}

std::string reportsToJson(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckReport& r : reports) {
        nlohmann::json j;
        j["name"] = r.name;
        j["passed"] = r.passed;
        j["worst_violation"] = r.worstViolation;
        j["samples"] = r.samples;
        if (!r.note.empty()) j["note"] = r.note;
        arr.push_back(j);
    }
    return arr.dump(2);
}

}  // namespace mollipath
