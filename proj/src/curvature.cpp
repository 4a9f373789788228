#include "mollipath/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mollipath/geometry.hpp"
#include "mollipath/kernel.hpp"
#include "mollipath/smoothing.hpp"

namespace mollipath {

namespace {

void checkCorner(const CornerData& corner) {
    if (corner.pTilde1.dim() != corner.pTilde2.dim())
        throw std::invalid_argument("CornerData: segment vectors must share a dimension");
    if (corner.pTilde1.norm2() == 0.0 || corner.pTilde2.norm2() == 0.0)
        throw std::invalid_argument("CornerData: segment vectors must be nonzero");
}

// M(P~1, P~2): reciprocal cube of the minimal speed over the convex
// combinations of the segment vectors.
double minSpeedFactor(const Vec& p1, const Vec& p2) {
    const Vec diff = p2 - p1;
    const double denom = diff.dot(diff);
    if (denom == 0.0) return 1.0 / std::pow(p1.norm2(), 3.0);
    const double sbar = diff.dot(p2) / denom;
    if (sbar >= 0.0 && sbar <= 1.0) {
        const double m = (p1 * sbar + p2 * (1.0 - sbar)).norm2();
        return 1.0 / (m * m * m);
    }
    const double n1 = p1.norm2(), n2 = p2.norm2();
    return std::max(1.0 / (n1 * n1 * n1), 1.0 / (n2 * n2 * n2));
}

}  // namespace

std::pair<double, double> cornerWeights(double t, double eps, double knot) {
    if (!(eps > 0)) throw std::invalid_argument("cornerWeights: eps must be positive");
    const double a2 = bumpKernel().cdf(t - knot, eps);
    return {1.0 - a2, a2};
}

double exactCornerCurvature(const CornerData& corner, double eps, double t,
                            double nearestOtherKnot) {
    checkCorner(corner);
    if (!(eps > 0)) throw std::invalid_argument("exactCornerCurvature: eps must be positive");
    if (nearestOtherKnot < eps)
        throw std::invalid_argument("exactCornerCurvature: corner not isolated");
    const double w = bumpKernel().evalScaled(t - corner.knot, eps);
    if (w == 0.0) return 0.0;
    const auto [a1, a2] = cornerWeights(t, eps, corner.knot);
    const double numer = w * wedgeNorm(corner.pTilde2, corner.pTilde1);
    const double speed = (corner.pTilde1 * a1 + corner.pTilde2 * a2).norm2();
    return numer / (speed * speed * speed);
}

double curvatureUpperBound(const CornerData& corner, double eps) {
    checkCorner(corner);
    if (!(eps > 0)) throw std::invalid_argument("curvatureUpperBound: eps must be positive");
    const double wedge = wedgeNorm(corner.pTilde1, corner.pTilde2);
    if (wedge == 0.0) return 0.0;  // collinear: sbar would be 0/0, but the bound is 0
    return bumpKernel().supNorm() * wedge * minSpeedFactor(corner.pTilde1, corner.pTilde2) / eps;
}

double solveEpsilonForBudget(const CornerData& corner, double kappaMax) {
    checkCorner(corner);
    if (!(kappaMax > 0)) throw std::invalid_argument("solveEpsilonForBudget: kappaMax must be positive");
    const double wedge = wedgeNorm(corner.pTilde1, corner.pTilde2);
    if (wedge == 0.0) return 0.0;
    return bumpKernel().supNorm() * wedge * minSpeedFactor(corner.pTilde1, corner.pTilde2) /
           kappaMax;
}

std::vector<CornerData> pathCorners(const WaypointPath& path) {
    std::vector<CornerData> corners;
    const int m = path.segmentCount();
    if (path.closed()) {
        for (int i = 0; i < m; ++i) {
            CornerData c;
            c.pTilde1 = path.segmentVector((i - 1 + m) % m);
            c.pTilde2 = path.segmentVector(i);
            c.knot = static_cast<double>(i);
            corners.push_back(c);
        }
    } else {
        for (int i = 1; i < m; ++i) {
            CornerData c;
            c.pTilde1 = path.segmentVector(i - 1);
            c.pTilde2 = path.segmentVector(i);
            c.knot = static_cast<double>(i);
            corners.push_back(c);
        }
    }
    return corners;
}

EpsilonPlan planEpsilons(const WaypointPath& path, double kappaMax, const PlanOptions& opts) {
    if (path.segmentCount() < 2)
        throw std::invalid_argument("planEpsilons: path needs at least 2 segments");
    if (!(kappaMax > 0)) throw std::invalid_argument("planEpsilons: kappaMax must be positive");

    EpsilonPlan plan;
    plan.budget = kappaMax;
    const std::vector<CornerData> corners = pathCorners(path);
    double maxEps = 0.0;
    for (const CornerData& c : corners) {
        const double eps = solveEpsilonForBudget(c, kappaMax);
        const double bound = eps > 0 ? curvatureUpperBound(c, eps) : 0.0;
        plan.perCorner.push_back({static_cast<int>(std::lround(c.knot)), eps, bound});
        maxEps = std::max(maxEps, eps);
    }
    plan.exact = std::all_of(plan.perCorner.begin(), plan.perCorner.end(),
                             [](const CornerEpsilon& c) { return c.epsilon < 0.5; });
    plan.globalEpsilon = std::max(maxEps, opts.epsMin);

    if (!plan.exact) {
        plan.warning =
            "some per-corner epsilon >= 1/2: the two-segment bound is an approximation";
        if (opts.refine) {
            // The bound is conservative when corner windows overlap: search
            // for the smallest global epsilon whose grid-sampled curvature
            // meets the budget.
            auto maxSampledCurvature = [&](double eps) {
                ExtendedPath ext(path, path.closed() ? ExtensionPolicy::Periodic
                                                     : ExtensionPolicy::Clamp);
                MollifiedPath moll(ext, eps);
                double worst = 0.0;
                for (const CornerData& c : corners) {
                    const int n = std::clamp(
                        static_cast<int>(std::lround(2.0 * eps * opts.gridPerUnit)), 8, 4096);
                    for (int j = 0; j <= n; ++j) {
                        const double t = c.knot - eps + 2.0 * eps * j / n;
                        worst = std::max(worst, moll.curvatureAt(t));
                    }
                }
                return worst;
            };
            double hi = plan.globalEpsilon;
            int iter = 0;
            double prevWorst = std::numeric_limits<double>::infinity();
            for (double worst; (worst = maxSampledCurvature(hi)) > kappaMax; hi *= 2.0) {
                // Past the bound-based epsilon, growing epsilon shrinks the
                // whole path and can only raise curvature further: give up as
                // soon as doubling stops helping.
                if (worst >= prevWorst)
                    throw std::runtime_error(
                        "planEpsilons: curvature budget unreachable by a global epsilon");
                prevWorst = worst;
                if (++iter > opts.maxRefineIter)
                    throw std::runtime_error("planEpsilons: refinement failed to converge");
            }
            double lo = opts.epsMin;
            if (maxSampledCurvature(lo) <= kappaMax) {
                hi = lo;
            } else {
                for (; iter < opts.maxRefineIter && hi - lo > 1e-3 * hi; ++iter) {
                    const double mid = 0.5 * (lo + hi);
                    if (maxSampledCurvature(mid) > kappaMax)
                        lo = mid;
                    else
                        hi = mid;
                }
            }
            plan.globalEpsilon = hi;
            plan.warning += "; refined by bisection against sampled curvature";
        }
    }
    return plan;
}

double speedToCurvatureBudget(double v, double rMin, double rMax, double vMax) {
    if (!(rMin > 0) || !(rMax >= rMin) || !(vMax > 0))
        throw std::invalid_argument("speedToCurvatureBudget: need 0 < rMin <= rMax and vMax > 0");
    if (v < 0 || v > vMax)
        throw std::invalid_argument("speedToCurvatureBudget: v must be in [0, vMax]");
    const double radius = rMin + (v / vMax) * (rMax - rMin);
    return 1.0 / radius;
}

}  // namespace mollipath
