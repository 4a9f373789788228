#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mollipath/paths.hpp"
#include "mollipath/vec.hpp"

namespace mollipath {

// Two segment vectors meeting at a corner, with the corner's parameter.
struct CornerData {
    Vec pTilde1;  // incoming segment vector
    Vec pTilde2;  // outgoing segment vector
    double knot = 1.0;
};

struct CornerEpsilon {
    int cornerIndex;
    double epsilon;
    double bound;  // curvature bound value achieved at this epsilon
};

struct EpsilonPlan {
    std::vector<CornerEpsilon> perCorner;
    double globalEpsilon = 0.0;  // max over per-corner epsilons, floored at epsMin
    bool exact = false;          // true iff every per-corner epsilon < 1/2
    double budget = 0.0;         // the kappa_max that produced the plan
    std::string warning;         // non-empty when the bound is only approximate
};

struct PlanOptions {
    double epsMin = 1e-4;       // floor for the global epsilon
    bool refine = false;        // bisection refinement when the plan is not exact
    int gridPerUnit = 64;       // curvature sampling density for refinement
    int maxRefineIter = 60;
};

// Kernel mass on either side of the corner: A1 = mass still on segment 1,
// A2 = mass on segment 2. A1 + A2 = 1.
std::pair<double, double> cornerWeights(double t, double eps, double knot);

// Exact curvature of the mollified two-segment corner,
//   kappa(t) = phi_eps(t-knot) |P~2 ^ P~1| / |P~1 A1(t) + P~2 A2(t)|^3.
// Valid only when no other knot lies within eps of t; pass the distance to the
// nearest other knot to enable the isolation check.
double exactCornerCurvature(const CornerData& corner, double eps, double t,
                            double nearestOtherKnot = std::numeric_limits<double>::infinity());

// t-independent curvature upper bound (1/eps)*supNorm*|P~1 ^ P~2|*M(P~1,P~2).
double curvatureUpperBound(const CornerData& corner, double eps);

// Inverts the bound: smallest eps whose bound equals kappaMax; 0 for collinear
// corners.
double solveEpsilonForBudget(const CornerData& corner, double kappaMax);

// Per-corner epsilon planning for a waypoint path under a curvature budget.
EpsilonPlan planEpsilons(const WaypointPath& path, double kappaMax, const PlanOptions& opts = {});

// kappa_max = 1 / R(v) with R(v) = rMin + (v/vMax)(rMax - rMin).
double speedToCurvatureBudget(double v, double rMin, double rMax, double vMax);

// Corners of a waypoint path (interior knots; all knots when closed).
std::vector<CornerData> pathCorners(const WaypointPath& path);

}  // namespace mollipath
