#pragma once

#include <functional>
#include <span>
#include <vector>

#include "mollipath/vec.hpp"

namespace mollipath {

// |u1 v2 - u2 v1| in 2D; Euclidean norm of the cross product in 3D.
double wedgeNorm(const Vec& u, const Vec& v);

// A curve sampled at strictly increasing parameters.
struct SampledCurve {
    std::vector<double> parameters;
    std::vector<Vec> points;
};

// Sum of consecutive lp distances; for a polyline sampled at all knots this is
// the exact length, otherwise a lower bound converging under refinement.
double polylineLength(const SampledCurve& curve, PNorm p);

// Doubles the sampling density until successive length estimates differ by
// less than tol.
double refineLength(const std::function<Vec(double)>& path, double a, double b, PNorm p,
                    double tol, int maxIter = 24);

// Counterclockwise hull vertices of a 2D cloud (monotone chain). Useful for
// reducing a large cloud before many containment queries.
std::vector<Vec> convexHull2D(std::span<const Vec> cloud);

// True iff query lies within l2 distance slack of co(cloud). 2D uses a
// monotone-chain hull and a signed-distance test; 3D solves the min-norm
// convex-combination problem to tolerance.
bool convexHullContains(std::span<const Vec> cloud, const Vec& query, double slack);

}  // namespace mollipath
