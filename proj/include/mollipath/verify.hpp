#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mollipath/geometry.hpp"
#include "mollipath/paths.hpp"
#include "mollipath/smoothing.hpp"

namespace mollipath {

// One runnable guarantee check. A property violation is data (passed = false);
// errors are reserved for numerical machinery failures.
struct CheckReport {
    std::string name;
    bool passed = false;
    double worstViolation = 0.0;  // most adverse margin observed; negative means violation
    long samples = 0;
    std::string note;
};

struct Grid {
    double lo;
    double hi;
    int count;  // number of grid points (>= 3 for difference-based checks)
};

// A scalar function together with the parameters where it is not smooth.
struct Fn1D {
    std::function<double(double)> fn;
    std::vector<double> kinks = {};
};

// Second differences of the mollified function are >= -1e-9 on the grid.
CheckReport checkConvexityPreservation(const Fn1D& fn, double eps, const Grid& grid);

// One report per epsilon; large epsilons may legitimately fail (counterexample
// reproduction) -- the failure is recorded, not raised.
std::vector<CheckReport> checkLocalConvexityWindow(const Fn1D& fn, const Grid& window,
                                                   const std::vector<double>& epsList);

// Mollified minus source >= -1e-9 on the grid (convex sources).
CheckReport checkDominance(const Fn1D& fn, double eps, const Grid& grid);

// First differences of the mollified values >= -1e-9 (<= 1e-9 when
// increasing=false).
CheckReport checkMonotonicity(const Fn1D& fn, double eps, const Grid& grid,
                              bool increasing = true);

// Every sampled sublevel set of the mollified values is a contiguous index run.
CheckReport checkQuasiconvexity(const Fn1D& fn, double eps, const Grid& grid);

// Every sampled mollified point lies in the hull of densely sampled source
// points, within slack.
CheckReport checkHullEnclosure(const ExtendedPath& source, const MollifiedPath& mollified,
                               double lo, double hi, int sampleCount, double slack);

// refineLength(mollified) <= refineLength(source) + tol.
CheckReport checkLengthNonIncrease(const ExtendedPath& source, const MollifiedPath& mollified,
                                   double lo, double hi, PNorm p, double tol);

// sup-grid |F_eps - f| <= K*eps + 1e-8 for each eps, and the sup errors are
// nonincreasing along a decreasing eps sequence. Pass lipschitzConstant < 0 to
// mark the source as not Lipschitz; the check is then skipped with a note.
CheckReport checkUniformConvergence(const Fn1D& fn, double lipschitzConstant,
                                    const std::vector<double>& epsSequence, const Grid& grid);

// Serializes reports as JSON text.
std::string reportsToJson(const std::vector<CheckReport>& reports);

}  // namespace mollipath
