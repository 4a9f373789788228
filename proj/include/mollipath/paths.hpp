#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "mollipath/vec.hpp"

namespace mollipath {

// Ordered waypoints joined by straight segments. Knot i sits at parameter
// t = i (unit-parameter segments); a closed path gains an implicit closing
// segment and period p+1.
class WaypointPath {
public:
    WaypointPath(std::vector<Vec> points, bool closed);

    int dimension() const { return points_[0].dim(); }
    bool closed() const { return closed_; }
    const std::vector<Vec>& points() const { return points_; }
    int segmentCount() const {
        return closed_ ? static_cast<int>(points_.size())
                       : static_cast<int>(points_.size()) - 1;
    }
    // Native parameter domain is [0, segmentCount()].
    double domainLength() const { return static_cast<double>(segmentCount()); }

    // Segment vector P~_{i+1} for segment i (0-based); wraps for closed paths.
    Vec segmentVector(int i) const;

    // Piecewise-linear evaluation on [0, segmentCount()]; t is clamped.
    Vec evalNative(double t) const;

private:
    std::vector<Vec> points_;
    bool closed_;
};

// Analytic parametric path given by component function handles, either on a
// compact interval [a,b] or on the entire real line. `kinks` lists parameters
// where the components are not smooth (used to split convolution integrals).
class ParametricPath {
public:
    ParametricPath(std::vector<std::function<double(double)>> components, double a, double b,
                   std::vector<double> kinks = {});
    static ParametricPath entireLine(std::vector<std::function<double(double)>> components,
                                     std::vector<double> kinks = {});

    int dimension() const { return static_cast<int>(components_.size()); }
    bool isEntireLine() const { return entire_line_; }
    double a() const { return a_; }
    double b() const { return b_; }
    const std::vector<double>& kinks() const { return kinks_; }

    Vec evalNative(double t) const;

private:
    ParametricPath() = default;
    std::vector<std::function<double(double)>> components_;
    double a_ = 0, b_ = 0;
    bool entire_line_ = false;
    std::vector<double> kinks_;
};

enum class ExtensionPolicy { Clamp, Periodic };

// A path made total on the real line via clamp (hold endpoint values) or
// periodic extension. Immutable; concurrent evaluation is safe.
class ExtendedPath {
public:
    ExtendedPath(WaypointPath source, ExtensionPolicy policy);
    ExtendedPath(ParametricPath source, ExtensionPolicy policy);

    Vec eval(double t) const;
    int dimension() const;
    ExtensionPolicy policy() const { return policy_; }
    bool periodic() const { return policy_ == ExtensionPolicy::Periodic; }
    double period() const;  // only valid when periodic

    // Native domain [start, end]; for entire-line parametric paths returns
    // -inf/+inf.
    double domainStart() const;
    double domainEnd() const;

    // Parameters in [lo, hi] where the extended path is not smooth (knots,
    // kinks, clamp boundaries), used as mandatory quadrature breakpoints.
    std::vector<double> breakpointsWithin(double lo, double hi) const;

    const WaypointPath* waypoints() const { return std::get_if<WaypointPath>(&source_); }
    const ParametricPath* parametric() const { return std::get_if<ParametricPath>(&source_); }

private:
    std::variant<WaypointPath, ParametricPath> source_;
    ExtensionPolicy policy_;
};

// The "heart" closed path (r cos t, r sin t) with
// r(t) = 2 - 2 sin t + sin t sqrt(|cos t|)/(sin t + 1.4), period 2*pi.
ExtendedPath heartPath();

// Monotone 1D stair function: sum of unit steps at abscissae 0..steps-1.
ExtendedPath staircasePath(int steps);

// A fixed open tour of the unit cube's 8 vertices (Gray-code order, every
// segment a unit edge), starting at the origin.
WaypointPath cubePath();

}  // namespace mollipath
