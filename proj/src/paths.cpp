#include "mollipath/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mollipath {

WaypointPath::WaypointPath(std::vector<Vec> points, bool closed)
    : points_(std::move(points)), closed_(closed) {
    if (points_.size() < 2) throw std::invalid_argument("WaypointPath: need at least 2 points");
    const int dim = points_[0].dim();
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("WaypointPath: dimension must be 2 or 3");
    for (std::size_t i = 1; i < points_.size(); ++i) {
        if (points_[i].dim() != dim)
            throw std::invalid_argument("WaypointPath: inconsistent dimensions");
        if ((points_[i] - points_[i - 1]).norm2() == 0.0)
            throw std::invalid_argument("WaypointPath: consecutive points must be distinct");
    }
    if (closed_ && (points_.front() - points_.back()).norm2() == 0.0)
        throw std::invalid_argument("WaypointPath: closed path must not repeat the first point");
}

Vec WaypointPath::segmentVector(int i) const {
    const int m = segmentCount();
    if (i < 0 || i >= m) throw std::out_of_range("segmentVector: index out of range");
    const std::size_t n = points_.size();
    const std::size_t a = static_cast<std::size_t>(i);
    const std::size_t b = (a + 1) % n;
    return points_[b] - points_[a];
}

Vec WaypointPath::evalNative(double t) const {
    const int m = segmentCount();
    t = std::clamp(t, 0.0, static_cast<double>(m));
    int i = static_cast<int>(std::floor(t));
    if (i >= m) i = m - 1;
    const double local = t - i;
    const std::size_t n = points_.size();
    const Vec& p = points_[static_cast<std::size_t>(i)];
    const Vec& q = points_[(static_cast<std::size_t>(i) + 1) % n];
    return p + (q - p) * local;
}

ParametricPath::ParametricPath(std::vector<std::function<double(double)>> components, double a,
                               double b, std::vector<double> kinks)
    : components_(std::move(components)), a_(a), b_(b), kinks_(std::move(kinks)) {
    if (components_.empty() || components_.size() > 3)
        throw std::invalid_argument("ParametricPath: need 1..3 components");
    if (!(a_ < b_)) throw std::invalid_argument("ParametricPath: need a < b");
    std::sort(kinks_.begin(), kinks_.end());
}

ParametricPath ParametricPath::entireLine(std::vector<std::function<double(double)>> components,
                                          std::vector<double> kinks) {
    ParametricPath p;
    p.components_ = std::move(components);
    p.kinks_ = std::move(kinks);
    p.entire_line_ = true;
    if (p.components_.empty() || p.components_.size() > 3)
        throw std::invalid_argument("ParametricPath: need 1..3 components");
    std::sort(p.kinks_.begin(), p.kinks_.end());
    return p;
}

Vec ParametricPath::evalNative(double t) const {
    Vec v(dimension());
    for (int i = 0; i < dimension(); ++i) v[i] = components_[static_cast<std::size_t>(i)](t);
    return v;
}

ExtendedPath::ExtendedPath(WaypointPath source, ExtensionPolicy policy)
    : source_(std::move(source)), policy_(policy) {
    const auto& wp = std::get<WaypointPath>(source_);
    if (policy_ == ExtensionPolicy::Periodic && !wp.closed())
        throw std::invalid_argument("ExtendedPath: periodic extension requires a closed path");
}

ExtendedPath::ExtendedPath(ParametricPath source, ExtensionPolicy policy)
    : source_(std::move(source)), policy_(policy) {
    const auto& pp = std::get<ParametricPath>(source_);
    if (policy_ == ExtensionPolicy::Periodic) {
        if (pp.isEntireLine())
            throw std::invalid_argument("ExtendedPath: periodic extension needs a compact domain");
        const Vec va = pp.evalNative(pp.a());
        const Vec vb = pp.evalNative(pp.b());
        if ((va - vb).norm2() > 1e-9)
            throw std::invalid_argument("ExtendedPath: periodic extension requires f(a) = f(b)");
    }
}

int ExtendedPath::dimension() const {
    if (const auto* wp = waypoints()) return wp->dimension();
    return parametric()->dimension();
}

double ExtendedPath::period() const {
    if (!periodic()) throw std::logic_error("period: path is not periodic");
    if (const auto* wp = waypoints()) return wp->domainLength();
    return parametric()->b() - parametric()->a();
}

double ExtendedPath::domainStart() const {
    if (const auto* wp = waypoints()) {
        (void)wp;
        return 0.0;
    }
    const auto* pp = parametric();
    return pp->isEntireLine() ? -std::numeric_limits<double>::infinity() : pp->a();
}

double ExtendedPath::domainEnd() const {
    if (const auto* wp = waypoints()) return wp->domainLength();
    const auto* pp = parametric();
    return pp->isEntireLine() ? std::numeric_limits<double>::infinity() : pp->b();
}

Vec ExtendedPath::eval(double t) const {
    if (const auto* wp = waypoints()) {
        if (periodic()) {
            const double T = wp->domainLength();
            t = std::fmod(t, T);
            if (t < 0) t += T;
        }
        return wp->evalNative(t);  // evalNative clamps
    }
    const auto* pp = parametric();
    if (pp->isEntireLine()) return pp->evalNative(t);
    if (periodic()) {
        const double T = pp->b() - pp->a();
        double u = std::fmod(t - pp->a(), T);
        if (u < 0) u += T;
        return pp->evalNative(pp->a() + u);
    }
    return pp->evalNative(std::clamp(t, pp->a(), pp->b()));
}

std::vector<double> ExtendedPath::breakpointsWithin(double lo, double hi) const {
    std::vector<double> out;
    if (!(lo <= hi)) return out;

    auto addPeriodicImages = [&](double k, double T, double origin) {
        // all origin + k + m*T inside [lo, hi]
        const double base = origin + k;
        const double mlo = std::ceil((lo - base) / T - 1e-12);
        const double mhi = std::floor((hi - base) / T + 1e-12);
        for (double m = mlo; m <= mhi; m += 1.0) out.push_back(base + m * T);
    };

    if (const auto* wp = waypoints()) {
        const double T = wp->domainLength();
        if (periodic()) {
            // every integer knot, repeated with period T
            for (int k = 0; k < wp->segmentCount(); ++k) addPeriodicImages(k, T, 0.0);
        } else {
            for (int k = 0; k <= wp->segmentCount(); ++k) {
                const double x = static_cast<double>(k);
                if (x >= lo && x <= hi) out.push_back(x);
            }
        }
    } else {
        const auto* pp = parametric();
        if (pp->isEntireLine()) {
            for (double k : pp->kinks())
                if (k >= lo && k <= hi) out.push_back(k);
        } else if (periodic()) {
            const double T = pp->b() - pp->a();
            for (double k : pp->kinks()) addPeriodicImages(k - pp->a(), T, pp->a());
            addPeriodicImages(0.0, T, pp->a());  // seam (smoothness there is not assumed)
        } else {
            for (double k : pp->kinks())
                if (k >= lo && k <= hi) out.push_back(k);
            if (pp->a() >= lo && pp->a() <= hi) out.push_back(pp->a());
            if (pp->b() >= lo && pp->b() <= hi) out.push_back(pp->b());
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ExtendedPath heartPath() {
    auto radius = [](double t) {
        const double s = std::sin(t);
        return 2.0 - 2.0 * s + s * std::sqrt(std::abs(std::cos(t))) / (s + 1.4);
    };
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<std::function<double(double)>> comps = {
        [radius](double t) { return radius(t) * std::cos(t); },
        [radius](double t) { return radius(t) * std::sin(t); },
    };
    // sqrt(|cos t|) is non-smooth where cos t = 0
    std::vector<double> kinks = {std::numbers::pi / 2.0, 3.0 * std::numbers::pi / 2.0};
    return ExtendedPath(ParametricPath(std::move(comps), 0.0, two_pi, std::move(kinks)),
                        ExtensionPolicy::Periodic);
}

ExtendedPath staircasePath(int steps) {
    if (steps < 1) throw std::invalid_argument("staircasePath: steps must be >= 1");
    auto stair = [steps](double t) {
        double v = 0.0;
        for (int i = 0; i < steps; ++i)
            if (t > static_cast<double>(i)) v += 1.0;
        return v;
    };
    std::vector<double> kinks;
    for (int i = 0; i < steps; ++i) kinks.push_back(static_cast<double>(i));
    return ExtendedPath(ParametricPath::entireLine({stair}, std::move(kinks)),
                        ExtensionPolicy::Clamp);
}

WaypointPath cubePath() {
    // Gray-code tour: consecutive vertices differ in one coordinate, so all
    // seven segments are unit edges.
    std::vector<Vec> pts = {
        Vec(0, 0, 0), Vec(1, 0, 0), Vec(1, 1, 0), Vec(0, 1, 0),
        Vec(0, 1, 1), Vec(1, 1, 1), Vec(1, 0, 1), Vec(0, 0, 1),
    };
    return WaypointPath(std::move(pts), false);
}

}  // namespace mollipath
