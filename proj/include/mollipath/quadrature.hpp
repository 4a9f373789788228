#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mollipath {

struct QuadratureSpec {
    double tolerance = 1e-10;  // absolute error target
    int max_depth = 40;
    // Absolute roundoff jitter of the integrand per unit length, declared by
    // the caller. Error estimates below this floor are treated as noise, not
    // unconverged truncation error: when fn's value comes from a cancelling
    // subtraction, its absolute error is set by the operand scale and no
    // amount of bisection can certify below noise_density * (b - a).
    double noise_density = 0.0;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& msg, double achieved)
        : std::runtime_error(msg + " (achieved error estimate " + std::to_string(achieved) + ")"),
          achieved_error(achieved) {}
    double achieved_error;
};

namespace detail {

// 15-point Gauss-Legendre nodes (positive half) and weights on [-1,1].
inline constexpr double kGL15Nodes[8] = {
    0.0,
    0.2011940939974345,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601701,
    0.8482065834104272,
    0.9372733924007060,
    0.9879925180204854,
};
inline constexpr double kGL15Weights[8] = {
    0.2025782419255609,
    0.1984314853271112,
    0.1861610000155619,
    0.1662692058169938,
    0.1395706779261539,
    0.1071592204671718,
    0.0703660474881081,
    0.0307532419961186,
};

// Weighted sum and weighted sum of magnitudes; the latter bounds the roundoff
// floor of the former.
struct RuleResult {
    double value;
    double magnitude;
};

template <class F>
RuleResult gl15(F&& fn, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double v0 = fn(mid);
    double sum = kGL15Weights[0] * v0;
    double mag = kGL15Weights[0] * std::abs(v0);
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGL15Nodes[i];
        const double vp = fn(mid + dx), vm = fn(mid - dx);
        sum += kGL15Weights[i] * (vp + vm);
        mag += kGL15Weights[i] * (std::abs(vp) + std::abs(vm));
    }
    return {sum * half, mag * half};
}

// One interval of the global adaptive scheme: value from the bisected rule,
// error from the coarse/bisected disagreement.
struct Segment {
    double a, b;
    double value;
    double magnitude;
    double error;
    int depth;
};

template <class F>
Segment makeSegment(F&& fn, double a, double b, int depth) {
    const double mid = 0.5 * (a + b);
    const RuleResult coarse = gl15(fn, a, b);
    const RuleResult left = gl15(fn, a, mid);
    const RuleResult right = gl15(fn, mid, b);
    return {a,
            b,
            left.value + right.value,
            left.magnitude + right.magnitude,
            std::abs(left.value + right.value - coarse.value),
            depth};
}

}  // namespace detail

// Integrates fn over [a,b]. The interval is split at every breakpoint inside
// (a,b) before adaptive integration, so fn only needs to be smooth between
// breakpoints. Globally adaptive: always bisects the segment with the largest
// error estimate, which copes with endpoint cusps where a fixed per-level
// tolerance split would stall.
template <class F>
double integrate(F&& fn, double a, double b, std::span<const double> breakpoints = {},
                 const QuadratureSpec& spec = {}) {
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    if (!(spec.tolerance > 0) || spec.max_depth < 1 || !(spec.noise_density >= 0))
        throw std::invalid_argument("integrate: invalid QuadratureSpec");
    if (a == b) return 0.0;

    std::vector<double> cuts;
    cuts.push_back(a);
    std::vector<double> bps(breakpoints.begin(), breakpoints.end());
    std::sort(bps.begin(), bps.end());
    for (double x : bps) {
        if (x <= a + 1e-14 || x >= b - 1e-14) continue;
        if (x - cuts.back() <= 1e-14) continue;  // merge near-duplicates
        cuts.push_back(x);
    }
    cuts.push_back(b);

    // Pre-split each smooth piece: on a whole piece the coarse and bisected
    // rules can agree while both are wrong (the bump kernel's flat tails hide
    // its steep flanks from a 15-point rule), so start the error estimator at
    // quarter-piece scale.
    std::vector<detail::Segment> segs;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        for (int q = 0; q < 4; ++q)
            segs.push_back(detail::makeSegment(fn, lo + (hi - lo) * q / 4.0,
                                               lo + (hi - lo) * (q + 1) / 4.0, 2));
    }

    // Each segment's error estimate carries roundoff jitter proportional to
    // the magnitude of its quadrature terms; for huge integrands (e.g. scaled
    // kernel derivatives at tiny eps) that jitter sits above any absolute
    // target and must not count as unconverged truncation error.
    auto effectiveError = [&spec](const detail::Segment& s) {
        const double floor =
            std::max(1e-14 * s.magnitude, spec.noise_density * (s.b - s.a));
        return std::max(0.0, s.error - floor);
    };
    auto totalError = [&] {
        double e = 0.0;
        for (const auto& s : segs) e += effectiveError(s);
        return e;
    };

    const long maxSplits = 200L * spec.max_depth;
    for (long split = 0; totalError() > spec.tolerance; ++split) {
        std::size_t worst = segs.size();
        double worstErr = 0.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].depth >= spec.max_depth) continue;
            const double e = effectiveError(segs[i]);
            if (e > worstErr) {
                worstErr = e;
                worst = i;
            }
        }
        if (worst == segs.size() || worstErr == 0.0 || split >= maxSplits)
            throw QuadratureError("quadrature failed to converge",
                                  totalError() + spec.tolerance);
        const detail::Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        segs[worst] = detail::makeSegment(fn, s.a, mid, s.depth + 1);
        segs.push_back(detail::makeSegment(fn, mid, s.b, s.depth + 1));
    }

    double sum = 0.0;
    for (const auto& s : segs) sum += s.value;
    return sum;
}

}  // namespace mollipath
