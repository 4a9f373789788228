#include "mollipath/smoothing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mollipath/geometry.hpp"
#include "mollipath/kernel.hpp"

namespace mollipath {

MollifiedPath::MollifiedPath(ExtendedPath source, std::vector<double> epsilons,
                             QuadratureSpec spec)
    : source_(std::move(source)), epsilons_(std::move(epsilons)), spec_(spec) {
    if (static_cast<int>(epsilons_.size()) != source_.dimension())
        throw std::invalid_argument("MollifiedPath: one epsilon per component required");
    for (double e : epsilons_)
        if (!(e > 0)) throw std::invalid_argument("MollifiedPath: epsilons must be positive");
}

MollifiedPath::MollifiedPath(ExtendedPath source, double eps, QuadratureSpec spec)
    : MollifiedPath(ExtendedPath(source),
                    std::vector<double>(static_cast<std::size_t>(source.dimension()), eps),
                    spec) {}

double MollifiedPath::convolveComponent(int comp, double t, int order) const {
    const double eps = epsilons_[static_cast<std::size_t>(comp)];
    const BumpKernel& kernel = bumpKernel();

    // Integrate over the kernel variable s in [-eps, eps]; the source is
    // evaluated at t - s, so source breakpoints k map to s = t - k.
    std::vector<double> knots = source_.breakpointsWithin(t - eps, t + eps);
    std::vector<double> cuts;
    cuts.reserve(knots.size());
    for (double k : knots) cuts.push_back(t - k);

    auto integrand = [&](double s) {
        const double w = (order == 0) ? kernel.evalScaled(s, eps)
                                      : kernel.derivative(s, eps, order);
        return source_.eval(t - s)[comp] * w;
    };

    // The source value carries absolute roundoff jitter set by its operand
    // scale (coordinates and the parameter magnitude), not by its own value;
    // multiplied by the kernel factor this is the integrand accuracy limit.
    // Declare it so the quadrature does not chase noise when the kernel factor
    // is huge (high derivative order at small eps).
    double srcScale = 1.0 + std::abs(t);
    for (double u : {t - eps, t, t + eps})
        srcScale = std::max(srcScale, std::abs(source_.eval(u)[comp]));
    QuadratureSpec spec = spec_;
    spec.noise_density = 4.0 * std::numeric_limits<double>::epsilon() * srcScale *
                         kernel.derivativeSupNorm(order) / std::pow(eps, order + 1);
    return integrate(integrand, -eps, eps, cuts, spec);
}

Vec MollifiedPath::eval(double t) const {
    Vec v(source_.dimension());
    for (int i = 0; i < v.dim(); ++i) v[i] = convolveComponent(i, t, 0);
    return v;
}

Vec MollifiedPath::derivative(double t, int order) const {
    if (order != 1 && order != 2)
        throw std::invalid_argument("MollifiedPath::derivative: order must be 1 or 2");
    Vec v(source_.dimension());
    for (int i = 0; i < v.dim(); ++i) v[i] = convolveComponent(i, t, order);
    return v;
}

double MollifiedPath::curvatureAt(double t) const {
    const Vec d1 = derivative(t, 1);
    const Vec d2 = derivative(t, 2);
    const double speed = d1.norm2();
    if (speed == 0.0) return 0.0;
    return wedgeNorm(d2, d1) / (speed * speed * speed);
}

Vec secondDerivativeTwoSegment(const CornerData& corner, double eps, double t) {
    const double w = bumpKernel().evalScaled(t - corner.knot, eps);
    return (corner.pTilde2 - corner.pTilde1) * w;
}

}  // namespace mollipath
