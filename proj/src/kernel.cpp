#include "mollipath/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace mollipath {

namespace {

// Support guard: treat |x| > 1 - 1e-12 as outside to avoid overflow in 1/(1-x^2).
constexpr double kEdge = 1.0 - 1e-12;

double unnormalized(double x) {
    if (std::abs(x) >= kEdge) return 0.0;
    return std::exp(-1.0 / (1.0 - x * x));
}

}  // namespace

BumpKernel::BumpKernel() {
    QuadratureSpec spec;
    spec.tolerance = 1e-12;
    spec.max_depth = 48;
    static constexpr double origin[] = {0.0};
    const double mass = integrate([](double u) { return unnormalized(u); }, -1.0, 1.0,
                                  std::span<const double>(origin), spec);
    normalization_ = 1.0 / mass;
    sup_norm_ = normalization_ * std::exp(-1.0);
}

double BumpKernel::eval(double x) const { return normalization_ * unnormalized(x); }

double BumpKernel::derivativeSupNorm(int order) const {
    switch (order) {
        case 0: return sup_norm_;
        case 1: return 1.798290245462676;
        case 2: return 17.454531944920503;
        default: throw std::invalid_argument("derivativeSupNorm: order must be 0, 1 or 2");
    }
}

double BumpKernel::evalScaled(double x, double eps) const {
    if (!(eps > 0)) throw std::invalid_argument("evalScaled: eps must be positive");
    return eval(x / eps) / eps;
}

double BumpKernel::derivative(double x, double eps, int order) const {
    if (!(eps > 0)) throw std::invalid_argument("derivative: eps must be positive");
    if (order != 1 && order != 2) throw std::invalid_argument("derivative: order must be 1 or 2");
    const double u = x / eps;
    if (std::abs(u) >= kEdge) return 0.0;
    const double q = 1.0 / (1.0 - u * u);
    const double phi = normalization_ * std::exp(-q);
    const double g = -2.0 * u * q * q;  // d/du of the exponent
    if (order == 1) return phi * g / (eps * eps);
    // phi'' = phi * (g^2 + g'), g' = -2 q^2 - 8 u^2 q^3
    const double gp = -2.0 * q * q - 8.0 * u * u * q * q * q;
    return phi * (g * g + gp) / (eps * eps * eps);
}

double BumpKernel::cdf(double x, double eps) const {
    if (!(eps > 0)) throw std::invalid_argument("cdf: eps must be positive");
    const double u = x / eps;
    if (u <= -1.0) return 0.0;
    if (u >= 1.0) return 1.0;
    QuadratureSpec spec;
    spec.tolerance = 1e-12;
    spec.max_depth = 48;
    // Integrate from the nearer support edge for accuracy in the tails.
    if (u <= 0.0) {
        const double v = integrate([this](double s) { return eval(s); }, -1.0, u, {}, spec);
        return std::clamp(v, 0.0, 1.0);
    }
    const double v = integrate([this](double s) { return eval(s); }, u, 1.0, {}, spec);
    return std::clamp(1.0 - v, 0.0, 1.0);
}

const BumpKernel& bumpKernel() {
    static const BumpKernel k;
    return k;
}

}  // namespace mollipath
