#pragma once

#include "mollipath/quadrature.hpp"

namespace mollipath {

// The normalized C-infinity bump mollifier
//   phi(x) = c1 * exp(-1/(1-x^2)) for |x| < 1, 0 otherwise,
// with the scaled family phi_eps(x) = phi(x/eps)/eps supported on [-eps, eps].
// Immutable after construction; safe for concurrent reads.
class BumpKernel {
public:
    BumpKernel();

    double normalization() const { return normalization_; }
    double supNorm() const { return sup_norm_; }

    // sup |phi^(order)| over the support of the unit kernel (order 0, 1 or 2);
    // for the scaled family divide by eps^(order+1).
    double derivativeSupNorm(int order) const;

    // phi(x); exactly 0 for |x| >= 1.
    double eval(double x) const;

    // phi_eps(x) = phi(x/eps)/eps.
    double evalScaled(double x, double eps) const;

    // Analytic derivative of phi_eps of the given order (1 or 2).
    double derivative(double x, double eps, int order) const;

    // Phi_eps(x) = int_{-inf}^{x} phi_eps, clamped to [0,1].
    double cdf(double x, double eps) const;

private:
    double normalization_;
    double sup_norm_;
};

// Shared immutable kernel instance.
const BumpKernel& bumpKernel();

}  // namespace mollipath
