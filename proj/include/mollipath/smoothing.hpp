#pragma once

#include <vector>

#include "mollipath/curvature.hpp"
#include "mollipath/paths.hpp"
#include "mollipath/quadrature.hpp"

namespace mollipath {

// Componentwise convolution of an extended path with scaled bump kernels.
// Component i evaluates F_i(t) = int_{[-eps_i, eps_i]} f_i(t-s) phi_{eps_i}(s) ds.
// Immutable; evaluation is pure and safe to run concurrently.
class MollifiedPath {
public:
    MollifiedPath(ExtendedPath source, std::vector<double> epsilons, QuadratureSpec spec = {});
    MollifiedPath(ExtendedPath source, double eps, QuadratureSpec spec = {});

    Vec eval(double t) const;

    // Exact derivative via kernel derivatives: int f_i(t-s) phi_eps^(order)(s) ds.
    // Never differentiates the source path. order in {1, 2}.
    Vec derivative(double t, int order) const;

    // Curvature from the mollified derivatives, |F'' ^ F'| / |F'|^3.
    double curvatureAt(double t) const;

    const ExtendedPath& source() const { return source_; }
    const std::vector<double>& epsilons() const { return epsilons_; }

private:
    double convolveComponent(int comp, double t, int order) const;

    ExtendedPath source_;
    std::vector<double> epsilons_;
    QuadratureSpec spec_;
};

// Closed form F''(t) = phi_eps(t - knot) (P~2 - P~1) for an isolated corner,
// obtained by differentiating F'(t) = P~1 (1 - Phi_eps(t-knot)) + P~2 Phi_eps(t-knot).
Vec secondDerivativeTwoSegment(const CornerData& corner, double eps, double t);

}  // namespace mollipath
