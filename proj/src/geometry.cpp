#include "mollipath/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mollipath {

double wedgeNorm(const Vec& u, const Vec& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("wedgeNorm: dimension mismatch");
    if (u.dim() == 2) return std::abs(u[0] * v[1] - u[1] * v[0]);
    if (u.dim() == 3) {
        const double cx = u[1] * v[2] - u[2] * v[1];
        const double cy = u[2] * v[0] - u[0] * v[2];
        const double cz = u[0] * v[1] - u[1] * v[0];
        return std::sqrt(cx * cx + cy * cy + cz * cz);
    }
    throw std::invalid_argument("wedgeNorm: dimension must be 2 or 3");
}

double polylineLength(const SampledCurve& curve, PNorm p) {
    if (curve.points.size() != curve.parameters.size())
        throw std::invalid_argument("polylineLength: parameters/points size mismatch");
    if (curve.points.size() < 2)
        throw std::invalid_argument("polylineLength: need at least 2 samples");
    for (std::size_t i = 1; i < curve.parameters.size(); ++i)
        if (!(curve.parameters[i] > curve.parameters[i - 1]))
            throw std::invalid_argument("polylineLength: parameters must be strictly increasing");
    double sum = 0.0;
    for (std::size_t i = 1; i < curve.points.size(); ++i)
        sum += (curve.points[i] - curve.points[i - 1]).norm(p);
    return sum;
}

double refineLength(const std::function<Vec(double)>& path, double a, double b, PNorm p,
                    double tol, int maxIter) {
    if (!(tol > 0)) throw std::invalid_argument("refineLength: tol must be positive");
    if (!(a < b)) throw std::invalid_argument("refineLength: need a < b");

    auto lengthAt = [&](long n) {
        const double h = (b - a) / static_cast<double>(n);
        double sum = 0.0;
        Vec prev = path(a);
        for (long i = 1; i <= n; ++i) {
            Vec cur = path(a + h * static_cast<double>(i));
            sum += (cur - prev).norm(p);
            prev = cur;
        }
        return sum;
    };

    long n = 64;
    double prev = lengthAt(n);
    for (int it = 0; it < maxIter; ++it) {
        n *= 2;
        const double cur = lengthAt(n);
        if (std::abs(cur - prev) < tol) return cur;
        prev = cur;
    }
    throw std::runtime_error("refineLength: iteration cap exceeded");
}

namespace {

// ----- 2D: monotone chain hull + distance-to-polygon test -----

double cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<Vec> convexHull2D(std::span<const Vec> cloud) {
    std::vector<Vec> pts(cloud.begin(), cloud.end());
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Vec> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Vec& p : pts) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && cross2(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);  // last point equals the first
    return hull;
}

namespace {

double pointSegmentDistance(const Vec& q, const Vec& a, const Vec& b) {
    const Vec d = b - a;
    const double len2 = d.dot(d);
    double s = len2 > 0 ? (q - a).dot(d) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    return (q - (a + d * s)).norm2();
}

bool contains2d(std::span<const Vec> cloud, const Vec& query, double slack) {
    const std::vector<Vec> hull = convexHull2D(cloud);
    if (hull.size() == 1) return (query - hull[0]).norm2() <= slack;
    if (hull.size() == 2) return pointSegmentDistance(query, hull[0], hull[1]) <= slack;
    bool inside = true;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Vec& a = hull[i];
        const Vec& b = hull[(i + 1) % hull.size()];
        if (cross2(a, b, query) < 0) inside = false;
        dist = std::min(dist, pointSegmentDistance(query, a, b));
    }
    return inside || dist <= slack;
}

// ----- 3D: Wolfe's minimum-norm-point over co(cloud - query) -----

// Min-norm point of the affine hull of pts: minimize |sum w_i p_i|, sum w = 1.
// Solves the (m+1)x(m+1) normal system by Gaussian elimination.
std::vector<double> affineMinNormWeights(const std::vector<Vec>& pts) {
    const std::size_t m = pts.size();
    const std::size_t n = m + 1;
    std::vector<double> A(n * n, 0.0), rhs(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        A[0 * n + (i + 1)] = 1.0;
        A[(i + 1) * n + 0] = 1.0;
        for (std::size_t j = 0; j < m; ++j) A[(i + 1) * n + (j + 1)] = pts[i].dot(pts[j]);
    }
    rhs[0] = 1.0;
    // partial-pivot elimination
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r * n + col]) > std::abs(A[piv * n + col])) piv = r;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(A[col * n + c], A[piv * n + c]);
            std::swap(rhs[col], rhs[piv]);
        }
        const double d = A[col * n + col];
        if (std::abs(d) < 1e-300) continue;  // degenerate; weights stay usable
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = A[r * n + col] / d;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = rhs[ri];
        for (std::size_t c = ri + 1; c < n; ++c) s -= A[ri * n + c] * x[c];
        const double d = A[ri * n + ri];
        x[ri] = std::abs(d) > 1e-300 ? s / d : 0.0;
    }
    return std::vector<double>(x.begin() + 1, x.end());
}

bool containsMinNorm(std::span<const Vec> cloud, const Vec& query, double slack) {
    const int dim = query.dim();
    auto shifted = [&](std::size_t i) { return cloud[i] - query; };

    // start from the closest cloud point
    std::size_t best = 0;
    double bestn = shifted(0).norm2();
    for (std::size_t i = 1; i < cloud.size(); ++i) {
        const double nn = shifted(i).norm2();
        if (nn < bestn) {
            bestn = nn;
            best = i;
        }
    }
    std::vector<Vec> corral = {shifted(best)};
    std::vector<double> weights = {1.0};
    Vec v = corral[0];

    const int maxMajor = 200;
    for (int major = 0; major < maxMajor; ++major) {
        const double vnorm = v.norm2();
        if (vnorm <= slack) return true;

        // best improving vertex
        double mindot = std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            const double d = v.dot(shifted(i));
            if (d < mindot) {
                mindot = d;
                arg = i;
            }
        }
        // separating-direction certificate: dist(query, hull) >= mindot/|v|
        if (mindot / vnorm >= slack) return false;
        // optimality: v is already the min-norm point
        if (mindot >= vnorm * vnorm - 1e-14 * (1.0 + vnorm)) return vnorm <= slack;

        corral.push_back(shifted(arg));
        weights.push_back(0.0);

        // minor cycle: restore a corral whose affine min-norm point is a
        // proper convex combination
        for (int minor = 0; minor < 100; ++minor) {
            std::vector<double> w = affineMinNormWeights(corral);
            bool feasible = true;
            for (double wi : w)
                if (wi < 1e-12) feasible = false;
            if (feasible) {
                weights = w;
                break;
            }
            double theta = 1.0;
            for (std::size_t i = 0; i < w.size(); ++i)
                if (w[i] < 1e-12 && weights[i] > w[i])
                    theta = std::min(theta, weights[i] / (weights[i] - w[i]));
            for (std::size_t i = 0; i < w.size(); ++i)
                weights[i] = (1.0 - theta) * weights[i] + theta * w[i];
            for (std::size_t i = corral.size(); i-- > 0;) {
                if (weights[i] <= 1e-12 && corral.size() > 1) {
                    corral.erase(corral.begin() + static_cast<std::ptrdiff_t>(i));
                    weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(i));
                }
            }
        }
        Vec nv(dim);
        for (std::size_t i = 0; i < corral.size(); ++i) nv = nv + corral[i] * weights[i];
        if (nv.norm2() >= v.norm2() - 1e-16) return nv.norm2() <= slack;  // stalled
        v = nv;
    }
    return v.norm2() <= slack;
}

}  // namespace

bool convexHullContains(std::span<const Vec> cloud, const Vec& query, double slack) {
    if (cloud.empty()) throw std::invalid_argument("convexHullContains: empty cloud");
    if (slack < 0) throw std::invalid_argument("convexHullContains: slack must be >= 0");
    const int dim = query.dim();
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("convexHullContains: dimension must be 2 or 3");
    for (const Vec& p : cloud)
        if (p.dim() != dim) throw std::invalid_argument("convexHullContains: dimension mismatch");
    if (dim == 2) return contains2d(cloud, query, slack);
    return containsMinNorm(cloud, query, slack);
}

}  // namespace mollipath
