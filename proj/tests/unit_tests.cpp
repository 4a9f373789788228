#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "mollipath/curvature.hpp"
#include "mollipath/geometry.hpp"
#include "mollipath/kernel.hpp"
#include "mollipath/paths.hpp"
#include "mollipath/quadrature.hpp"
#include "mollipath/smoothing.hpp"
#include "mollipath/verify.hpp"
#include "mollipath/waypoint_io.hpp"

using namespace mollipath;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("quadrature: polynomial and trig exactness") {
    auto cube = [](double x) { return x * x * x - 2 * x + 1; };
    CHECK(integrate(cube, -1.0, 2.0) == doctest::Approx(3.75).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, kPi) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("quadrature: breakpoint splitting handles kinks") {
    auto absf = [](double x) { return std::abs(x); };
    const double cuts[] = {0.0};
    CHECK(integrate(absf, -1.0, 3.0, cuts) == doctest::Approx(5.0).epsilon(1e-12));
    // additivity across a breakpoint
    const double whole = integrate(absf, -2.0, 2.0, cuts);
    const double left = integrate(absf, -2.0, 0.0);
    const double right = integrate(absf, 0.0, 2.0);
    CHECK(whole == doctest::Approx(left + right).epsilon(1e-12));
}

TEST_CASE("quadrature: reversed interval is rejected") {
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("kernel: frozen normalization fixtures") {
    const BumpKernel& k = bumpKernel();
    // 1 / int_{-1}^{1} exp(-1/(1-u^2)) du, high-precision reference value
    CHECK(k.normalization() == doctest::Approx(2.252283621043581).epsilon(1e-11));
    CHECK(k.eval(0.0) == doctest::Approx(0.828568839869105).epsilon(1e-11));
    CHECK(k.supNorm() == doctest::Approx(k.eval(0.0)).epsilon(1e-13));
}

TEST_CASE("kernel: support, symmetry and unit mass") {
    const BumpKernel& k = bumpKernel();
    CHECK(k.eval(1.0) == 0.0);
    CHECK(k.eval(-1.0) == 0.0);
    CHECK(k.eval(1.5) == 0.0);
    CHECK(k.eval(0.3) == doctest::Approx(k.eval(-0.3)).epsilon(1e-14));
    for (double eps : {0.01, 0.1, 1.0, 10.0}) {
        const double cuts[] = {0.0};
        const double mass = integrate([&](double x) { return k.evalScaled(x, eps); }, -eps, eps,
                                      cuts, {1e-12, 48});
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("kernel: analytic derivatives match finite differences") {
    const BumpKernel& k = bumpKernel();
    const double h = 1e-6;
    for (double eps : {0.5, 1.0, 2.3}) {
        for (double x : {-0.7 * eps, -0.2 * eps, 0.0, 0.11 * eps, 0.64 * eps}) {
            const double fd1 = (k.evalScaled(x + h, eps) - k.evalScaled(x - h, eps)) / (2 * h);
            CHECK(k.derivative(x, eps, 1) == doctest::Approx(fd1).epsilon(1e-5));
            const double fd2 = (k.derivative(x + h, eps, 1) - k.derivative(x - h, eps, 1)) / (2 * h);
            CHECK(k.derivative(x, eps, 2) == doctest::Approx(fd2).epsilon(1e-5));
        }
    }
    CHECK(k.derivative(2.0, 1.0, 1) == 0.0);
    CHECK(k.derivative(-1.0, 1.0, 2) == 0.0);
}

TEST_CASE("kernel: cdf is a monotone unit ramp") {
    const BumpKernel& k = bumpKernel();
    const double eps = 0.7;
    CHECK(k.cdf(-eps, eps) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(k.cdf(eps, eps) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k.cdf(0.0, eps) == doctest::Approx(0.5).epsilon(1e-10));
    double prev = -1.0;
    for (int i = 0; i <= 40; ++i) {
        const double c = k.cdf(-eps + 2 * eps * i / 40.0, eps);
        CHECK(c >= prev - 1e-12);
        prev = c;
    }
    CHECK(k.cdf(-5.0, eps) == 0.0);
    CHECK(k.cdf(5.0, eps) == 1.0);
}

TEST_CASE("waypoint path: validation") {
    CHECK_THROWS_AS(WaypointPath({Vec(0, 0)}, false), std::invalid_argument);
    CHECK_THROWS_AS(WaypointPath({Vec(0, 0), Vec(0, 0)}, false), std::invalid_argument);
    // closed paths must not repeat the first point
    CHECK_THROWS_AS(WaypointPath({Vec(0, 0), Vec(1, 0), Vec(0, 0)}, true),
                    std::invalid_argument);
}

TEST_CASE("waypoint path: evaluation, clamping and closure") {
    WaypointPath open({Vec(0, 0), Vec(1, 0), Vec(1, 1)}, false);
    CHECK(open.segmentCount() == 2);
    CHECK(open.evalNative(0.5) == Vec(0.5, 0));
    CHECK(open.evalNative(1.5) == Vec(1, 0.5));
    CHECK(open.evalNative(-3.0) == Vec(0, 0));
    CHECK(open.evalNative(9.0) == Vec(1, 1));

    WaypointPath tri({Vec(0, 0), Vec(1, 0), Vec(0, 1)}, true);
    CHECK(tri.segmentCount() == 3);
    CHECK(tri.evalNative(2.5) == Vec(0, 0.5));  // closing segment back to start
    CHECK(tri.segmentVector(2) == Vec(0, -1));
}

TEST_CASE("extended path: periodic extension wraps") {
    WaypointPath tri({Vec(0, 0), Vec(1, 0), Vec(0, 1)}, true);
    ExtendedPath ext(tri, ExtensionPolicy::Periodic);
    CHECK(ext.period() == doctest::Approx(3.0));
    CHECK((ext.eval(0.5) - ext.eval(3.5)).norm2() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK((ext.eval(-1.0) - ext.eval(2.0)).norm2() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("extended path: periodic parametric needs matching endpoints") {
    ParametricPath ramp({[](double t) { return t; }}, 0.0, 1.0);
    CHECK_THROWS_AS(ExtendedPath(std::move(ramp), ExtensionPolicy::Periodic),
                    std::invalid_argument);
}

TEST_CASE("extended path: breakpoints enumerate knots in a window") {
    WaypointPath open({Vec(0, 0), Vec(1, 0), Vec(1, 1), Vec(2, 1)}, false);
    ExtendedPath ext(open, ExtensionPolicy::Clamp);
    const auto cuts = ext.breakpointsWithin(0.4, 2.6);
    CHECK(cuts.size() == 2);
    CHECK(cuts[0] == doctest::Approx(1.0));
    CHECK(cuts[1] == doctest::Approx(2.0));
}

TEST_CASE("heart path: closed up to machine precision, kinks at pi/2 and 3pi/2") {
    ExtendedPath heart = heartPath();
    CHECK(heart.dimension() == 2);
    CHECK((heart.eval(0.0) - heart.eval(2 * kPi)).norm2() < 1e-9);
    const auto cuts = heart.breakpointsWithin(0.0, 2 * kPi);
    bool sawHalfPi = false, sawThreeHalfPi = false;
    for (double c : cuts) {
        if (std::abs(c - kPi / 2) < 1e-12) sawHalfPi = true;
        if (std::abs(c - 3 * kPi / 2) < 1e-12) sawThreeHalfPi = true;
    }
    CHECK(sawHalfPi);
    CHECK(sawThreeHalfPi);
}

TEST_CASE("staircase path: unit steps, monotone") {
    ExtendedPath stairs = staircasePath(3);
    CHECK(stairs.eval(-0.5)[0] == doctest::Approx(0.0));
    CHECK(stairs.eval(0.5)[0] == doctest::Approx(1.0));
    CHECK(stairs.eval(1.5)[0] == doctest::Approx(2.0));
    CHECK(stairs.eval(7.0)[0] == doctest::Approx(3.0));
}

TEST_CASE("cube path: eight vertices, all unit edges, length 7") {
    WaypointPath cube = cubePath();
    CHECK(cube.points().size() == 8);
    CHECK(cube.dimension() == 3);
    CHECK_FALSE(cube.closed());
    for (int i = 0; i < cube.segmentCount(); ++i)
        CHECK(cube.segmentVector(i).norm2() == doctest::Approx(1.0));
    SampledCurve samples;
    for (int i = 0; i < 8; ++i) {
        samples.parameters.push_back(i);
        samples.points.push_back(cube.points()[static_cast<std::size_t>(i)]);
    }
    CHECK(polylineLength(samples, PNorm::Two) == doctest::Approx(7.0));
}

TEST_CASE("waypoint io: round trip and malformed documents") {
    std::istringstream good(R"({"dimension": 2, "closed": true,
                               "points": [[0,0],[2,0],[1,1.5]]})");
    WaypointPath p = readWaypointJson(good);
    CHECK(p.dimension() == 2);
    CHECK(p.closed());
    CHECK(p.points().size() == 3);
    CHECK(p.points()[2] == Vec(1, 1.5));

    std::istringstream notJson("waypoints: nope");
    CHECK_THROWS_AS(readWaypointJson(notJson), std::invalid_argument);
    std::istringstream missing(R"({"dimension": 2, "points": [[0,0],[1,1]]})");
    CHECK_THROWS_AS(readWaypointJson(missing), std::invalid_argument);
    std::istringstream badDim(R"({"dimension": 4, "closed": false, "points": [[0,0,0,0]]})");
    CHECK_THROWS_AS(readWaypointJson(badDim), std::invalid_argument);
    std::istringstream ragged(R"({"dimension": 2, "closed": false, "points": [[0,0],[1]]})");
    CHECK_THROWS_AS(readWaypointJson(ragged), std::invalid_argument);
    CHECK_THROWS_AS(readWaypointFile("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("smoothing: affine sources are fixed points") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    for (int rep = 0; rep < 5; ++rep) {
        const double a = coef(rng), b = coef(rng);
        const double eps = 0.1 + 2.0 * (rep + 1) / 5.0;
        ParametricPath line = ParametricPath::entireLine({[=](double t) { return a * t + b; }});
        MollifiedPath moll(ExtendedPath(std::move(line), ExtensionPolicy::Clamp), eps);
        for (int i = 0; i <= 100; ++i) {
            const double t = -5.0 + 10.0 * i / 100.0;
            CHECK(moll.eval(t)[0] == doctest::Approx(a * t + b).epsilon(1e-9));
            if (i % 10 == 0)
                CHECK(moll.derivative(t, 1)[0] == doctest::Approx(a).epsilon(1e-8));
        }
    }
}

TEST_CASE("smoothing: |t| at the kink matches the moment integral") {
    ParametricPath absPath =
        ParametricPath::entireLine({[](double t) { return std::abs(t); }}, {0.0});
    MollifiedPath moll(ExtendedPath(std::move(absPath), ExtensionPolicy::Clamp), 1.0);
    // int |s| phi(s) ds, frozen from an independent dense-trapezoid oracle
    CHECK(moll.eval(0.0)[0] == doctest::Approx(0.334453997709975).epsilon(1e-8));
}

TEST_CASE("smoothing: derivatives agree with finite differences") {
    ExtendedPath heart = heartPath();
    MollifiedPath moll(heart, std::vector<double>{0.4, 0.4});
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ts(0.0, 2 * kPi);
    const double h = 1e-5;
    for (int rep = 0; rep < 12; ++rep) {
        const double t = ts(rng);
        for (int c = 0; c < 2; ++c) {
            const double fd = (moll.eval(t + h)[c] - moll.eval(t - h)[c]) / (2 * h);
            const double d = moll.derivative(t, 1)[c];
            CHECK(d == doctest::Approx(fd).epsilon(1e-5));
            const double fd2 = (moll.derivative(t + h, 1)[c] - moll.derivative(t - h, 1)[c]) / (2 * h);
            CHECK(moll.derivative(t, 2)[c] == doctest::Approx(fd2).epsilon(2e-5));
        }
    }
}

TEST_CASE("smoothing: deep inside a segment the derivative is the segment vector") {
    WaypointPath path({Vec(0, 0), Vec(2, 1), Vec(2, 3)}, false);
    MollifiedPath moll(ExtendedPath(path, ExtensionPolicy::Clamp), 0.3);
    const Vec d = moll.derivative(0.5, 1);
    CHECK(d[0] == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(d[1] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("smoothing: closed-form corner second derivative") {
    CornerData corner{Vec(1, 0), Vec(0, 1), 1.0};
    CHECK(secondDerivativeTwoSegment(corner, 0.5, 2.0).norm2() == 0.0);
    CornerData straight{Vec(1, 1), Vec(1, 1), 1.0};
    CHECK(secondDerivativeTwoSegment(straight, 0.5, 1.0).norm2() == 0.0);

    const Vec closed = secondDerivativeTwoSegment(corner, 0.5, 1.0);
    CHECK(closed[1] == doctest::Approx(bumpKernel().evalScaled(0.0, 0.5)).epsilon(1e-12));
    CHECK(closed[0] == doctest::Approx(-closed[1]).epsilon(1e-12));

    WaypointPath path({Vec(0, 0), Vec(1, 0), Vec(1, 1)}, false);
    MollifiedPath moll(ExtendedPath(path, ExtensionPolicy::Clamp), 0.5);
    for (double t : {0.8, 1.0, 1.3}) {
        const Vec general = moll.derivative(t, 2);
        const Vec fast = secondDerivativeTwoSegment(corner, 0.5, t);
        CHECK((general - fast).norm2() < 1e-8);
    }
}

TEST_CASE("smoothing: construction rejects nonpositive epsilon") {
    WaypointPath path({Vec(0, 0), Vec(1, 0)}, false);
    ExtendedPath ext(path, ExtensionPolicy::Clamp);
    CHECK_THROWS_AS(MollifiedPath(ext, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(MollifiedPath(ext, std::vector<double>{0.5, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(MollifiedPath(ext, std::vector<double>{0.5}), std::invalid_argument);
}

TEST_CASE("geometry: wedge norm against the Gram identity") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    for (int dim : {2, 3}) {
        for (int rep = 0; rep < 50; ++rep) {
            Vec u(dim), v(dim);
            for (int i = 0; i < dim; ++i) {
                u[i] = coord(rng);
                v[i] = coord(rng);
            }
            const double gram = u.dot(u) * v.dot(v) - u.dot(v) * u.dot(v);
            CHECK(wedgeNorm(u, v) ==
                  doctest::Approx(std::sqrt(std::max(0.0, gram))).epsilon(1e-9));
        }
    }
    CHECK(wedgeNorm(Vec(2, 4), Vec(1, 2)) == doctest::Approx(0.0));
}

TEST_CASE("geometry: polyline length and refinement") {
    SampledCurve square;
    square.parameters = {0, 1, 2};
    square.points = {Vec(0, 0), Vec(1, 0), Vec(1, 1)};
    CHECK(polylineLength(square, PNorm::Two) == doctest::Approx(2.0));
    CHECK(polylineLength(square, PNorm::One) == doctest::Approx(2.0));

    SampledCurve bad;
    bad.parameters = {0, 0};
    bad.points = {Vec(0, 0), Vec(1, 0)};
    CHECK_THROWS_AS(polylineLength(bad, PNorm::Two), std::invalid_argument);

    const double circ = refineLength(
        [](double t) { return Vec(std::cos(t), std::sin(t)); }, 0, 2 * kPi, PNorm::Two, 1e-6);
    CHECK(circ == doctest::Approx(2 * kPi).epsilon(1e-4));
}

TEST_CASE("geometry: convex hull containment in 2D and 3D") {
    std::vector<Vec> tri = {Vec(0, 0), Vec(2, 0), Vec(0, 2), Vec(0.5, 0.5)};
    CHECK(convexHullContains(tri, Vec(0.5, 0.5), 1e-9));
    CHECK(convexHullContains(tri, Vec(1, 1), 1e-9));  // on the edge
    CHECK_FALSE(convexHullContains(tri, Vec(1.2, 1.2), 1e-9));
    CHECK(convexHullContains(tri, Vec(2.0 + 1e-8, 0), 1e-6));

    std::vector<Vec> tet = {Vec(0, 0, 0), Vec(1, 0, 0), Vec(0, 1, 0), Vec(0, 0, 1)};
    CHECK(convexHullContains(tet, Vec(0.25, 0.25, 0.25), 1e-9));
    CHECK(convexHullContains(tet, Vec(0.5, 0.5, 0.0), 1e-6));  // on a face edge
    CHECK_FALSE(convexHullContains(tet, Vec(0.5, 0.5, 0.5), 1e-6));
    CHECK_FALSE(convexHullContains(tet, Vec(-0.2, 0.1, 0.1), 1e-6));
}

TEST_CASE("curvature: corner weights sum to one and track the cdf") {
    const auto [a1, a2] = cornerWeights(1.0, 0.4, 1.0);
    CHECK(a1 == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(a1 + a2 == doctest::Approx(1.0).epsilon(1e-12));
    const auto [b1, b2] = cornerWeights(0.2, 0.4, 1.0);
    CHECK(b1 == doctest::Approx(1.0).epsilon(1e-12));  // far before the corner
    CHECK(b2 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("curvature: closed form matches the mollified path") {
    WaypointPath path({Vec(0, 0), Vec(1, 0), Vec(1.4, 1.3)}, false);
    const double eps = 0.35;
    MollifiedPath moll(ExtendedPath(path, ExtensionPolicy::Clamp), eps);
    CornerData corner{path.segmentVector(0), path.segmentVector(1), 1.0};
    for (int i = 0; i <= 20; ++i) {
        const double t = 1.0 - eps + 2 * eps * i / 20.0;
        const double exact = exactCornerCurvature(corner, eps, t);
        const double assembled = moll.curvatureAt(t);
        CHECK(exact == doctest::Approx(assembled).epsilon(1e-6));
    }
    CHECK_THROWS_AS(exactCornerCurvature(corner, 0.35, 1.0, 0.2), std::invalid_argument);
}

TEST_CASE("curvature: bound dominates and inverts cleanly") {
    CornerData corner{Vec(1, 0), Vec(0.3, 1.1), 1.0};
    const double eps = 0.3;
    const double bound = curvatureUpperBound(corner, eps);
    for (int i = 0; i <= 200; ++i) {
        const double t = 1.0 - eps + 2 * eps * i / 200.0;
        CHECK(exactCornerCurvature(corner, eps, t) <= bound * (1 + 1e-12));
    }
    const double kappa = 2.7;
    const double solved = solveEpsilonForBudget(corner, kappa);
    CHECK(curvatureUpperBound(corner, solved) == doctest::Approx(kappa).epsilon(1e-12));

    CornerData straight{Vec(1, 1), Vec(2, 2), 1.0};
    CHECK(curvatureUpperBound(straight, eps) == 0.0);
    CHECK(solveEpsilonForBudget(straight, kappa) == 0.0);
}

TEST_CASE("curvature: plan for a unit square stays exact") {
    WaypointPath square({Vec(0, 0), Vec(1, 0), Vec(1, 1), Vec(0, 1)}, true);
    const EpsilonPlan plan = planEpsilons(square, 10.0);
    CHECK(plan.perCorner.size() == 4);
    CHECK(plan.exact);
    CHECK(plan.globalEpsilon < 0.5);
    CHECK(plan.globalEpsilon >= 1e-4);
    for (const auto& c : plan.perCorner)
        CHECK(c.bound == doctest::Approx(10.0).epsilon(1e-9));

    // tiny budget -> huge epsilons -> plan is approximate and warned
    const EpsilonPlan loose = planEpsilons(square, 0.1);
    CHECK_FALSE(loose.exact);
    CHECK_FALSE(loose.warning.empty());
}

TEST_CASE("curvature: speed map") {
    CHECK(speedToCurvatureBudget(0.0, 2.0, 6.0, 10.0) == doctest::Approx(0.5));
    CHECK(speedToCurvatureBudget(10.0, 2.0, 6.0, 10.0) == doctest::Approx(1.0 / 6.0));
    CHECK_THROWS_AS(speedToCurvatureBudget(-1.0, 2.0, 6.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(speedToCurvatureBudget(11.0, 2.0, 6.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(speedToCurvatureBudget(1.0, 6.0, 2.0, 10.0), std::invalid_argument);
}

TEST_CASE("verify: staircase is monotone and quasiconvex after mollification") {
    Fn1D stairs{[](double t) {
                    double v = 0;
                    for (int i = 0; i < 4; ++i)
                        if (t > i) v += 1;
                    return v;
                },
                {0, 1, 2, 3}};
    CHECK(checkMonotonicity(stairs, 0.6, {-1, 4, 301}).passed);
    CHECK(checkQuasiconvexity(stairs, 0.6, {-1, 4, 301}).passed);
}

TEST_CASE("verify: convexity, dominance and uniform convergence for |t|") {
    Fn1D absf{[](double t) { return std::abs(t); }, {0.0}};
    CHECK(checkConvexityPreservation(absf, 0.8, {-2, 2, 201}).passed);
    CHECK(checkDominance(absf, 0.8, {-2, 2, 201}).passed);
    const CheckReport conv =
        checkUniformConvergence(absf, 1.0, {1.0, 0.5, 0.25, 0.1}, {-2, 2, 201});
    CHECK(conv.passed);
    const CheckReport skipped = checkUniformConvergence(absf, -1.0, {1.0}, {-2, 2, 11});
    CHECK(skipped.passed);
    CHECK(skipped.note.find("skipped") != std::string::npos);
}

TEST_CASE("verify: report serialization") {
    std::vector<CheckReport> reports = {{"demo", true, 0.5, 10, "ok"}};
    const std::string json = reportsToJson(reports);
    CHECK(json.find("\"demo\"") != std::string::npos);
    CHECK(json.find("\"passed\": true") != std::string::npos);
}
