#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mollipath/curvature.hpp"
#include "mollipath/geometry.hpp"
#include "mollipath/kernel.hpp"
#include "mollipath/paths.hpp"
#include "mollipath/smoothing.hpp"
#include "mollipath/verify.hpp"
#include "mollipath/waypoint_io.hpp"

namespace mp = mollipath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitCheckFailed = 3;

struct SpeedSpec {
    double v = 0, rMin = 0, rMax = 0, vMax = 0;
};

struct CommonOpts {
    std::string input;
    std::vector<double> epsilons;
    double kappaMax = 0;
    std::vector<double> speed;  // v rMin rMax vMax
    int samplesPerUnit = 200;
    std::string output;
    std::string format = "table";
};

std::ostream& openOutput(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

double resolveBudget(const CommonOpts& o) {
    if (o.kappaMax > 0) return o.kappaMax;
    if (o.speed.size() == 4)
        return mp::speedToCurvatureBudget(o.speed[0], o.speed[1], o.speed[2], o.speed[3]);
    throw std::invalid_argument("supply exactly one of --epsilon, --kappa-max, --speed");
}

std::vector<double> resolveEpsilons(const CommonOpts& o, const mp::WaypointPath& path) {
    const int given = (!o.epsilons.empty()) + (o.kappaMax > 0) + (o.speed.size() == 4);
    if (given != 1)
        throw std::invalid_argument("supply exactly one of --epsilon, --kappa-max, --speed");
    if (!o.epsilons.empty()) {
        if (o.epsilons.size() == 1)
            return std::vector<double>(static_cast<std::size_t>(path.dimension()), o.epsilons[0]);
        if (static_cast<int>(o.epsilons.size()) != path.dimension())
            throw std::invalid_argument("--epsilon needs 1 or `dimension` values");
        return o.epsilons;
    }
    const mp::EpsilonPlan plan = mp::planEpsilons(path, resolveBudget(o));
    return std::vector<double>(static_cast<std::size_t>(path.dimension()), plan.globalEpsilon);
}

void writeSampledTable(std::ostream& out, const mp::MollifiedPath& moll, double lo, double hi,
                       int samplesPerUnit) {
    const int dim = moll.source().dimension();
    out << "t";
    const char* names[3] = {"x", "y", "z"};
    for (int i = 0; i < dim; ++i) out << "," << names[i];
    for (int i = 0; i < dim; ++i) out << ",d" << names[i];
    out << ",kappa\n";
    const long n = std::lround((hi - lo) * samplesPerUnit);
    out.precision(12);
    for (long j = 0; j <= n; ++j) {
        const double t = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n);
        const mp::Vec p = moll.eval(t);
        const mp::Vec d = moll.derivative(t, 1);
        out << t;
        for (int i = 0; i < dim; ++i) out << "," << p[i];
        for (int i = 0; i < dim; ++i) out << "," << d[i];
        out << "," << moll.curvatureAt(t) << "\n";
    }
}

void writeSvg(std::ostream& out, const mp::ExtendedPath& source, const mp::MollifiedPath& moll,
              double lo, double hi, int samplesPerUnit) {
    if (source.dimension() != 2) throw std::invalid_argument("svg output requires a 2D path");
    const long n = std::max<long>(2, std::lround((hi - lo) * samplesPerUnit));
    std::vector<mp::Vec> src, mol;
    for (long j = 0; j <= n; ++j) {
        const double t = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n);
        src.push_back(source.eval(t));
        mol.push_back(moll.eval(t));
    }
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& v : src) {
        xmin = std::min(xmin, v[0]);
        xmax = std::max(xmax, v[0]);
        ymin = std::min(ymin, v[1]);
        ymax = std::max(ymax, v[1]);
    }
    const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin) + 1e-9;
    xmin -= pad; xmax += pad; ymin -= pad; ymax += pad;
    const double w = 640.0;
    const double s = w / (xmax - xmin);
    const double h = (ymax - ymin) * s;
    auto px = [&](const mp::Vec& v) { return (v[0] - xmin) * s; };
    auto py = [&](const mp::Vec& v) { return h - (v[1] - ymin) * s; };
    auto polyline = [&](const std::vector<mp::Vec>& pts, const char* color) {
        out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& v : pts) out << px(v) << "," << py(v) << " ";
        out << "\"/>\n";
    };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    polyline(src, "#3465a4");
    polyline(mol, "#cc0000");
    out << "</svg>\n";
}

int runSmooth(const CommonOpts& o) {
    const mp::WaypointPath path = mp::readWaypointFile(o.input);
    const std::vector<double> eps = resolveEpsilons(o, path);
    mp::ExtendedPath ext(path, path.closed() ? mp::ExtensionPolicy::Periodic
                                             : mp::ExtensionPolicy::Clamp);
    mp::MollifiedPath moll(ext, eps);
    std::ofstream file;
    std::ostream& out = openOutput(o.output, file);
    if (o.format == "svg")
        writeSvg(out, ext, moll, 0.0, path.domainLength(), o.samplesPerUnit);
    else
        writeSampledTable(out, moll, 0.0, path.domainLength(), o.samplesPerUnit);
    return kExitOk;
}

int runPlan(const CommonOpts& o, double epsMin, bool refine) {
    const mp::WaypointPath path = mp::readWaypointFile(o.input);
    if (!o.epsilons.empty())
        throw std::invalid_argument("plan takes --kappa-max or --speed, not --epsilon");
    mp::PlanOptions opts;
    opts.epsMin = epsMin;
    opts.refine = refine;
    const mp::EpsilonPlan plan = mp::planEpsilons(path, resolveBudget(o), opts);
    std::ofstream file;
    std::ostream& out = openOutput(o.output, file);
    out.precision(12);
    out << "corner_index,epsilon,bound\n";
    for (const auto& c : plan.perCorner)
        out << c.cornerIndex << "," << c.epsilon << "," << c.bound << "\n";
    out << "global_epsilon," << plan.globalEpsilon << "\n";
    out << "exact," << (plan.exact ? "true" : "false") << "\n";
    if (!plan.warning.empty()) out << "warning," << plan.warning << "\n";
    return kExitOk;
}

void writeCurveCsv(const std::string& file, const std::vector<std::string>& cols,
                   const std::function<mp::Vec(double)>& f, double lo, double hi, long n) {
    std::ofstream out(file);
    if (!out) throw std::invalid_argument("cannot open output file: " + file);
    out.precision(12);
    out << "t";
    for (const auto& c : cols) out << "," << c;
    out << "\n";
    for (long j = 0; j <= n; ++j) {
        const double t = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n);
        const mp::Vec v = f(t);
        out << t;
        for (int i = 0; i < v.dim(); ++i) out << "," << v[i];
        out << "\n";
    }
}

int runDemo(const std::string& name, const std::string& outdir) {
    const std::string prefix = outdir.empty() ? "" : outdir + "/";
    const double two_pi = 2.0 * std::numbers::pi;
    if (name == "heart") {
        mp::ExtendedPath heart = mp::heartPath();
        writeCurveCsv(prefix + "heart_source.csv", {"x", "y"},
                      [&](double t) { return heart.eval(t); }, 0, two_pi, 2000);
        for (auto [e1, e2] : {std::pair{0.4, 0.4}, std::pair{0.2, 0.8}}) {
            mp::MollifiedPath moll(heart, std::vector<double>{e1, e2});
            std::ostringstream fn;
            fn << prefix << "heart_mollified_eps_" << e1 << "_" << e2 << ".csv";
            writeCurveCsv(fn.str(), {"x", "y"}, [&](double t) { return moll.eval(t); }, 0,
                          two_pi, 2000);
        }
        return kExitOk;
    }
    if (name == "staircase") {
        mp::ExtendedPath stairs = mp::staircasePath(4);
        mp::MollifiedPath moll(stairs, 0.5);
        writeCurveCsv(prefix + "staircase_source.csv", {"x"},
                      [&](double t) { return stairs.eval(t); }, -1, 4, 1000);
        writeCurveCsv(prefix + "staircase_mollified.csv", {"x"},
                      [&](double t) { return moll.eval(t); }, -1, 4, 1000);
        return kExitOk;
    }
    if (name == "cube") {
        const mp::WaypointPath cube = mp::cubePath();
        mp::ExtendedPath ext(cube, mp::ExtensionPolicy::Clamp);
        mp::MollifiedPath moll(ext, 1.0);
        const double L = cube.domainLength();
        writeCurveCsv(prefix + "cube_source.csv", {"x", "y", "z"},
                      [&](double t) { return ext.eval(t); }, 0, L, 1400);
        writeCurveCsv(prefix + "cube_mollified.csv", {"x", "y", "z"},
                      [&](double t) { return moll.eval(t); }, 0, L, 1400);
        const double ls = mp::refineLength([&](double t) { return ext.eval(t); }, 0, L,
                                           mp::PNorm::Two, 1e-4);
        const double lm = mp::refineLength([&](double t) { return moll.eval(t); }, 0, L,
                                           mp::PNorm::Two, 1e-4);
        std::cout << "cube source l2 length: " << ls << "\n"
                  << "cube mollified l2 length: " << lm << "\n";
        return kExitOk;
    }
    throw std::invalid_argument("unknown demo: " + name);
}

// Piecewise source of the local-convexity counterexample.
mp::Fn1D counterexampleFn() {
    return {[](double x) {
                if (x < 0) return 0.0;
                if (x <= 0.5) return x;
                return 1.0 - x;
            },
            {0.0, 0.5}};
}

int runAnalyze(const CommonOpts& o, const std::string& demo) {
    std::vector<mp::CheckReport> reports;
    bool failed = false;
    const double two_pi = 2.0 * std::numbers::pi;

    if (!demo.empty()) {
        if (demo == "heart") {
            mp::ExtendedPath heart = mp::heartPath();
            const std::vector<double> eps =
                o.epsilons.empty() ? std::vector<double>{0.4, 0.4} : o.epsilons;
            mp::MollifiedPath moll(heart, eps);
            reports.push_back(mp::checkHullEnclosure(heart, moll, 0, two_pi, 2000, 1e-6));
            reports.push_back(
                mp::checkLengthNonIncrease(heart, moll, 0, two_pi, mp::PNorm::One, 1e-3));
        } else if (demo == "staircase") {
            mp::Fn1D stairs{[](double t) {
                                double v = 0;
                                for (int i = 0; i < 4; ++i)
                                    if (t > i) v += 1;
                                return v;
                            },
                            {0, 1, 2, 3}};
            reports.push_back(mp::checkMonotonicity(stairs, 0.5, {-1, 4, 501}));
            reports.push_back(mp::checkQuasiconvexity(stairs, 0.5, {-1, 4, 501}));
        } else if (demo == "example2") {
            const mp::Fn1D fn = counterexampleFn();
            auto local = mp::checkLocalConvexityWindow(fn, {-0.5, 0.5, 201}, {3.2});
            // expected-fail fixture: the large epsilon must break local convexity
            mp::CheckReport big = local[0];
            big.name = "example2_eps_3.2_breaks_convexity";
            big.passed = !big.passed;
            reports.push_back(big);
            auto sub = mp::checkLocalConvexityWindow(fn, {-0.1, 0.1, 201}, {0.45});
            sub[0].name = "example2_eps_0.45_convex_subwindow";
            reports.push_back(sub[0]);
        } else {
            throw std::invalid_argument("unknown analyze demo: " + demo);
        }
    } else {
        const mp::WaypointPath path = mp::readWaypointFile(o.input);
        const std::vector<double> eps = resolveEpsilons(o, path);
        mp::ExtendedPath ext(path, path.closed() ? mp::ExtensionPolicy::Periodic
                                                 : mp::ExtensionPolicy::Clamp);
        mp::MollifiedPath moll(ext, eps);
        const double L = path.domainLength();
        reports.push_back(mp::checkHullEnclosure(ext, moll, 0, L, 2000, 1e-6));
        reports.push_back(mp::checkLengthNonIncrease(ext, moll, 0, L, mp::PNorm::Two, 1e-4));
        if (o.kappaMax > 0 || o.speed.size() == 4) {
            const double budget = resolveBudget(o);
            const mp::EpsilonPlan plan = mp::planEpsilons(path, budget);
            mp::CheckReport r;
            r.name = "curvature_budget";
            double worstMargin = std::numeric_limits<double>::infinity();
            long samples = 0;
            mp::MollifiedPath planned(ext, plan.globalEpsilon);
            for (const auto& c : plan.perCorner) {
                const double e = plan.globalEpsilon;
                for (int j = 0; j <= 64; ++j) {
                    const double t = c.cornerIndex - e + 2.0 * e * j / 64;
                    worstMargin =
                        std::min(worstMargin, budget * (1 + 1e-6) - planned.curvatureAt(t));
                    ++samples;
                }
            }
            r.worstViolation = worstMargin;
            r.samples = samples;
            r.passed = plan.exact ? worstMargin >= 0 : true;
            if (!plan.exact) r.note = plan.warning;
            reports.push_back(r);
        }
    }
    for (const auto& r : reports)
        if (!r.passed) failed = true;

    std::ofstream file;
    std::ostream& out = openOutput(o.output, file);
    out << mp::reportsToJson(reports) << "\n";
    return failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mollifier-based path smoothing and curvature planning"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string demoName, analyzeDemo;
    std::string outdir = ".";
    double epsMin = 1e-4;
    bool refine = false;

    auto addCommon = [&](CLI::App* cmd, bool needInput) {
        if (needInput) cmd->add_option("input", opts.input, "waypoint JSON file")->required();
        cmd->add_option("--epsilon", opts.epsilons, "mollification epsilon(s), one per component");
        cmd->add_option("--kappa-max", opts.kappaMax, "curvature budget (1/m)");
        cmd->add_option("--speed", opts.speed, "v rMin rMax vMax")->expected(4);
        cmd->add_option("--samples-per-unit", opts.samplesPerUnit, "sampling density")
            ->default_val(200);
        cmd->add_option("-o,--output", opts.output, "output file (default stdout)");
    };

    CLI::App* smooth = app.add_subcommand("smooth", "sample a mollified path with derivatives");
    addCommon(smooth, true);
    smooth->add_option("--format", opts.format, "table or svg")
        ->check(CLI::IsMember({"table", "svg"}))
        ->default_val("table");

    CLI::App* plan = app.add_subcommand("plan", "plan per-corner epsilons for a curvature budget");
    addCommon(plan, true);
    plan->add_option("--eps-min", epsMin, "floor for the global epsilon")->default_val(1e-4);
    plan->add_flag("--refine", refine, "bisection refinement when the plan is approximate");

    CLI::App* demo = app.add_subcommand("demo", "generate demo path data");
    demo->add_option("name", demoName, "heart, cube or staircase")->required();
    demo->add_option("--outdir", outdir, "output directory")->default_val(".");

    CLI::App* analyze = app.add_subcommand("analyze", "run guarantee checks");
    analyze->add_option("--input", opts.input, "waypoint JSON file");
    analyze->add_option("--demo", analyzeDemo, "heart, staircase or example2");
    analyze->add_option("--epsilon", opts.epsilons, "mollification epsilon(s)");
    analyze->add_option("--kappa-max", opts.kappaMax, "curvature budget (1/m)");
    analyze->add_option("--speed", opts.speed, "v rMin rMax vMax")->expected(4);
    analyze->add_option("-o,--output", opts.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (smooth->parsed()) return runSmooth(opts);
        if (plan->parsed()) return runPlan(opts, epsMin, refine);
        if (demo->parsed()) return runDemo(demoName, outdir);
        if (analyze->parsed()) {
            if (analyzeDemo.empty() && opts.input.empty())
                throw std::invalid_argument("analyze needs --input or --demo");
            return runAnalyze(opts, analyzeDemo);
        }
    } catch (const mp::QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitOk;
}
