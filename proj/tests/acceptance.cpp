// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. argv[1] is the path of the slideocam executable.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "slideocam/analysis.hpp"
#include "slideocam/cam_core.hpp"
#include "slideocam/export_io.hpp"
#include "slideocam/feasibility.hpp"
#include "slideocam/geometry.hpp"
#include "support.hpp"

using namespace slideocam;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

struct Criterion {
    int id;
    const char* title;
    double budget_s;  ///< 0 = no runtime bound
    std::function<Outcome()> body;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Golden extended angles at p = 50, e = 9, frozen with 30-digit arithmetic.
struct Golden {
    int n;
    double a4;
    double delta;
};
constexpr Golden kGolden[] = {
    {1, 4.0, -1.2943095311128857689},  {1, 10.0, -1.2336460137724935063}, {1, 25.0, -0.16122203411019275069},
    {2, 4.0, -1.0988654906087582495},  {3, 4.0, -0.93175928510729385446}, {4, 4.0, -0.76889758351847249336},
    {5, 4.0, -0.58536111268193272075}, {2, 10.0, -0.81819012005168724731},
};

Outcome contact_distance() {
    Outcome o;
    oracle::DesignGenerator gen(20240601);
    double worst = 0.0;
    for (int c = 0; c < 20; ++c) {
        const auto d = to_params(gen.next());
        o.require(feasibility::check_feasibility(d).feasible, "generator produced an infeasible design");
        const double delta = geometry::solve_extended_angle(d).delta;
        const double lo = delta, hi = kTwoPi / d.n - delta;
        for (int lobe = 0; lobe < d.n; ++lobe) {
            for (int i = 0; i < 10000; ++i) {
                const double psi = gen.uniform(lo, hi);
                const double err = std::abs(distance(cam::cam_profile_point(d, psi), cam::pitch_point(d, psi)) - d.a4);
                worst = std::max(worst, err / d.p);
            }
        }
    }
    o.require(worst <= 1e-9, "max |dist - a4| / p = " + fmt(worst));
    if (o.pass) o.detail = "max |dist - a4| / p = " + fmt(worst);
    return o;
}

Outcome closure_symmetry() {
    Outcome o;
    double worst_closure = 0.0, worst_sym = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const auto d = make_params(50, n, 2, 9, 4);
        const auto cam = geometry::generate_cam(d);
        worst_closure = std::max(worst_closure, distance(cam.points.front(), cam.points.back()));
        const auto turned = geometry::rotated(cam, -kTwoPi / n);
        const std::size_t period = cam.size() - 1;
        const std::size_t shift = period / n;
        for (std::size_t i = 0; i < period; ++i) {
            worst_sym = std::max(worst_sym, distance(turned.points[i], cam.points[(i + shift) % period]));
        }
    }
    o.require(worst_closure <= 1e-6, "closure gap " + fmt(worst_closure));
    o.require(worst_sym <= 1e-6, "symmetry gap " + fmt(worst_sym));
    if (o.pass) o.detail = "closure " + fmt(worst_closure) + " mm, symmetry " + fmt(worst_sym) + " mm";
    return o;
}

Outcome extended_angle() {
    Outcome o;
    double worst_res = 0.0, worst_gold = 0.0;
    for (const auto& g : kGolden) {
        const auto r = geometry::solve_extended_angle(make_params(50, g.n, 2, 9, g.a4));
        o.require(r.delta < 0, "non-negative delta");
        worst_res = std::max(worst_res, std::abs(r.residual));
        worst_gold = std::max(worst_gold, std::abs(r.delta - g.delta));
    }
    o.require(worst_res <= 1e-10, "residual " + fmt(worst_res));
    o.require(worst_gold <= 1e-10, "golden mismatch " + fmt(worst_gold));
    double previous = kPi;
    for (const double a4 : {4.0, 10.0, 25.0}) {
        const double mag = std::abs(geometry::solve_extended_angle(make_params(50, 1, 2, 9, a4)).delta);
        o.require(mag < previous, "|delta| not decreasing at a4 = " + fmt(a4));
        previous = mag;
    }
    if (o.pass) o.detail = "residual <= " + fmt(worst_res) + " mm, golden within " + fmt(worst_gold) + " rad";
    return o;
}

Outcome active_intervals() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        const double delta = geometry::solve_extended_angle(make_params(50, n, 2, 9, 4)).delta;
        auto d = make_params(50, n, 1, 9, 4);
        const auto i1 = analysis::active_interval(d, delta);
        o.require(i1.psi_lo == kPi / n && i1.psi_hi == kTwoPi / n - delta, "m=1 closed form");
        d.m = 2;
        const auto i2 = analysis::active_interval(d, delta);
        o.require(i2.psi_lo == kPi / n - delta && i2.psi_hi == kTwoPi / n - delta, "m=2 closed form");
        d.m = 3;
        const auto i3 = analysis::active_interval(d, delta);
        o.require(i3.psi_lo == 4 * kPi / (3 * n) - delta && i3.psi_hi == kTwoPi / n - delta, "m=3 closed form");
        const double ratio = i3.length() / i2.length();
        o.require(std::abs(ratio - 2.0 / 3.0) <= 4 * std::numeric_limits<double>::epsilon(),
                  "m=3/m=2 length ratio " + fmt(ratio));
    }
    if (o.pass) o.detail = "n = 1..5, ratio 2/3 within 4 ulp";
    return o;
}

Outcome pressure_limits() {
    Outcome o;
    oracle::DesignGenerator gen(777);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto d = to_params(gen.next());
        const double psi = gen.uniform(-kPi / d.n, 3 * kPi / d.n);
        const double a = cam::tan_pressure_angle(d, psi);
        const double b = cam::tan_pressure_angle_from_motion(d, psi);
        worst = std::max(worst, std::abs(a - b) / std::abs(b));
    }
    o.require(worst <= 1e-12, "form mismatch " + fmt(worst));
    for (const int n : {1, 2, 3}) {
        const auto d = make_params(50, n, 2, 20, 4);
        for (const int side : {-1, 1}) {
            const double far = std::abs(cam::pressure_angle(d, kPi / n + side * 1e-3));
            const double near = std::abs(cam::pressure_angle(d, kPi / n + side * 1e-6));
            o.require(far < near && near < kPi / 2, "no monotone approach on side " + std::to_string(side));
            o.require(kPi / 2 - near < 1e-5, "1e-6 offset still " + fmt(to_degrees(near)) + " deg");
        }
    }
    if (o.pass) o.detail = "relative mismatch " + fmt(worst) + ", |mu| -> 90 deg from both sides";
    return o;
}

double max_mu(double eta, double a4, int n, int m) {
    return analysis::max_pressure_angle(make_params(50, n, m, eta * 50, a4)).mu_abs;
}

Outcome monotonicity() {
    Outcome o;
    double previous = -1;
    std::string trace;
    for (const double eta : {1 / kPi, 0.4, 0.8, 1.0, 1.5, 2.0, 5.0}) {
        const double mu = max_mu(eta, 10, 1, 2);
        o.require(mu > previous, "eta sweep not increasing at " + fmt(eta));
        previous = mu;
        trace += fmt(to_degrees(mu)) + " ";
    }
    const double eta = 9.0 / 50;
    o.require(max_mu(eta, 10, 1, 2) < max_mu(eta, 25, 1, 2), "a4 10 -> 25 not increasing");
    o.require(max_mu(eta, 10, 1, 2) < max_mu(eta, 10, 2, 2), "n 1 -> 2 not increasing");
    o.require(max_mu(eta, 10, 1, 3) < max_mu(eta, 10, 1, 2), "m 2 -> 3 not decreasing");
    if (o.pass) o.detail = "eta sweep deg: " + trace;
    return o;
}

Outcome convexity() {
    Outcome o;
    for (const double eta : {1 / kPi, 0.4, 0.5}) {
        o.require(geometry::is_convex_polyline(geometry::generate_cam(make_params(50, 1, 2, eta * 50, 4))),
                  "not convex at eta " + fmt(eta));
    }
    for (const double eta : {0.18, 0.25}) {
        const auto d = make_params(50, 1, 2, eta * 50, 4);
        const double delta = geometry::solve_extended_angle(d).delta;
        bool pos = false, neg = false;
        for (int i = 0; i <= 2000; ++i) {
            const double psi = delta + (kTwoPi - 2 * delta) * i / 2000.0;
            const double num = cam::curvature_pitch_numerator(d, psi);
            pos = pos || num > 0;
            neg = neg || num < 0;
        }
        o.require(pos && neg, "numerator keeps one sign at eta " + fmt(eta));
    }
    double worst = 0.0;
    for (const double eta : {0.18, 0.25, 1 / kPi, 0.4, 0.5}) {
        for (const int n : {1, 2, 3}) {
            const auto d = make_params(50, n, 2, eta * 50, 4);
            const auto g = to_design(d);
            const auto curve = [&](double t) { return oracle::pitch(g, t); };
            for (int i = 0; i <= 400; ++i) {
                const double psi = -kPi / n + 3 * kPi / n * i / 400.0;
                const double lever = n * psi - kPi;
                const double scale = lever * lever + n * n * std::pow(kTwoPi * eta - 1, 2);
                if (std::abs(cam::curvature_pitch_numerator(d, psi)) < 1e-2 * scale) continue;
                const double closed = cam::curvature_pitch(d, psi);
                worst = std::max(worst, std::abs(closed - oracle::curvature_fd(curve, psi)) / std::abs(closed));
            }
        }
    }
    o.require(worst <= 1e-6, "curvature relative error " + fmt(worst));
    if (o.pass) o.detail = "curvature relative error " + fmt(worst);
    return o;
}

Outcome region() {
    Outcome o;
    double previous = 1e300;
    std::size_t cells = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto r = feasibility::rasterize_region(50, 4.25, n, feasibility::default_region(50));
        o.require(r.eta_axis.size() == 200 && r.a4_axis.size() == 200, "raster is not 200x200");
        o.require(r.max_feasible_a4.has_value(), "empty raster");
        if (r.max_feasible_a4) {
            o.require(*r.max_feasible_a4 <= previous, "max a4 increases at n = " + std::to_string(n));
            previous = *r.max_feasible_a4;
        }
        for (std::size_t i = 0; i < r.a4_axis.size(); ++i) {
            for (std::size_t j = 0; j < r.eta_axis.size(); ++j) {
                const double eta = r.eta_axis[j], a4 = r.a4_axis[i];
                const bool checker = feasibility::check_feasibility(make_params(50, n, 2, eta * 50, a4)).feasible;
                o.require(r.feasible(i, j) == checker, "cell disagrees with checker");
                if (eta <= 1 / kTwoPi) o.require(!r.feasible(i, j), "feasible cell below eta = 1/(2 pi)");
                ++cells;
            }
        }
    }
    if (o.pass) o.detail = std::to_string(cells) + " cells checked";
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome round_trip(const std::string& exe) {
    Outcome o;
    io::ProfileDocument doc;
    doc.params = DesignParams{};
    doc.delta = geometry::solve_extended_angle(doc.params);
    doc.feasibility = feasibility::check_feasibility(doc.params);
    doc.assembly = geometry::generate_assembly(doc.params, doc.delta.delta);
    const auto rows = io::read_profile_csv(io::write_profile_csv(doc));
    std::size_t r = 0;
    bool bits = true;
    for (const auto& cam : doc.assembly.cams) {
        for (std::size_t i = 0; i < cam.size(); ++i, ++r) {
            bits = bits && r < rows.size() && std::memcmp(&rows[r].u, &cam.points[i].x, sizeof(double)) == 0 &&
                   std::memcmp(&rows[r].v, &cam.points[i].y, sizeof(double)) == 0 &&
                   std::memcmp(&rows[r].psi, &cam.psi[i], sizeof(double)) == 0;
        }
    }
    o.require(bits && r == rows.size(), "CSV re-parse is not bit-identical");

    if (exe.empty()) {
        o.require(false, "no CLI path given");
        return o;
    }
    const auto dir = std::filesystem::temp_directory_path() / "slideocam_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (const char* tag : {"a", "b"}) {
        const std::string cmd = exe + " profile --svg " + (dir / (std::string(tag) + ".svg")).string() + " --csv " +
                                (dir / (std::string(tag) + ".csv")).string() + " > " +
                                (dir / (std::string(tag) + ".txt")).string();
        const int status = std::system(cmd.c_str());
        o.require(status != -1 && WEXITSTATUS(status) == 0, "CLI run failed");
    }
    for (const char* ext : {".svg", ".csv", ".txt"}) {
        const std::string a = slurp(dir / (std::string("a") + ext));
        o.require(!a.empty() && a == slurp(dir / (std::string("b") + ext)), std::string("CLI output differs: ") + ext);
    }
    std::filesystem::remove_all(dir);
    if (o.pass) o.detail = std::to_string(rows.size()) + " rows bit-identical, CLI outputs byte-identical";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string exe = argc > 1 ? argv[1] : "";
    const std::vector<Criterion> criteria = {
        {1, "contact-distance identity", 1.0, contact_distance},
        {2, "closure and lobe symmetry", 1.0, closure_symmetry},
        {3, "extended-angle certificate", 0.0, extended_angle},
        {4, "active intervals", 0.0, active_intervals},
        {5, "pressure-angle equivalence and pole limit", 0.0, pressure_limits},
        {6, "monotonicity of max pressure angle", 1.0, monotonicity},
        {7, "convexity and pitch curvature", 0.0, convexity},
        {8, "feasibility region raster", 2.0, region},
        {9, "round trip and determinism", 0.0, [&] { return round_trip(exe); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && seconds >= c.budget_s) {
            o.require(false, "runtime " + fmt(seconds) + " s over budget " + fmt(c.budget_s) + " s");
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << o.detail
                  << "; " << fmt(seconds) << " s)\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed;
}
