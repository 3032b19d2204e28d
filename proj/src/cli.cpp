#include "slideocam/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slideocam/analysis.hpp"
#include "slideocam/cam_core.hpp"
#include "slideocam/errors.hpp"
#include "slideocam/export_io.hpp"
#include "slideocam/feasibility.hpp"
#include "slideocam/geometry.hpp"

namespace slideocam::cli {

namespace {

struct CommonOptions {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string svg;
    std::string csv;
    int samples = 0;
    bool require_convex = false;
};

struct SweepOptions {
    std::string param;
    std::vector<double> values;
};

class OutputError : public Error {
  public:
    explicit OutputError(const std::string& what) : Error("cli", what, false) {}
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool files = true) {
    cmd->add_option("--config", opts.config_path, "YAML design configuration")->check(CLI::ExistingFile);
    cmd->add_option("--set", opts.overrides, "Override a config key, key=value (repeatable)")
        ->allow_extra_args(false);
    if (files) {
        cmd->add_option("--svg", opts.svg, "Write SVG output to this path");
        cmd->add_option("--csv", opts.csv, "Write CSV output to this path");
    }
    cmd->add_option("--samples", opts.samples, "Samples per lobe (default 720)");
    cmd->add_flag("--require-convex", opts.require_convex, "Treat a non-convex design as infeasible");
}

io::DesignConfig load_config(const CommonOptions& opts) {
    std::string text;
    if (opts.config_path.empty()) {
        text = io::baseline_config();
    } else {
        std::ifstream in(opts.config_path, std::ios::binary);
        if (!in) throw OutputError("cannot read config file " + opts.config_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    io::DesignConfig cfg = io::parse_config(text, opts.overrides);
    if (opts.samples != 0) {
        if (opts.samples < 16) throw ValidationError("cli", "--samples", "must be at least 16");
        cfg.generation.samples = opts.samples;
    }
    if (!opts.svg.empty()) cfg.output.svg = opts.svg;
    if (!opts.csv.empty()) cfg.output.csv = opts.csv;
    cfg.require_convex = cfg.require_convex || opts.require_convex;
    return cfg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw OutputError("cannot open " + path + " for writing");
    file << content;
    if (!file) throw OutputError("failed writing " + path);
}

std::string deg(double rad) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << to_degrees(rad) << " deg";
    return s.str();
}

void print_params(std::ostream& out, const DesignParams& p) {
    out << "design: p=" << p.p << " mm, n=" << p.n << ", m=" << p.m << ", e=" << p.e
        << " mm (eta=" << std::setprecision(6) << p.eta() << "), a4=" << p.a4 << " mm, b=" << p.b << " mm\n";
}

void print_feasibility(std::ostream& out, const feasibility::FeasibilityReport& r) {
    const auto line = [&](const char* name, const char* rule, const feasibility::ConstraintCheck& c) {
        out << "  " << std::left << std::setw(16) << name << (c.ok ? "ok  " : "FAIL") << "  " << rule
            << "  margin " << c.margin << '\n';
    };
    out << "feasibility: " << (r.feasible ? "feasible" : "INFEASIBLE") << '\n';
    line("roller spacing", "a4 < p/(2n)", r.roller_spacing);
    line("shaft clearance", "a4 <= eta p - b", r.shaft_clearance);
    line("eta lower bound", "eta > 1/(2 pi)", r.eta_lower);
    line("convexity", "eta >= 1/pi", r.convexity);
    if (r.shaft_contact) out << "  note: a4 = eta p - b, cam and shaft touch (one-block machining)\n";
}

void print_pressure(std::ostream& out, const DesignParams& params, double delta) {
    const auto interval = analysis::active_interval(params, delta);
    const auto mx = analysis::max_pressure_angle(params, delta);
    out << "active interval: [" << interval.psi_lo << ", " << interval.psi_hi << "] rad, length "
        << interval.length() << " rad" << (interval.extrapolated ? " (extrapolated for m >= 4)" : "") << '\n';
    out << "max |mu|: " << deg(mx.mu_abs) << ", tan mu = " << mx.tan_mu << " at psi = " << mx.psi << " rad\n";
    if (mx.single_cam) out << "warning: single cam reaches the 90 deg pole; use at least two conjugate cams\n";
    if (mx.exceeds_guideline) out << "warning: max |mu| exceeds the 30 deg high-speed guideline\n";
    if (params.n >= 2) {
        const auto loss = analysis::contact_loss_check(params, delta);
        if (loss.exceeds_everywhere) {
            out << "warning: |mu| exceeds 20 deg over the whole active interval (contact loss)\n";
        } else if (loss.exceeds) {
            out << "warning: |mu| exceeds 20 deg (contact loss) for psi below " << *loss.crossing_psi << " rad\n";
        }
    }
}

void print_delta(std::ostream& out, const geometry::ExtendedAngle& d) {
    out << "extended angle: delta = " << std::setprecision(17) << d.delta << " rad (" << std::setprecision(6)
        << deg(d.delta) << "), residual " << d.residual << " mm, " << d.iterations << " iterations\n";
}

io::ProfileDocument make_document(const io::DesignConfig& cfg, const geometry::ExtendedAngle& delta) {
    io::ProfileDocument doc;
    doc.params = cfg.params;
    doc.delta = delta;
    doc.feasibility = feasibility::check_feasibility(cfg.params);
    return doc;
}

int cmd_profile(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    const io::DesignConfig cfg = load_config(opts);
    const auto delta = geometry::solve_extended_angle(cfg.params, cfg.generation.solver);
    io::ProfileDocument doc = make_document(cfg, delta);
    doc.assembly = geometry::generate_assembly(cfg.params, delta.delta, cfg.generation);
    const bool convex = geometry::is_convex_polyline(doc.assembly.cams.front());

    print_params(out, cfg.params);
    print_delta(out, delta);
    print_feasibility(out, doc.feasibility);
    out << "profile: " << doc.assembly.cams.size() << " cam(s), " << doc.assembly.cams.front().size()
        << " points each, geometrically " << (convex ? "convex" : "not convex") << '\n';
    print_pressure(out, cfg.params, delta.delta);

    if (cfg.output.svg) {
        io::SvgOptions svg;
        if (cfg.output.pitch_overlay) {
            svg.pitch_overlay = geometry::generate_pitch_assembly(cfg.params, delta.delta, cfg.generation);
        }
        write_file(*cfg.output.svg, io::write_profile_svg(doc, svg));
    }
    if (cfg.output.csv) write_file(*cfg.output.csv, io::write_profile_csv(doc));

    if (cfg.require_convex && !convex) {
        err << "profile: profile is not convex and --require-convex is set\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int cmd_pitch(const CommonOptions& opts, std::ostream& out) {
    const io::DesignConfig cfg = load_config(opts);
    const auto delta = geometry::solve_extended_angle(cfg.params, cfg.generation.solver);
    io::ProfileDocument doc = make_document(cfg, delta);
    doc.assembly = geometry::generate_pitch_assembly(cfg.params, delta.delta, cfg.generation);

    print_params(out, cfg.params);
    print_delta(out, delta);
    out << "pitch curve: " << doc.assembly.cams.size() << " cam(s), " << doc.assembly.cams.front().size()
        << " points each\n";
    if (cfg.output.svg) {
        io::ProfileDocument outline = doc;
        outline.assembly.cams.clear();
        write_file(*cfg.output.svg, io::write_profile_svg(outline, {doc.assembly}));
    }
    if (cfg.output.csv) write_file(*cfg.output.csv, io::write_profile_csv(doc));
    return kExitOk;
}

int cmd_pressure(const CommonOptions& opts, std::ostream& out) {
    const io::DesignConfig cfg = load_config(opts);
    const auto delta = geometry::solve_extended_angle(cfg.params, cfg.generation.solver);
    const auto interval = analysis::active_interval(cfg.params, delta.delta);
    const auto profile = analysis::pressure_profile(cfg.params, interval, cfg.generation.samples);

    print_params(out, cfg.params);
    print_delta(out, delta);
    print_pressure(out, cfg.params, delta.delta);
    if (cfg.output.csv) write_file(*cfg.output.csv, io::write_pressure_csv(cfg.params, profile));
    return kExitOk;
}

int cmd_feasibility(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    const io::DesignConfig cfg = load_config(opts);
    const auto report = feasibility::check_feasibility(cfg.params);
    print_params(out, cfg.params);
    print_feasibility(out, report);
    if (report.eta_lower.ok) {
        const auto terms = feasibility::constraint_terms(cfg.params);
        out << "contact-side terms: A = " << terms.a << " mm, B = " << terms.b << '\n';
    }

    if (!report.roller_spacing.ok) {
        err << "feasibility: roller spacing violated, a4 < p/(2n) requires a4 < "
            << cfg.params.p / (2.0 * cfg.params.n) << " mm (a4 = " << cfg.params.a4 << ")\n";
    }
    if (!report.shaft_clearance.ok) {
        err << "feasibility: shaft clearance violated, a4 <= eta p - b requires a4 <= "
            << cfg.params.e - cfg.params.b << " mm (a4 = " << cfg.params.a4 << ")\n";
    }
    if (!report.eta_lower.ok) {
        err << "feasibility: eta lower bound violated, eta > 1/(2 pi) = " << 1.0 / kTwoPi
            << " (eta = " << cfg.params.eta() << ")\n";
    }
    if (cfg.require_convex && !report.convexity.ok) {
        err << "feasibility: convexity required, eta >= 1/pi = " << 1.0 / kPi << " (eta = " << cfg.params.eta()
            << ")\n";
        return kExitInvalid;
    }
    return report.feasible ? kExitOk : kExitInvalid;
}

int cmd_region(const CommonOptions& opts, std::ostream& out) {
    const io::DesignConfig cfg = load_config(opts);
    const auto& p = cfg.params;
    const auto raster = feasibility::rasterize_region(p.p, p.b, p.n, cfg.region);
    std::size_t feasible = 0;
    for (const auto c : raster.cells) feasible += c;

    out << "region: p=" << p.p << " mm, b=" << p.b << " mm, n=" << p.n << ", " << raster.eta_axis.size() << "x"
        << raster.a4_axis.size() << " cells, " << feasible << " feasible\n";
    out << "max feasible a4 (raster): ";
    if (raster.max_feasible_a4) out << *raster.max_feasible_a4 << " mm\n";
    else out << "none\n";
    out << "max feasible a4 at eta = " << cfg.region.eta.hi << " by lobe count:\n";
    for (int n = 1; n <= 4; ++n) {
        const auto bound = feasibility::max_feasible_a4(p.p, p.b, n, cfg.region.eta.hi);
        out << "  n=" << n << ": ";
        if (bound) out << bound->value << " mm" << (bound->open ? " (exclusive)" : "") << '\n';
        else out << "none\n";
    }
    if (cfg.output.csv) write_file(*cfg.output.csv, io::write_raster_csv(raster));
    if (cfg.output.svg) write_file(*cfg.output.svg, io::write_raster_svg(raster));
    return kExitOk;
}

int cmd_sweep(const CommonOptions& opts, const SweepOptions& sweep_opts, std::ostream& out) {
    const io::DesignConfig cfg = load_config(opts);
    const auto parameter = analysis::parse_sweep_parameter(sweep_opts.param);
    if (!parameter) {
        throw ValidationError("cli", "--param", "unknown parameter '" + sweep_opts.param +
                                                     "' (expected eta, e, a4, n, m, p or b)");
    }
    const auto result = analysis::sweep(cfg.params, *parameter, sweep_opts.values, cfg.generation.solver);

    print_params(out, cfg.params);
    out << "sweep over " << sweep_opts.param << ":\n";
    out << "  " << std::setw(12) << sweep_opts.param << std::setw(14) << "delta[rad]" << std::setw(14)
        << "max|mu|[deg]" << std::setw(14) << "tan mu" << "  flags\n";
    for (const auto& pt : result.points) {
        out << "  " << std::setw(12) << pt.value;
        if (pt.delta) out << std::setw(14) << *pt.delta;
        else out << std::setw(14) << "-";
        if (pt.max_mu) out << std::setw(14) << to_degrees(pt.max_mu->mu_abs) << std::setw(14) << pt.max_mu->tan_mu;
        else out << std::setw(14) << "-" << std::setw(14) << "-";
        out << "  " << analysis::describe_flags(pt.flags) << '\n';
    }
    if (cfg.output.csv) write_file(*cfg.output.csv, io::write_sweep_csv(result));
    return kExitOk;
}

int cmd_delta(const CommonOptions& opts, std::ostream& out) {
    const io::DesignConfig cfg = load_config(opts);
    const auto delta = geometry::solve_extended_angle(cfg.params, cfg.generation.solver);
    print_params(out, cfg.params);
    print_delta(out, delta);
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Slide-o-Cam profile synthesis and pressure-angle analysis", "slideocam"};
    app.require_subcommand(1);

    CommonOptions opts;
    SweepOptions sweep_opts;
    auto* profile = app.add_subcommand("profile", "Generate the conjugate cam profiles");
    auto* pitch = app.add_subcommand("pitch", "Generate the pitch curves");
    auto* pressure = app.add_subcommand("pressure", "Pressure angle over the active interval");
    auto* feas = app.add_subcommand("feasibility", "Check the design constraints");
    auto* region = app.add_subcommand("region", "Rasterise the feasible (eta, a4) region");
    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and tabulate max |mu|");
    auto* delta = app.add_subcommand("delta", "Solve for the extended angle only");
    for (auto* cmd : {profile, pitch, pressure, feas, region, sweep, delta}) add_common(cmd, opts, cmd != delta);
    sweep->add_option("--param", sweep_opts.param, "eta, e, a4, n, m, p or b")->required();
    sweep->add_option("--values", sweep_opts.values, "Comma-separated values")->required()->delimiter(',');

    std::ostringstream cli_out;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    const auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    out << std::setprecision(10);
    try {
        if (cmd == profile) return cmd_profile(opts, out, err);
        if (cmd == pitch) return cmd_pitch(opts, out);
        if (cmd == pressure) return cmd_pressure(opts, out);
        if (cmd == feas) return cmd_feasibility(opts, out, err);
        if (cmd == region) return cmd_region(opts, out);
        if (cmd == sweep) return cmd_sweep(opts, sweep_opts, out);
        return cmd_delta(opts, out);
    } catch (const Error& e) {
        err << name << ": " << e.module() << " error: " << e.what() << '\n';
        return e.solver_failure() ? kExitSolver : kExitInvalid;
    } catch (const std::exception& e) {
        err << name << ": error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

}  // namespace slideocam::cli
