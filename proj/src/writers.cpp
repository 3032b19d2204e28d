#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "slideocam/errors.hpp"
#include "slideocam/export_io.hpp"

namespace slideocam::io {

namespace {

constexpr const char* kModule = "export-io";

std::string format_fixed(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
    std::string out(buf, res.ptr);
    if (out == "-0.000000") out = "0.000000";
    return out;
}

const char* flag(bool ok) { return ok ? "1" : "0"; }

struct Bounds {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void add(double x, double y) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
};

// SVG y grows downwards; v is negated so the drawing reads like the u-v plane.
void add_bounds(Bounds& box, const geometry::CamAssembly& assembly) {
    for (const auto& cam : assembly.cams)
        for (const auto& pt : cam.points) box.add(pt.x, -pt.y);
}

std::string path_data(const geometry::CamProfile& profile) {
    std::string d;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const bool new_run = i == 0 || (!profile.closed && profile.lobe_index[i] != profile.lobe_index[i - 1]);
        if (i > 0) d += ' ';
        d += new_run ? 'M' : 'L';
        d += format_fixed(profile.points[i].x);
        d += ',';
        d += format_fixed(-profile.points[i].y);
    }
    if (profile.closed) d += " Z";
    return d;
}

void header_comment(std::ostringstream& out, const std::string& header) {
    out << "<!--\n" << header << "-->\n";
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string document_header(const DesignParams& params, const geometry::ExtendedAngle& delta,
                            const feasibility::FeasibilityReport& feas) {
    std::ostringstream out;
    out << "# " << kToolVersion << '\n';
    out << "# params: p=" << format_double(params.p) << " n=" << params.n << " m=" << params.m
        << " e=" << format_double(params.e) << " eta=" << format_double(params.eta())
        << " a4=" << format_double(params.a4) << " b=" << format_double(params.b) << '\n';
    out << "# extended_angle: delta=" << format_double(delta.delta)
        << " residual=" << format_double(delta.residual) << " iterations=" << delta.iterations << '\n';
    out << "# feasibility: feasible=" << flag(feas.feasible)
        << " roller_spacing=" << flag(feas.roller_spacing.ok) << " (" << format_double(feas.roller_spacing.margin) << ")"
        << " shaft_clearance=" << flag(feas.shaft_clearance.ok) << " (" << format_double(feas.shaft_clearance.margin) << ")"
        << " eta_lower=" << flag(feas.eta_lower.ok) << " (" << format_double(feas.eta_lower.margin) << ")"
        << " convexity=" << flag(feas.convexity.ok) << " (" << format_double(feas.convexity.margin) << ")\n";
    return out.str();
}

std::string write_profile_csv(const ProfileDocument& doc) {
    std::ostringstream out;
    out << document_header(doc.params, doc.delta, doc.feasibility);
    out << "cam_index,lobe_index,psi,u,v\n";
    for (std::size_t c = 0; c < doc.assembly.cams.size(); ++c) {
        const auto& cam = doc.assembly.cams[c];
        for (std::size_t i = 0; i < cam.size(); ++i) {
            out << c << ',' << cam.lobe_index[i] << ',' << format_double(cam.psi[i]) << ','
                << format_double(cam.points[i].x) << ',' << format_double(cam.points[i].y) << '\n';
        }
    }
    return out.str();
}

std::vector<ProfileRow> read_profile_csv(std::string_view text) {
    std::vector<ProfileRow> rows;
    int line_no = 0;
    bool seen_header = false;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        if (!seen_header) {
            if (line != "cam_index,lobe_index,psi,u,v") {
                throw ParseError(kModule, line_no, 1, "expected the profile column header");
            }
            seen_header = true;
            continue;
        }

        std::string_view fields[5];
        std::size_t count = 0;
        std::size_t start = 0;
        while (count < 5) {
            const auto comma = line.find(',', start);
            fields[count++] = line.substr(start, comma - start);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (count != 5 || line.find(',', start) != std::string_view::npos) {
            throw ParseError(kModule, line_no, 1, "expected 5 fields");
        }

        const auto parse = [&](std::string_view field, auto& value, int column) {
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (ec != std::errc{} || ptr != field.data() + field.size()) {
                throw ParseError(kModule, line_no, column, "malformed value '" + std::string(field) + "'");
            }
        };
        ProfileRow row{};
        parse(fields[0], row.cam_index, 1);
        parse(fields[1], row.lobe_index, 2);
        parse(fields[2], row.psi, 3);
        parse(fields[3], row.u, 4);
        parse(fields[4], row.v, 5);
        rows.push_back(row);
    }
    return rows;
}

std::string write_profile_svg(const ProfileDocument& doc, const SvgOptions& options) {
    Bounds box;
    add_bounds(box, doc.assembly);
    if (options.pitch_overlay) add_bounds(box, *options.pitch_overlay);
    if (!std::isfinite(box.min_x)) box = Bounds{-1.0, -1.0, 1.0, 1.0};

    const double span = std::max(box.max_x - box.min_x, box.max_y - box.min_y);
    const double margin = 0.05 * span;
    const double x0 = box.min_x - margin;
    const double y0 = box.min_y - margin;
    const double w = box.max_x - box.min_x + 2.0 * margin;
    const double h = box.max_y - box.min_y + 2.0 * margin;
    const std::string stroke = format_fixed(span / 400.0);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    header_comment(out, document_header(doc.params, doc.delta, doc.feasibility));
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_fixed(w)
        << "mm\" height=\"" << format_fixed(h) << "mm\" viewBox=\"" << format_fixed(x0) << ' '
        << format_fixed(y0) << ' ' << format_fixed(w) << ' ' << format_fixed(h) << "\">\n";
    if (options.pitch_overlay) {
        for (const auto& curve : options.pitch_overlay->cams) {
            out << "<path fill=\"none\" stroke=\"blue\" stroke-width=\"" << stroke << "\" d=\""
                << path_data(curve) << "\"/>\n";
        }
    }
    for (const auto& cam : doc.assembly.cams) {
        out << "<path fill=\"none\" stroke=\"red\" stroke-width=\"" << stroke << "\" d=\"" << path_data(cam)
            << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string write_raster_csv(const feasibility::RegionRaster& raster) {
    std::ostringstream out;
    out << "# " << kToolVersion << '\n';
    out << "# region: p=" << format_double(raster.p) << " b=" << format_double(raster.b) << " n=" << raster.n
        << '\n';
    out << "a4\\eta";
    for (const double eta : raster.eta_axis) out << ',' << format_double(eta);
    out << '\n';
    for (std::size_t i = 0; i < raster.a4_axis.size(); ++i) {
        out << format_double(raster.a4_axis[i]);
        for (std::size_t j = 0; j < raster.eta_axis.size(); ++j) out << ',' << (raster.feasible(i, j) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

std::string write_raster_svg(const feasibility::RegionRaster& raster) {
    // Unit square scaled to 100 x 100 user units; eta grows right, a4 grows up.
    constexpr double size = 100.0;
    const std::size_t cols = raster.eta_axis.size();
    const std::size_t rows = raster.a4_axis.size();
    const double cw = size / static_cast<double>(cols);
    const double ch = size / static_cast<double>(rows);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!--\n# " << kToolVersion << "\n# region: p=" << format_double(raster.p)
        << " b=" << format_double(raster.b) << " n=" << raster.n << "\n# eta " << format_double(raster.eta_axis.front())
        << " .. " << format_double(raster.eta_axis.back()) << ", a4 " << format_double(raster.a4_axis.front())
        << " .. " << format_double(raster.a4_axis.back()) << " (cell centres)\n-->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"100mm\" height=\"100mm\" "
           "viewBox=\"0 0 100 100\">\n";
    out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"0.2\" d=\"M0,0 H100 V100 H0 Z\"/>\n";
    for (std::size_t i = 0; i < rows; ++i) {
        std::string d;
        const double y_top = size - static_cast<double>(i + 1) * ch;
        for (std::size_t j = 0; j < cols;) {
            if (!raster.feasible(i, j)) {
                ++j;
                continue;
            }
            std::size_t k = j;
            while (k < cols && raster.feasible(i, k)) ++k;
            if (!d.empty()) d += ' ';
            d += "M" + format_fixed(static_cast<double>(j) * cw) + "," + format_fixed(y_top) + " H" +
                 format_fixed(static_cast<double>(k) * cw) + " V" + format_fixed(y_top + ch) + " H" +
                 format_fixed(static_cast<double>(j) * cw) + " Z";
            j = k;
        }
        if (!d.empty()) out << "<path fill=\"green\" stroke=\"none\" d=\"" << d << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string write_sweep_csv(const analysis::SweepResult& result) {
    std::ostringstream out;
    out << "# " << kToolVersion << '\n';
    if (!result.points.empty()) {
        const DesignParams& base = result.points.front().params;
        out << "# base: p=" << format_double(base.p) << " n=" << base.n << " m=" << base.m
            << " e=" << format_double(base.e) << " a4=" << format_double(base.a4)
            << " b=" << format_double(base.b) << '\n';
    }
    out << "# swept: " << analysis::sweep_parameter_name(result.parameter) << " ["
        << analysis::sweep_parameter_unit(result.parameter) << "]\n";
    out << analysis::sweep_parameter_name(result.parameter)
        << ",feasible,delta,psi_lo,psi_hi,interval_length,max_abs_mu_deg,tan_mu,flags\n";
    for (const auto& pt : result.points) {
        out << format_double(pt.value) << ',' << flag(pt.feasible) << ',';
        out << (pt.delta ? format_double(*pt.delta) : "") << ',';
        if (pt.interval) {
            out << format_double(pt.interval->psi_lo) << ',' << format_double(pt.interval->psi_hi) << ','
                << format_double(pt.interval->length()) << ',';
        } else {
            out << ",,,";
        }
        if (pt.max_mu) {
            out << format_double(to_degrees(pt.max_mu->mu_abs)) << ',' << format_double(pt.max_mu->tan_mu) << ',';
        } else {
            out << ",,";
        }
        out << analysis::describe_flags(pt.flags) << '\n';
    }
    return out.str();
}

std::string write_pressure_csv(const DesignParams& params, const analysis::PressureProfile& profile) {
    std::ostringstream out;
    out << "# " << kToolVersion << '\n';
    out << "# params: p=" << format_double(params.p) << " n=" << params.n << " m=" << params.m
        << " e=" << format_double(params.e) << " a4=" << format_double(params.a4)
        << " b=" << format_double(params.b) << '\n';
    out << "psi,psi_deg,mu_deg,tan_mu,is_max\n";
    for (std::size_t i = 0; i < profile.samples.size(); ++i) {
        const auto& s = profile.samples[i];
        out << format_double(s.psi) << ',' << format_double(to_degrees(s.psi)) << ','
            << format_double(to_degrees(s.mu)) << ',' << format_double(s.tan_mu) << ','
            << (i == profile.max_index ? '1' : '0') << '\n';
    }
    return out.str();
}

}  // namespace slideocam::io
