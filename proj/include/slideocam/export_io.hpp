#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slideocam/analysis.hpp"
#include "slideocam/feasibility.hpp"
#include "slideocam/geometry.hpp"
#include "slideocam/types.hpp"

/// Configuration parsing and text serialisation of profiles, rasters and tables.
namespace slideocam::io {

inline constexpr std::string_view kToolVersion = "slideocam 0.1.0";

struct OutputSelection {
    std::optional<std::string> svg;
    std::optional<std::string> csv;
    bool pitch_overlay = true;
};

/// Validated configuration: design parameters, solver settings, region
/// axes and output selection.
struct DesignConfig {
    DesignParams params;
    geometry::GenerationSettings generation;
    feasibility::RegionSettings region;
    OutputSelection output;
    bool require_convex = false;
};

/// Built-in baseline design used when no config file is given.
std::string_view baseline_config();

/// Parse YAML-formatted configuration text.
///
/// Design keys live at the top level (p, n, m, e or eta, a4, b); `solver`,
/// `region` and `output` are nested maps. Lengths are millimetres, angles
/// radians unless written with a `deg` suffix. Overrides are `key=value`
/// with dotted keys for nested fields and are applied before validation.
/// Defaults: m = 2, b = 4.25, samples = 720.
///
/// Throws ParseError (line/column) for malformed text and ValidationError
/// naming the field for unknown keys, bad types or out-of-range values.
DesignConfig parse_config(std::string_view text, std::span<const std::string> overrides = {});

/// 17 significant digits: parses back to the identical double.
std::string format_double(double value);

/// Geometry plus the header echoed into every emitted document.
struct ProfileDocument {
    DesignParams params;
    geometry::ExtendedAngle delta;
    feasibility::FeasibilityReport feasibility;
    geometry::CamAssembly assembly;
};

/// Header comment lines ("# ..."): version, parameters, delta, feasibility.
std::string document_header(const DesignParams& params, const geometry::ExtendedAngle& delta,
                            const feasibility::FeasibilityReport& feasibility);

/// Profile CSV: header comments, then the fixed column row
/// `cam_index,lobe_index,psi,u,v` and one row per point. LF line endings.
std::string write_profile_csv(const ProfileDocument& doc);

struct ProfileRow {
    int cam_index;
    int lobe_index;
    double psi;
    double u;
    double v;
};

/// Reads the rows back; comment lines are skipped. Throws ParseError.
std::vector<ProfileRow> read_profile_csv(std::string_view text);

struct SvgOptions {
    /// Drawn in blue under the red cam outlines when present.
    std::optional<geometry::CamAssembly> pitch_overlay;
};

/// SVG 1.1 using only path elements and a viewBox in millimetres; the v axis
/// points up. One path per cam, plus one per pitch curve when overlaid.
std::string write_profile_svg(const ProfileDocument& doc, const SvgOptions& options = {});

/// Matrix CSV: first row `a4\eta` then the eta axis; each following row is
/// an a4 value and 0/1 cells.
std::string write_raster_csv(const feasibility::RegionRaster& raster);

/// Feasible cells as filled path runs, one path per a4 row with any feasible cell.
std::string write_raster_svg(const feasibility::RegionRaster& raster);

std::string write_sweep_csv(const analysis::SweepResult& result);

std::string write_pressure_csv(const DesignParams& params, const analysis::PressureProfile& profile);

}  // namespace slideocam::io
