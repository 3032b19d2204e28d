#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include <yaml-cpp/yaml.h>

#include "slideocam/errors.hpp"
#include "slideocam/export_io.hpp"

namespace slideocam::io {

namespace {

constexpr const char* kModule = "export-io";

constexpr std::string_view kBaseline =
    "# Baseline two-cam, one-lobe design (mm)\n"
    "p: 50\n"
    "n: 1\n"
    "m: 2\n"
    "e: 9\n"
    "a4: 10\n"
    "b: 4.25\n";

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const YAML::Node& map, const std::string& prefix, const std::set<std::string>& known) {
    for (const auto& kv : map) {
        const auto key = kv.first.as<std::string>();
        if (!known.contains(key)) {
            throw ValidationError(kModule, join(prefix, key),
                                  "unknown key (line " + std::to_string(kv.first.Mark().line + 1) + ")");
        }
    }
}

double parse_number(std::string_view text, const std::string& field) {
    double value = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw ValidationError(kModule, field, "expected a number, got '" + std::string(text) + "'");
    }
    return value;
}

std::string scalar_text(const YAML::Node& node, const std::string& field) {
    if (!node.IsScalar()) throw ValidationError(kModule, field, "expected a scalar value");
    return node.Scalar();
}

double read_length(const YAML::Node& node, const std::string& field) {
    return parse_number(scalar_text(node, field), field);
}

/// Radians, or degrees with a `deg` suffix.
double read_angle(const YAML::Node& node, const std::string& field) {
    std::string text = scalar_text(node, field);
    if (text.size() > 3 && text.ends_with("deg")) {
        text.resize(text.size() - 3);
        while (!text.empty() && text.back() == ' ') text.pop_back();
        return to_radians(parse_number(text, field));
    }
    return parse_number(text, field);
}

int read_int(const YAML::Node& node, const std::string& field) {
    const std::string text = scalar_text(node, field);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ValidationError(kModule, field, "expected an integer, got '" + text + "'");
    }
    return value;
}

bool read_bool(const YAML::Node& node, const std::string& field) {
    const std::string text = scalar_text(node, field);
    if (text == "true") return true;
    if (text == "false") return false;
    throw ValidationError(kModule, field, "expected true or false, got '" + text + "'");
}

YAML::Node require_map(const YAML::Node& node, const std::string& field) {
    if (!node.IsMap()) throw ValidationError(kModule, field, "expected a map of settings");
    return node;
}

void apply_override(YAML::Node& root, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ValidationError(kModule, assignment, "override must have the form key=value");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);

    std::vector<std::string> parts;
    for (std::size_t start = 0;;) {
        const auto dot = key.find('.', start);
        parts.push_back(key.substr(start, dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }

    YAML::Node cursor = root;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        YAML::Node next = cursor[parts[i]];
        if (!next.IsDefined() || next.IsNull()) {
            cursor[parts[i]] = YAML::Node(YAML::NodeType::Map);
            next = cursor[parts[i]];
        }
        if (!next.IsMap()) throw ValidationError(kModule, key, "cannot descend into a scalar");
        cursor.reset(next);
    }
    if (parts.size() == 1 && parts[0] == "eta") root.remove("e");
    if (parts.size() == 1 && parts[0] == "e") root.remove("eta");
    cursor[parts.back()] = value;
}

}  // namespace

std::string_view baseline_config() { return kBaseline; }

DesignConfig parse_config(std::string_view text, std::span<const std::string> overrides) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& err) {
        throw ParseError(kModule, err.mark.line + 1, err.mark.column + 1, err.msg);
    }
    if (!root.IsDefined() || root.IsNull()) root = YAML::Node(YAML::NodeType::Map);
    if (!root.IsMap()) {
        throw ParseError(kModule, root.Mark().line + 1, root.Mark().column + 1,
                         "configuration must be a map of keys");
    }
    for (const auto& assignment : overrides) apply_override(root, assignment);

    reject_unknown(root, "", {"p", "n", "m", "e", "eta", "a4", "b", "solver", "region", "output",
                              "require_convex"});

    DesignConfig cfg;
    DesignParams& params = cfg.params;
    const auto required = [&](const char* key) {
        if (!root[key]) throw ValidationError(kModule, key, "required key is missing");
        return root[key];
    };
    params.p = read_length(required("p"), "p");
    params.n = read_int(required("n"), "n");
    params.a4 = read_length(required("a4"), "a4");
    params.m = root["m"] ? read_int(root["m"], "m") : 2;
    params.b = root["b"] ? read_length(root["b"], "b") : 4.25;
    if (root["e"] && root["eta"]) throw ValidationError(kModule, "eta", "give either e or eta, not both");
    if (root["e"]) {
        params.e = read_length(root["e"], "e");
    } else if (root["eta"]) {
        params.e = parse_number(scalar_text(root["eta"], "eta"), "eta") * params.p;
    } else {
        throw ValidationError(kModule, "e", "required key is missing (or give eta)");
    }
    params.validate();

    if (root["require_convex"]) cfg.require_convex = read_bool(root["require_convex"], "require_convex");

    auto& gen = cfg.generation;
    if (const YAML::Node solver = root["solver"]) {
        require_map(solver, "solver");
        reject_unknown(solver, "solver", {"samples", "closure_tol", "residual_tol", "angle_tol", "max_iterations"});
        if (solver["samples"]) gen.samples = read_int(solver["samples"], "solver.samples");
        if (solver["closure_tol"]) gen.closure_tol = read_length(solver["closure_tol"], "solver.closure_tol");
        if (solver["residual_tol"]) gen.solver.residual_tol = read_length(solver["residual_tol"], "solver.residual_tol");
        if (solver["angle_tol"]) gen.solver.angle_tol = read_angle(solver["angle_tol"], "solver.angle_tol");
        if (solver["max_iterations"]) {
            gen.solver.max_iterations = read_int(solver["max_iterations"], "solver.max_iterations");
        }
    }
    if (gen.samples < 16) throw ValidationError(kModule, "solver.samples", "must be at least 16");
    if (!(gen.closure_tol > 0.0)) throw ValidationError(kModule, "solver.closure_tol", "must be positive");
    if (!(gen.solver.residual_tol > 0.0)) throw ValidationError(kModule, "solver.residual_tol", "must be positive");
    if (!(gen.solver.angle_tol > 0.0)) throw ValidationError(kModule, "solver.angle_tol", "must be positive");
    if (gen.solver.max_iterations < 1) throw ValidationError(kModule, "solver.max_iterations", "must be positive");

    cfg.region = feasibility::default_region(params.p);
    if (const YAML::Node region = root["region"]) {
        require_map(region, "region");
        reject_unknown(region, "region", {"eta_min", "eta_max", "a4_min", "a4_max", "eta_cells", "a4_cells"});
        if (region["eta_min"]) cfg.region.eta.lo = read_length(region["eta_min"], "region.eta_min");
        if (region["eta_max"]) cfg.region.eta.hi = read_length(region["eta_max"], "region.eta_max");
        if (region["a4_min"]) cfg.region.a4.lo = read_length(region["a4_min"], "region.a4_min");
        if (region["a4_max"]) cfg.region.a4.hi = read_length(region["a4_max"], "region.a4_max");
        if (region["eta_cells"]) cfg.region.eta_cells = read_int(region["eta_cells"], "region.eta_cells");
        if (region["a4_cells"]) cfg.region.a4_cells = read_int(region["a4_cells"], "region.a4_cells");
    }
    if (cfg.region.eta_cells < 2 || cfg.region.a4_cells < 2) {
        throw ValidationError(kModule, "region", "resolution must be at least 2x2");
    }
    if (!(cfg.region.eta.hi > cfg.region.eta.lo) || !(cfg.region.a4.hi > cfg.region.a4.lo)) {
        throw ValidationError(kModule, "region", "ranges must be ordered (min < max)");
    }

    if (const YAML::Node output = root["output"]) {
        require_map(output, "output");
        reject_unknown(output, "output", {"svg", "csv", "pitch_overlay"});
        if (output["svg"]) cfg.output.svg = scalar_text(output["svg"], "output.svg");
        if (output["csv"]) cfg.output.csv = scalar_text(output["csv"], "output.csv");
        if (output["pitch_overlay"]) cfg.output.pitch_overlay = read_bool(output["pitch_overlay"], "output.pitch_overlay");
    }
    return cfg;
}

}  // namespace slideocam::io
