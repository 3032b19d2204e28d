#include "slideocam/feasibility.hpp"

#include <algorithm>
#include <cmath>

#include "slideocam/cam_core.hpp"
#include "slideocam/errors.hpp"

namespace slideocam::feasibility {

namespace {
constexpr const char* kModule = "feasibility";
}

FeasibilityReport check_feasibility(const DesignParams& params) {
    FeasibilityReport r;
    const double eta = params.eta();

    r.roller_spacing.margin = params.p / (2.0 * params.n) - params.a4;
    r.roller_spacing.ok = r.roller_spacing.margin > 0.0;

    r.shaft_clearance.margin = params.e - params.b - params.a4;
    r.shaft_clearance.ok = r.shaft_clearance.margin >= 0.0;
    r.shaft_contact = r.shaft_clearance.margin == 0.0;

    r.eta_lower.margin = eta - 1.0 / kTwoPi;
    r.eta_lower.ok = r.eta_lower.margin > 0.0;

    r.convexity.margin = eta - 1.0 / kPi;
    r.convexity.ok = r.convexity.margin >= 0.0;

    r.feasible = r.roller_spacing.ok && r.shaft_clearance.ok && r.eta_lower.ok;
    return r;
}

ClearanceTerms constraint_terms(const DesignParams& params) {
    const double eta = params.eta();
    if (std::abs(eta - 1.0 / kTwoPi) < cam::kEtaSingularityTol) {
        throw SingularityError(kModule, "B is undefined at eta = 1/(2 pi)");
    }
    const double n = params.n;
    const double lever = 2.0 * n * kPi * eta - n;
    const double a = params.p / (2.0 * n * kPi) * std::hypot(lever, kPi) - params.a4;
    const double b = std::sin(std::atan(-kPi / lever));
    return {a, b};
}

std::optional<RollerBound> max_feasible_a4(double p, double b, int n, double eta) {
    if (!(eta > 1.0 / kTwoPi)) return std::nullopt;
    const double spacing = p / (2.0 * n);
    const double clearance = eta * p - b;
    if (clearance < spacing) {
        if (clearance <= 0.0) return std::nullopt;
        return RollerBound{clearance, false};
    }
    return RollerBound{spacing, true};
}

RegionSettings default_region(double p) {
    RegionSettings s;
    s.a4 = {0.0, p / 2.0};
    return s;
}

RegionRaster rasterize_region(double p, double b, int n, const RegionSettings& settings) {
    if (settings.eta_cells < 2 || settings.a4_cells < 2) {
        throw PreconditionError(kModule, "raster resolution must be at least 2x2");
    }
    if (!(settings.eta.hi > settings.eta.lo) || !(settings.a4.hi > settings.a4.lo) ||
        !(settings.eta.hi > 0.0) || !(settings.a4.hi > 0.0)) {
        throw PreconditionError(kModule, "raster ranges must be ordered and positive");
    }
    if (!(p > 0.0) || n < 1 || !(b >= 0.0)) {
        throw PreconditionError(kModule, "raster needs p > 0, n >= 1, b >= 0");
    }

    RegionRaster r;
    r.p = p;
    r.b = b;
    r.n = n;
    const double d_eta = (settings.eta.hi - settings.eta.lo) / settings.eta_cells;
    const double d_a4 = (settings.a4.hi - settings.a4.lo) / settings.a4_cells;
    for (int j = 0; j < settings.eta_cells; ++j) r.eta_axis.push_back(settings.eta.lo + (j + 0.5) * d_eta);
    for (int i = 0; i < settings.a4_cells; ++i) r.a4_axis.push_back(settings.a4.lo + (i + 0.5) * d_a4);

    // Column bounds: each eta column admits a4 in (0, min(spacing, clearance)].
    const double spacing = p / (2.0 * n);
    r.cells.assign(r.a4_axis.size() * r.eta_axis.size(), 0);
    for (std::size_t j = 0; j < r.eta_axis.size(); ++j) {
        const double e = r.eta_axis[j] * p;
        const bool eta_ok = e / p > 1.0 / kTwoPi;
        if (!eta_ok) continue;
        for (std::size_t i = 0; i < r.a4_axis.size(); ++i) {
            const double a4 = r.a4_axis[i];
            if (a4 < spacing && a4 <= e - b) {
                r.cells[i * r.eta_axis.size() + j] = 1;
                r.max_feasible_a4 = std::max(r.max_feasible_a4.value_or(a4), a4);
            }
        }
    }
    return r;
}

}  // namespace slideocam::feasibility
