#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slideocam/types.hpp"

/// Design constraints on (p, n, eta, a4, b) and the rasterised feasible region.
namespace slideocam::feasibility {

/// One constraint verdict with its signed margin (positive = satisfied side).
struct ConstraintCheck {
    bool ok = false;
    double margin = 0.0;
};

struct FeasibilityReport {
    ConstraintCheck roller_spacing;   ///< a4 < p/(2n), margin p/(2n) - a4
    ConstraintCheck shaft_clearance;  ///< a4 <= eta p - b, margin eta p - b - a4
    ConstraintCheck eta_lower;        ///< eta > 1/(2 pi), margin eta - 1/(2 pi)
    ConstraintCheck convexity;        ///< eta >= 1/pi, margin eta - 1/pi (quality flag)
    bool shaft_contact = false;       ///< a4 == eta p - b: cam and shaft share a point
    bool feasible = false;            ///< spacing && clearance && eta_lower
};

/// Evaluates all constraints. Infeasibility is a result, never an error.
FeasibilityReport check_feasibility(const DesignParams& params);

/// Intermediate terms of the v_c(0) <= 0 condition: v_c(0) has the sign of A * B.
///   A = p/(2 n pi) sqrt((2 n pi eta - n)^2 + pi^2) - a4
///   B = sin(arctan(-pi / (2 n pi eta - n)))
struct ClearanceTerms {
    double a;
    double b;
};

/// Throws SingularityError at eta = 1/(2 pi).
ClearanceTerms constraint_terms(const DesignParams& params);

/// Upper bound on a4 at a given eta: min(p/(2n), eta p - b).
struct RollerBound {
    double value = 0.0;
    bool open = false;  ///< true when the strict roller-spacing bound is the binding one
};

/// std::nullopt when no positive a4 is feasible at this eta.
std::optional<RollerBound> max_feasible_a4(double p, double b, int n, double eta);

struct Range {
    double lo;
    double hi;
};

/// Boolean raster over (eta, a4) cell centres. Row i is a4_axis[i], column j
/// is eta_axis[j]; cells are stored row-major.
struct RegionRaster {
    double p = 0.0;
    double b = 0.0;
    int n = 1;
    std::vector<double> eta_axis;
    std::vector<double> a4_axis;
    std::vector<std::uint8_t> cells;
    /// Largest a4 cell centre with a feasible cell, or nullopt if none.
    std::optional<double> max_feasible_a4;

    bool feasible(std::size_t a4_row, std::size_t eta_col) const {
        return cells[a4_row * eta_axis.size() + eta_col] != 0;
    }
};

struct RegionSettings {
    Range eta{0.9 / kTwoPi, 0.5};
    Range a4{0.0, 25.0};
    int eta_cells = 200;
    int a4_cells = 200;
};

/// Region axes mirroring the classic plot: eta in [0.9/(2 pi), 0.5], a4 in (0, p/2].
RegionSettings default_region(double p);

/// Throws PreconditionError unless both resolutions are >= 2 and the ranges
/// are ordered with a positive upper end.
RegionRaster rasterize_region(double p, double b, int n, const RegionSettings& settings);

}  // namespace slideocam::feasibility
