#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slideocam/geometry.hpp"
#include "slideocam/types.hpp"

/// Active angular intervals, pressure-angle distributions and parameter sweeps.
namespace slideocam::analysis {

/// High-speed guideline for |mu|.
inline constexpr double kPressureGuideline = to_radians(30.0);
/// Above this |mu| multi-lobe cams lose contact with the roller.
inline constexpr double kContactLossThreshold = to_radians(20.0);

/// Range of cam angle over which one cam of an m-cam assembly drives the
/// follower in the working direction.
struct ActiveInterval {
    double psi_lo = 0.0;
    double psi_hi = 0.0;
    int m = 1;
    int n = 1;
    /// m >= 4: the closed form is the m = 2, 3 pattern carried forward.
    bool extrapolated = false;

    double length() const { return psi_hi - psi_lo; }
};

/// m = 1: [pi/n, 2pi/n - delta]
/// m = 2: [pi/n - delta, 2pi/n - delta]
/// m = 3: [4pi/(3n) - delta, 2pi/n - delta]
/// m >= 4: [2pi/n - 2pi/(n m) - delta, 2pi/n - delta], flagged extrapolated
ActiveInterval active_interval(const DesignParams& params, double delta);

struct PressureSample {
    double psi;
    double mu;      ///< rad
    double tan_mu;  ///< infinite at the pole
};

struct PressureProfile {
    std::vector<PressureSample> samples;
    std::size_t max_index = 0;  ///< sample with the largest |mu|
};

/// mu sampled uniformly over the interval, both ends included.
PressureProfile pressure_profile(const DesignParams& params, const ActiveInterval& interval, int samples);

struct MaxPressureAngle {
    double mu_abs = 0.0;  ///< rad
    double psi = 0.0;     ///< where the maximum is attained
    double tan_mu = 0.0;
    /// Largest |mu| found by uniform grid sampling; never above mu_abs by more
    /// than rounding when the closed-form endpoint argument holds.
    double grid_mu_abs = 0.0;
    bool single_cam = false;         ///< m = 1: the interval touches the pole, 90 deg reported
    bool exceeds_guideline = false;  ///< |mu| > 30 deg
    bool extrapolated = false;
};

/// max |mu| over the active interval, taken at its lower end (|tan mu|
/// decreases for psi > pi/n) and cross-checked on `grid` samples.
MaxPressureAngle max_pressure_angle(const DesignParams& params, double delta, int grid = 1000);
MaxPressureAngle max_pressure_angle(const DesignParams& params,
                                    const geometry::SolverSettings& solver = {}, int grid = 1000);

struct ContactLossReport {
    ActiveInterval interval;
    double threshold = kContactLossThreshold;
    double max_abs_mu = 0.0;
    double min_abs_mu = 0.0;
    bool exceeds = false;             ///< max |mu| > threshold
    bool exceeds_everywhere = false;  ///< min |mu| > threshold
    /// Cam angle inside the interval where |mu| equals the threshold.
    std::optional<double> crossing_psi;
};

/// Throws PreconditionError for n < 2.
ContactLossReport contact_loss_check(const DesignParams& params, double delta);
ContactLossReport contact_loss_check(const DesignParams& params, const geometry::SolverSettings& solver = {});

/// Smallest |mu| among the m phased cams that are driving at shaft angle psi.
struct EnvelopeSample {
    double psi;
    double mu;       ///< rad; NaN when no cam drives
    int driving_cam; ///< -1 when no cam drives
};

/// Envelope over one lobe period [0, 2pi/n), `samples` points.
std::vector<EnvelopeSample> pressure_envelope(const DesignParams& params, double delta, int samples);

enum class SweepParameter { Eta, E, A4, N, M, P, B };

/// Parses "eta", "e", "a4", "n", "m", "p", "b"; std::nullopt otherwise.
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);
std::string_view sweep_parameter_name(SweepParameter parameter);
std::string_view sweep_parameter_unit(SweepParameter parameter);

/// Params with one field replaced. Setting eta to its current value leaves
/// e untouched. Throws ValidationError for non-integral n or m.
DesignParams with_parameter(const DesignParams& params, SweepParameter parameter, double value);

enum SweepFlag : std::uint32_t {
    kFlagNone = 0,
    kFlagExceedsGuideline = 1u << 0,   ///< |mu| > 30 deg
    kFlagContactLoss = 1u << 1,        ///< n >= 2 and |mu| > 20 deg
    kFlagSingleCam = 1u << 2,          ///< m = 1, 90 deg supremum
    kFlagExtrapolated = 1u << 3,       ///< m >= 4
    kFlagInfeasible = 1u << 4,         ///< constraint check failed
    kFlagSolverFailure = 1u << 5,      ///< no extended angle
};

std::string describe_flags(std::uint32_t flags);

struct SweepPoint {
    double value = 0.0;
    DesignParams params;
    bool feasible = false;
    std::optional<double> delta;
    std::optional<ActiveInterval> interval;
    std::optional<MaxPressureAngle> max_mu;
    std::uint32_t flags = kFlagNone;
    std::string error;  ///< solver message when kFlagSolverFailure is set
};

struct SweepResult {
    SweepParameter parameter = SweepParameter::Eta;
    std::vector<SweepPoint> points;  ///< in input order
};

/// One evaluation per value; infeasible or unsolvable points are kept and
/// flagged. Throws PreconditionError for an empty value list.
SweepResult sweep(const DesignParams& params, SweepParameter parameter, std::span<const double> values,
                  const geometry::SolverSettings& solver = {});

}  // namespace slideocam::analysis
