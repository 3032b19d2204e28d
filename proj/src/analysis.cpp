#include "slideocam/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "slideocam/cam_core.hpp"
#include "slideocam/errors.hpp"
#include "slideocam/feasibility.hpp"

namespace slideocam::analysis {

namespace {

constexpr const char* kModule = "analysis";

}  // namespace

ActiveInterval active_interval(const DesignParams& params, double delta) {
    const double n = params.n;
    ActiveInterval out;
    out.m = params.m;
    out.n = params.n;
    out.psi_hi = kTwoPi / n - delta;
    switch (params.m) {
        case 1:
            out.psi_lo = kPi / n;
            break;
        case 2:
            out.psi_lo = kPi / n - delta;
            break;
        case 3:
            out.psi_lo = 4.0 * kPi / (3.0 * n) - delta;
            break;
        default:
            out.psi_lo = kTwoPi / n - kTwoPi / (n * params.m) - delta;
            out.extrapolated = true;
            break;
    }
    return out;
}

PressureProfile pressure_profile(const DesignParams& params, const ActiveInterval& interval, int samples) {
    if (samples < 2) throw PreconditionError(kModule, "pressure profile needs at least 2 samples");
    PressureProfile out;
    out.samples.reserve(samples);
    const double step = interval.length() / (samples - 1);
    double best = -1.0;
    for (int i = 0; i < samples; ++i) {
        const double psi = (i == samples - 1) ? interval.psi_hi : interval.psi_lo + step * i;
        const double mu = cam::pressure_angle(params, psi);
        out.samples.push_back({psi, mu, cam::tan_pressure_angle(params, psi)});
        if (std::abs(mu) > best) {
            best = std::abs(mu);
            out.max_index = static_cast<std::size_t>(i);
        }
    }
    return out;
}

MaxPressureAngle max_pressure_angle(const DesignParams& params, double delta, int grid) {
    const ActiveInterval interval = active_interval(params, delta);
    MaxPressureAngle out;
    out.extrapolated = interval.extrapolated;
    if (params.m == 1) {
        out.single_cam = true;
        out.mu_abs = kPi / 2.0;
        out.psi = interval.psi_lo;
        out.tan_mu = -std::numeric_limits<double>::infinity();
        out.grid_mu_abs = kPi / 2.0;
    } else {
        out.psi = interval.psi_lo;
        out.mu_abs = std::abs(cam::pressure_angle(params, out.psi));
        out.tan_mu = cam::tan_pressure_angle(params, out.psi);
        if (grid >= 2) {
            const PressureProfile sampled = pressure_profile(params, interval, grid);
            out.grid_mu_abs = std::abs(sampled.samples[sampled.max_index].mu);
        } else {
            out.grid_mu_abs = out.mu_abs;
        }
    }
    out.exceeds_guideline = out.mu_abs > kPressureGuideline;
    return out;
}

MaxPressureAngle max_pressure_angle(const DesignParams& params, const geometry::SolverSettings& solver,
                                    int grid) {
    return max_pressure_angle(params, geometry::solve_extended_angle(params, solver).delta, grid);
}

ContactLossReport contact_loss_check(const DesignParams& params, double delta) {
    if (params.n < 2) {
        throw PreconditionError(kModule, "contact-loss check applies to cams with at least two lobes");
    }
    ContactLossReport out;
    out.interval = active_interval(params, delta);
    const double n = params.n;

    // |tan mu| = |n - 2 n pi eta| / (n psi - pi) decreases on psi > pi/n.
    out.max_abs_mu = params.m == 1 ? kPi / 2.0 : std::abs(cam::pressure_angle(params, out.interval.psi_lo));
    out.min_abs_mu = std::abs(cam::pressure_angle(params, out.interval.psi_hi));
    out.exceeds = out.max_abs_mu > out.threshold;
    out.exceeds_everywhere = out.min_abs_mu > out.threshold;

    const double lever = std::abs(n - 2.0 * n * kPi * params.eta());
    const double crossing = (kPi + lever / std::tan(out.threshold)) / n;
    if (crossing >= out.interval.psi_lo && crossing <= out.interval.psi_hi) out.crossing_psi = crossing;
    return out;
}

ContactLossReport contact_loss_check(const DesignParams& params, const geometry::SolverSettings& solver) {
    if (params.n < 2) {
        throw PreconditionError(kModule, "contact-loss check applies to cams with at least two lobes");
    }
    return contact_loss_check(params, geometry::solve_extended_angle(params, solver).delta);
}

std::vector<EnvelopeSample> pressure_envelope(const DesignParams& params, double delta, int samples) {
    if (samples < 2) throw PreconditionError(kModule, "envelope needs at least 2 samples");
    const double period = kTwoPi / params.n;
    const double beta = period / params.m;
    const double window = kPi / params.n - delta;  // driving window length per lobe

    std::vector<EnvelopeSample> out;
    out.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double psi = period * i / samples;
        EnvelopeSample best{psi, std::numeric_limits<double>::quiet_NaN(), -1};
        for (int k = 0; k < params.m; ++k) {
            // Cam k at shaft angle psi sits where cam 0 sits at psi - k beta.
            double local = std::fmod(psi - k * beta - kPi / params.n, period);
            if (local < 0.0) local += period;
            if (local > window) continue;
            const double mu = cam::pressure_angle(params, kPi / params.n + local);
            if (best.driving_cam < 0 || std::abs(mu) < std::abs(best.mu)) {
                best.mu = mu;
                best.driving_cam = k;
            }
        }
        out.push_back(best);
    }
    return out;
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
    if (name == "eta") return SweepParameter::Eta;
    if (name == "e") return SweepParameter::E;
    if (name == "a4") return SweepParameter::A4;
    if (name == "n") return SweepParameter::N;
    if (name == "m") return SweepParameter::M;
    if (name == "p") return SweepParameter::P;
    if (name == "b") return SweepParameter::B;
    return std::nullopt;
}

std::string_view sweep_parameter_name(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::Eta: return "eta";
        case SweepParameter::E: return "e";
        case SweepParameter::A4: return "a4";
        case SweepParameter::N: return "n";
        case SweepParameter::M: return "m";
        case SweepParameter::P: return "p";
        case SweepParameter::B: return "b";
    }
    return "?";
}

std::string_view sweep_parameter_unit(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::Eta:
        case SweepParameter::N:
        case SweepParameter::M:
            return "1";
        default:
            return "mm";
    }
}

DesignParams with_parameter(const DesignParams& params, SweepParameter parameter, double value) {
    const auto as_count = [value](const char* field) {
        if (!(value >= 1.0) || std::floor(value) != value || value > 1e6) {
            throw ValidationError(kModule, field, "must be a positive integer, got " + std::to_string(value));
        }
        return static_cast<int>(value);
    };
    DesignParams out = params;
    switch (parameter) {
        case SweepParameter::Eta:
            if (value != params.eta()) out.e = value * params.p;
            break;
        case SweepParameter::E: out.e = value; break;
        case SweepParameter::A4: out.a4 = value; break;
        case SweepParameter::N: out.n = as_count("n"); break;
        case SweepParameter::M: out.m = as_count("m"); break;
        case SweepParameter::P: out.p = value; break;
        case SweepParameter::B: out.b = value; break;
    }
    out.validate();
    return out;
}

std::string describe_flags(std::uint32_t flags) {
    static constexpr std::pair<SweepFlag, const char*> names[] = {
        {kFlagExceedsGuideline, "above_30deg"}, {kFlagContactLoss, "above_20deg_contact_loss"},
        {kFlagSingleCam, "single_cam"},         {kFlagExtrapolated, "extrapolated"},
        {kFlagInfeasible, "infeasible"},        {kFlagSolverFailure, "solver_failure"},
    };
    std::string out;
    for (const auto& [flag, name] : names) {
        if ((flags & flag) == 0) continue;
        if (!out.empty()) out += '|';
        out += name;
    }
    return out;
}

SweepResult sweep(const DesignParams& params, SweepParameter parameter, std::span<const double> values,
                  const geometry::SolverSettings& solver) {
    if (values.empty()) throw PreconditionError(kModule, "sweep needs at least one value");
    SweepResult result;
    result.parameter = parameter;
    result.points.reserve(values.size());
    for (const double value : values) {
        SweepPoint point;
        point.value = value;
        point.params = with_parameter(params, parameter, value);
        point.feasible = feasibility::check_feasibility(point.params).feasible;
        if (!point.feasible) point.flags |= kFlagInfeasible;
        if (point.params.m == 1) point.flags |= kFlagSingleCam;
        if (point.params.m >= 4) point.flags |= kFlagExtrapolated;
        try {
            const double delta = geometry::solve_extended_angle(point.params, solver).delta;
            point.delta = delta;
            point.interval = active_interval(point.params, delta);
            point.max_mu = max_pressure_angle(point.params, delta);
            if (point.max_mu->exceeds_guideline) point.flags |= kFlagExceedsGuideline;
            if (point.params.n >= 2 && point.max_mu->mu_abs > kContactLossThreshold) {
                point.flags |= kFlagContactLoss;
            }
        } catch (const Error& err) {
            if (!err.solver_failure()) throw;
            point.flags |= kFlagSolverFailure;
            point.error = err.what();
        }
        result.points.push_back(std::move(point));
    }
    return result;
}

}  // namespace slideocam::analysis
