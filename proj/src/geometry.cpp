#include "slideocam/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "slideocam/cam_core.hpp"
#include "slideocam/errors.hpp"

namespace slideocam::geometry {

namespace {

constexpr const char* kModule = "geometry-solver";

double contact_v(const DesignParams& params, double psi) {
    return cam::cam_profile_point(params, psi).v();
}

template <typename PointFn>
CamProfile sample_lobe(const DesignParams& params, double delta, int samples, PointFn&& point_at) {
    if (samples < 16) {
        throw PreconditionError(kModule, "at least 16 samples per lobe are required, got " +
                                             std::to_string(samples));
    }
    const double lo = delta;
    const double hi = kTwoPi / params.n - delta;
    const double step = (hi - lo) / (samples - 1);

    CamProfile lobe;
    lobe.points.reserve(samples);
    lobe.psi.reserve(samples);
    lobe.lobe_index.assign(samples, 0);
    for (int i = 0; i < samples; ++i) {
        const double psi = (i == samples - 1) ? hi : lo + step * i;
        lobe.points.push_back(point_at(psi));
        lobe.psi.push_back(psi);
    }
    return lobe;
}

void append_lobe(CamProfile& out, const CamProfile& lobe, int k, int n, bool skip_first) {
    const double turn = kTwoPi * k / n;
    for (std::size_t i = skip_first ? 1 : 0; i < lobe.size(); ++i) {
        out.points.push_back(k == 0 ? lobe.points[i] : slideocam::rotated(lobe.points[i], -turn));
        out.psi.push_back(lobe.psi[i] + turn);
        out.lobe_index.push_back(k);
    }
}

}  // namespace

ExtendedAngle solve_extended_angle(const DesignParams& params, const SolverSettings& settings) {
    double lo = -kPi / params.n + settings.bracket_margin;
    double hi = settings.upper_end;
    double f_lo = contact_v(params, lo);
    double f_hi = contact_v(params, hi);

    if (std::signbit(f_lo) == std::signbit(f_hi) && f_lo != 0.0 && f_hi != 0.0) {
        std::ostringstream msg;
        msg << "v_c does not change sign on [" << lo << ", " << hi << "] (v_c = " << f_lo << ", "
            << f_hi << "); the design is infeasible or degenerate";
        throw NoRootInBracket(kModule, msg.str());
    }

    int it = 0;
    while (hi - lo > settings.angle_tol && it < settings.max_iterations && f_lo != 0.0 && f_hi != 0.0) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = contact_v(params, mid);
        ++it;
        if (std::signbit(f_mid) == std::signbit(f_lo)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }

    ExtendedAngle out;
    out.iterations = it;
    if (std::abs(f_lo) <= std::abs(f_hi)) {
        out.delta = lo;
        out.residual = f_lo;
    } else {
        out.delta = hi;
        out.residual = f_hi;
    }
    if (std::abs(out.residual) > settings.residual_tol) {
        std::ostringstream msg;
        msg << "bisection stopped with residual " << out.residual << " mm above tolerance "
            << settings.residual_tol;
        throw NoRootInBracket(kModule, msg.str());
    }
    return out;
}

CamProfile generate_lobe(const DesignParams& params, double delta, int samples) {
    return sample_lobe(params, delta, samples,
                       [&](double psi) { return cam::cam_profile_point(params, psi); });
}

CamProfile generate_pitch_lobe(const DesignParams& params, double delta, int samples) {
    return sample_lobe(params, delta, samples,
                       [&](double psi) { return cam::pitch_point(params, psi); });
}

CamProfile generate_cam(const DesignParams& params, double delta, const GenerationSettings& settings) {
    const CamProfile lobe = generate_lobe(params, delta, settings.samples);
    const int n = params.n;

    const double joint_gap =
        distance(slideocam::rotated(lobe.points.front(), -kTwoPi / n), lobe.points.back());
    if (joint_gap > settings.closure_tol) {
        std::ostringstream msg;
        msg << "consecutive lobes miss by " << joint_gap << " mm (tolerance " << settings.closure_tol
            << ")";
        throw ClosureFailure(kModule, msg.str());
    }

    CamProfile cam;
    cam.points.reserve(static_cast<std::size_t>(n) * lobe.size());
    for (int k = 0; k < n; ++k) append_lobe(cam, lobe, k, n, k > 0);

    const double end_gap = distance(cam.points.front(), cam.points.back());
    if (end_gap > settings.closure_tol) {
        std::ostringstream msg;
        msg << "profile ends miss by " << end_gap << " mm (tolerance " << settings.closure_tol << ")";
        throw ClosureFailure(kModule, msg.str());
    }
    cam.closed = true;
    return cam;
}

CamProfile generate_cam(const DesignParams& params, const GenerationSettings& settings) {
    return generate_cam(params, solve_extended_angle(params, settings.solver).delta, settings);
}

CamProfile generate_pitch_curve(const DesignParams& params, double delta, const GenerationSettings& settings) {
    const CamProfile lobe = generate_pitch_lobe(params, delta, settings.samples);
    CamProfile curve;
    for (int k = 0; k < params.n; ++k) append_lobe(curve, lobe, k, params.n, false);
    curve.closed = distance(curve.points.front(), curve.points.back()) <= settings.closure_tol;
    return curve;
}

namespace {

CamAssembly phase_copies(const CamProfile& first, const DesignParams& params) {
    CamAssembly assembly;
    const double beta = kTwoPi / (params.n * params.m);
    for (int k = 0; k < params.m; ++k) {
        const double offset = k * beta;
        assembly.phase_offsets.push_back(offset);
        assembly.cams.push_back(k == 0 ? first : rotated(first, -offset));
    }
    return assembly;
}

}  // namespace

CamAssembly generate_assembly(const DesignParams& params, double delta, const GenerationSettings& settings) {
    if (params.m < 1) throw PreconditionError(kModule, "an assembly needs at least one cam");
    return phase_copies(generate_cam(params, delta, settings), params);
}

CamAssembly generate_assembly(const DesignParams& params, const GenerationSettings& settings) {
    return generate_assembly(params, solve_extended_angle(params, settings.solver).delta, settings);
}

CamAssembly generate_pitch_assembly(const DesignParams& params, double delta,
                                    const GenerationSettings& settings) {
    if (params.m < 1) throw PreconditionError(kModule, "an assembly needs at least one cam");
    return phase_copies(generate_pitch_curve(params, delta, settings), params);
}

CamProfile rotated(const CamProfile& profile, double angle) {
    CamProfile out = profile;
    for (auto& pt : out.points) pt = slideocam::rotated(pt, angle);
    return out;
}

bool is_convex_polyline(const CamProfile& profile) {
    if (!profile.closed) throw DegeneratePolyline(kModule, "convexity needs a closed polyline");

    std::vector<PlanePoint> pts = profile.points;
    double scale = 1.0;
    for (const auto& pt : pts) scale = std::max(scale, norm(pt));
    const double repeat_tol = 1e-12 * scale;
    if (pts.size() >= 2 && distance(pts.front(), pts.back()) <= 1e-9 * scale) pts.pop_back();
    if (pts.size() < 3) throw DegeneratePolyline(kModule, "fewer than three distinct points");

    constexpr double straight = 1e-9;
    const std::size_t count = pts.size();
    bool left = false;
    bool right = false;
    double turning = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const PlanePoint& a = pts[i];
        const PlanePoint& b = pts[(i + 1) % count];
        const PlanePoint& c = pts[(i + 2) % count];
        const double ex = b.x - a.x, ey = b.y - a.y;
        const double fx = c.x - b.x, fy = c.y - b.y;
        const double le = std::hypot(ex, ey);
        const double lf = std::hypot(fx, fy);
        if (le <= repeat_tol || lf <= repeat_tol) {
            throw DegeneratePolyline(kModule, "repeated consecutive points at index " +
                                                  std::to_string((i + 1) % count));
        }
        const double cross = ex * fy - ey * fx;
        const double dot = ex * fx + ey * fy;
        const double sine = cross / (le * lf);
        if (sine > straight) left = true;
        if (sine < -straight) right = true;
        turning += std::atan2(cross, dot);
    }
    if (left && right) return false;
    return std::abs(std::abs(turning) - kTwoPi) < 1e-6;
}

}  // namespace slideocam::geometry
