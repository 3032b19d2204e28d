#include "slideocam/cam_core.hpp"

#include <cmath>
#include <sstream>

#include "slideocam/errors.hpp"

namespace slideocam::cam {

namespace {

constexpr const char* kModule = "cam-core";

// 2 pi eta - 1, guarded against the singular value.
double offset_excess(const DesignParams& params) {
    const double eta = params.eta();
    if (std::abs(eta - 1.0 / kTwoPi) < kEtaSingularityTol) {
        std::ostringstream msg;
        msg << "eta = " << eta << " is singular (eta must differ from 1/(2 pi))";
        throw SingularityError(kModule, msg.str());
    }
    return kTwoPi * eta - 1.0;
}

}  // namespace

double displacement(const DesignParams& params, double psi) {
    // Factored so the zero at n psi = pi carries no cancellation error.
    return params.p / (kTwoPi * params.n) * (params.n * psi - kPi);
}

DisplacementDerivatives displacement_derivatives(const DesignParams& params) {
    return {params.p / kTwoPi, 0.0};
}

ProfileCoefficients profile_coefficients(const DesignParams& params, double psi) {
    const double excess = offset_excess(params);
    if (excess < 0.0) {
        std::ostringstream msg;
        msg << "eta = " << params.eta() << " < 1/(2 pi): no admissible profile";
        throw DomainError(kModule, msg.str());
    }
    const double n = params.n;
    const double b2 = params.p / kTwoPi;
    const double b3 = b2 * std::hypot(excess, psi - kPi / n);
    const double delta = std::atan((n * psi - kPi) / (n * excess));
    return {b2, b3, delta};
}

PlanePoint cam_profile_point(const DesignParams& params, double psi,
                             std::optional<double> lobe_start) {
    if (lobe_start) {
        const double lo = *lobe_start;
        const double hi = kTwoPi / params.n - lo;
        constexpr double slack = 1e-12;
        if (psi < lo - slack || psi > hi + slack) {
            std::ostringstream msg;
            msg << "psi = " << psi << " outside the lobe domain [" << lo << ", " << hi << "]";
            throw DomainError(kModule, msg.str());
        }
    }
    const auto [b2, b3, delta] = profile_coefficients(params, psi);
    const double reach = b3 - params.a4;
    return {b2 * std::cos(psi) + reach * std::cos(delta - psi),
            -b2 * std::sin(psi) + reach * std::sin(delta - psi), Frame::Cam};
}

PlanePoint pitch_point(const DesignParams& params, double psi) {
    const double s = displacement(params, psi);
    const double c = std::cos(psi);
    const double sn = std::sin(psi);
    return {params.e * c + s * sn, -params.e * sn + s * c, Frame::Cam};
}

CurveDerivatives pitch_derivatives(const DesignParams& params, double psi) {
    const double s = displacement(params, psi);
    const double ds = displacement_derivatives(params).first;
    const double e = params.e;
    const double c = std::cos(psi);
    const double sn = std::sin(psi);
    return {(ds - e) * sn + s * c, (ds - e) * c - s * sn, (2.0 * ds - e) * c - s * sn,
            -(2.0 * ds - e) * sn - s * c};
}

double tan_pressure_angle_from_motion(const DesignParams& params, double psi) {
    return (displacement_derivatives(params).first - params.e) / displacement(params, psi);
}

double tan_pressure_angle(const DesignParams& params, double psi) {
    const double n = params.n;
    return (n - 2.0 * n * kPi * params.eta()) / (n * psi - kPi);
}

double pressure_angle(const DesignParams& params, double psi) {
    const double n = params.n;
    const double num = n - 2.0 * n * kPi * params.eta();
    const double den = n * psi - kPi;
    if (den == 0.0) {
        if (num == 0.0) return 0.0;
        return num > 0.0 ? kPi / 2.0 : -kPi / 2.0;
    }
    return std::atan(num / den);
}

double curvature(const CurveDerivatives& d) {
    const double speed2 = d.du * d.du + d.dv * d.dv;
    if (speed2 < kDegenerateSpeedTol) {
        throw DegenerateSpeedError(kModule, "curve speed vanishes (cusp): curvature undefined");
    }
    return (d.dv * d.d2u - d.du * d.d2v) / (speed2 * std::sqrt(speed2));
}

double curvature_parametric(const std::function<double(double)>& u,
                            const std::function<double(double)>& v, double psi, double h) {
    if (!(h > 0.0)) throw PreconditionError(kModule, "finite-difference step must be positive");
    const auto stencil = [psi, h](const std::function<double(double)>& f) {
        const double fp2 = f(psi + 2.0 * h);
        const double fp1 = f(psi + h);
        const double f0 = f(psi);
        const double fm1 = f(psi - h);
        const double fm2 = f(psi - 2.0 * h);
        const double d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
        const double d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
        return std::pair{d1, d2};
    };
    const auto [du, d2u] = stencil(u);
    const auto [dv, d2v] = stencil(v);
    return curvature({du, dv, d2u, d2v});
}

double curvature_pitch_numerator(const DesignParams& params, double psi) {
    const double n = params.n;
    const double eta = params.eta();
    const double phase = n * psi - kPi;
    return phase * phase + 2.0 * n * n * (kTwoPi * eta - 1.0) * (kPi * eta - 1.0);
}

double curvature_pitch(const DesignParams& params, double psi) {
    const double excess = offset_excess(params);
    const double n = params.n;
    const double phase = n * psi - kPi;
    const double base = phase * phase + n * n * excess * excess;
    return (kTwoPi * n / params.p) * curvature_pitch_numerator(params, psi) /
           (base * std::sqrt(base));
}

double convexity_bracket(const DesignParams& params) {
    const double eta = params.eta();
    return (kTwoPi * eta - 1.0) * (kPi * eta - 1.0);
}

}  // namespace slideocam::cam
