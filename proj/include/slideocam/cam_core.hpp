#pragma once

#include <functional>
#include <optional>

#include "slideocam/types.hpp"

/// Closed-form kinematics of the cam: motion law, contact and pitch points,
/// pressure angle and curvature at a given cam angle psi (radians).
///
/// All functions are pure; they may be called concurrently.
namespace slideocam::cam {

/// Directed angle between the cam axis and the follower's translation.
inline constexpr double kFollowerAxisAngle = -kPi / 2.0;

/// |eta - 1/(2 pi)| below this is rejected as singular.
inline constexpr double kEtaSingularityTol = 1e-9;

/// Default step of the five-point finite-difference curvature.
inline constexpr double kDefaultCurvatureStep = 1e-3;

/// Speed squared below this is treated as a cusp.
inline constexpr double kDegenerateSpeedTol = 1e-20;

/// Follower displacement s(psi) = p psi / (2 pi) - p / (2n).
double displacement(const DesignParams& params, double psi);

struct DisplacementDerivatives {
    double first;   ///< s'(psi), mm/rad
    double second;  ///< s''(psi), mm/rad^2
};

/// Constant for the uniform motion law: (p / (2 pi), 0).
DisplacementDerivatives displacement_derivatives(const DesignParams& params);

struct ProfileCoefficients {
    double b2;
    double b3;
    double delta;  ///< principal arctan branch, in (-pi/2, pi/2)
};

/// Coefficients of the contact-point expression.
///
/// Throws SingularityError when eta is within kEtaSingularityTol of
/// 1/(2 pi), DomainError when eta < 1/(2 pi) (the arctan branch is only
/// valid for 2 pi eta - 1 > 0).
ProfileCoefficients profile_coefficients(const DesignParams& params, double psi);

/// Contact point C between cam and roller, in the cam frame.
///
/// When `lobe_start` (the extended angle) is given, psi must lie in the
/// canonical lobe domain [lobe_start, 2 pi / n - lobe_start]; otherwise
/// DomainError is thrown.
PlanePoint cam_profile_point(const DesignParams& params, double psi,
                             std::optional<double> lobe_start = std::nullopt);

/// Roller centre O2 in the cam frame: the fixed-frame point (e, s) rotated by -psi.
PlanePoint pitch_point(const DesignParams& params, double psi);

/// First and second derivatives of a planar parametric curve.
struct CurveDerivatives {
    double du;
    double dv;
    double d2u;
    double d2v;
};

/// Analytic derivatives of the pitch curve.
CurveDerivatives pitch_derivatives(const DesignParams& params, double psi);

/// tan(mu) = (s' - e) / s. Infinite (signed) at s = 0.
double tan_pressure_angle_from_motion(const DesignParams& params, double psi);

/// tan(mu) = (n - 2 n pi eta) / (n psi - pi).
double tan_pressure_angle(const DesignParams& params, double psi);

/// Pressure angle in [-pi/2, pi/2].
///
/// At the pole n psi = pi the one-sided limit from psi > pi/n is returned:
/// sign(n - 2 n pi eta) * pi/2, which is -pi/2 for every design with
/// eta > 1/(2 pi). At the 0/0 point (eta = 1/(2 pi), psi = pi/n) returns 0.
double pressure_angle(const DesignParams& params, double psi);

/// Signed curvature (v' u'' - u' v'') / (u'^2 + v'^2)^(3/2).
///
/// This orientation gives a clockwise-traversed convex curve positive
/// curvature, which is how the cam frame sees the pitch curve as psi grows.
/// Throws DegenerateSpeedError when u'^2 + v'^2 < kDegenerateSpeedTol.
double curvature(const CurveDerivatives& d);

/// Same curvature for a curve given by coordinate functions, using
/// fourth-order central differences with step h.
double curvature_parametric(const std::function<double(double)>& u,
                            const std::function<double(double)>& v, double psi,
                            double h = kDefaultCurvatureStep);

/// Closed-form curvature of the pitch curve:
///   (2 pi n / p) [(n psi - pi)^2 + 2 n^2 (2 pi eta - 1)(pi eta - 1)]
///              / [(n psi - pi)^2 + n^2 (2 pi eta - 1)^2]^(3/2)
/// Throws SingularityError at eta = 1/(2 pi).
double curvature_pitch(const DesignParams& params, double psi);

/// Bracketed numerator of curvature_pitch; shares its sign.
double curvature_pitch_numerator(const DesignParams& params, double psi);

/// (2 pi eta - 1)(pi eta - 1). Non-negative iff the pitch-curve curvature
/// keeps one sign over every psi.
double convexity_bracket(const DesignParams& params);

}  // namespace slideocam::cam
