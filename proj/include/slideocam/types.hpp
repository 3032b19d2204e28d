#pragma once

#include <numbers>

namespace slideocam {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double to_degrees(double rad) { return rad * 180.0 / kPi; }
inline constexpr double to_radians(double deg) { return deg * kPi / 180.0; }

/// Parameter set of one Slide-o-Cam transmission. Lengths in millimetres.
struct DesignParams {
    double p = 50.0;   ///< pitch: follower travel per cam turn
    int n = 1;         ///< lobes per cam
    int m = 2;         ///< conjugate cams on the shaft
    double e = 9.0;    ///< offset from cam axis to the line of roller centres
    double a4 = 10.0;  ///< roller radius
    double b = 4.25;   ///< camshaft radius

    /// Non-dimensional offset e/p.
    double eta() const { return e / p; }

    /// Throws ValidationError naming the first field that breaks
    /// p > 0, n >= 1, m >= 1, e > 0, a4 > 0, b >= 0.
    void validate() const;

    friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// Reference frame of a planar point: x-y is fixed to the machine frame,
/// u-v rotates with the cam. Both share the origin on the cam axis.
enum class Frame { Fixed, Cam };

/// 2-D point tagged with its frame. In the cam frame x holds u and y holds v.
struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
    Frame frame = Frame::Cam;

    double u() const { return x; }
    double v() const { return y; }

    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

double norm(const PlanePoint& pt);

// Both throw FrameMismatch when the frames differ.
double distance(const PlanePoint& a, const PlanePoint& b);
PlanePoint midpoint(const PlanePoint& a, const PlanePoint& b);

/// Rotates about the common origin; the frame tag is kept.
PlanePoint rotated(const PlanePoint& pt, double angle);

/// Express a fixed-frame point in the cam frame at cam angle psi.
PlanePoint to_cam_frame(const PlanePoint& fixed, double psi);
/// Express a cam-frame point in the fixed frame at cam angle psi.
PlanePoint to_fixed_frame(const PlanePoint& cam, double psi);

}  // namespace slideocam
