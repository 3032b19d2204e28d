#include "slideocam/types.hpp"

#include <cmath>
#include <string>

#include "slideocam/errors.hpp"

namespace slideocam {

namespace {

void require_same_frame(const PlanePoint& a, const PlanePoint& b) {
    if (a.frame != b.frame) {
        throw FrameMismatch("cam-core", "points from the fixed and cam frames cannot be combined "
                                        "without an explicit rotation");
    }
}

}  // namespace

void DesignParams::validate() const {
    const auto fail = [](const char* field, const std::string& what) {
        throw ValidationError("cam-core", field, what);
    };
    if (!(std::isfinite(p) && p > 0.0)) fail("p", "pitch must be positive, got " + std::to_string(p));
    if (n < 1) fail("n", "lobe count must be at least 1, got " + std::to_string(n));
    if (m < 1) fail("m", "cam count must be at least 1, got " + std::to_string(m));
    if (!(std::isfinite(e) && e > 0.0)) fail("e", "offset must be positive, got " + std::to_string(e));
    if (!(std::isfinite(a4) && a4 > 0.0))
        fail("a4", "roller radius must be positive, got " + std::to_string(a4));
    if (!(std::isfinite(b) && b >= 0.0))
        fail("b", "shaft radius must be non-negative, got " + std::to_string(b));
}

double norm(const PlanePoint& pt) { return std::hypot(pt.x, pt.y); }

double distance(const PlanePoint& a, const PlanePoint& b) {
    require_same_frame(a, b);
    return std::hypot(a.x - b.x, a.y - b.y);
}

PlanePoint midpoint(const PlanePoint& a, const PlanePoint& b) {
    require_same_frame(a, b);
    return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y), a.frame};
}

PlanePoint rotated(const PlanePoint& pt, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * pt.x - s * pt.y, s * pt.x + c * pt.y, pt.frame};
}

PlanePoint to_cam_frame(const PlanePoint& fixed, double psi) {
    if (fixed.frame != Frame::Fixed) {
        throw FrameMismatch("cam-core", "to_cam_frame expects a fixed-frame point");
    }
    PlanePoint out = rotated(fixed, -psi);
    out.frame = Frame::Cam;
    return out;
}

PlanePoint to_fixed_frame(const PlanePoint& cam, double psi) {
    if (cam.frame != Frame::Cam) {
        throw FrameMismatch("cam-core", "to_fixed_frame expects a cam-frame point");
    }
    PlanePoint out = rotated(cam, psi);
    out.frame = Frame::Fixed;
    return out;
}

}  // namespace slideocam
