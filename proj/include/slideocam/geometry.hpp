#pragma once

#include <cstddef>
#include <vector>

#include "slideocam/types.hpp"

/// Extended-angle solve, multi-lobe profile generation and conjugate-cam
/// assemblies as discretised polylines.
namespace slideocam::geometry {

struct SolverSettings {
    double residual_tol = 1e-10;   ///< |v_c(delta)| bound, mm
    double angle_tol = 1e-12;      ///< bracket width at which bisection stops, rad
    int max_iterations = 200;
    double bracket_margin = 1e-6;  ///< lower end of the bracket is -pi/n + margin
    double upper_end = -1e-12;     ///< upper end of the bracket
};

struct GenerationSettings {
    int samples = 720;          ///< points per lobe, uniform in psi
    double closure_tol = 1e-6;  ///< mm
    SolverSettings solver;
};

/// Root of v_c(psi) = 0 on (-pi/n, 0).
struct ExtendedAngle {
    double delta = 0.0;     ///< rad, negative
    double residual = 0.0;  ///< v_c(delta), mm
    int iterations = 0;
};

/// Bisection for the extended angle on [-pi/n + margin, upper_end].
///
/// Throws NoRootInBracket when v_c does not change sign on the bracket or
/// the final residual exceeds the tolerance, and the cam-core errors for a
/// singular eta.
ExtendedAngle solve_extended_angle(const DesignParams& params, const SolverSettings& settings = {});

/// Polyline of one cam (or pitch curve). Points are in the cam frame.
struct CamProfile {
    std::vector<PlanePoint> points;
    std::vector<double> psi;      ///< contact angle of each point
    std::vector<int> lobe_index;  ///< lobe each point belongs to
    bool closed = false;

    std::size_t size() const { return points.size(); }
};

/// m cams on one shaft; cam k is cam 0 rotated by -phase_offsets[k].
struct CamAssembly {
    std::vector<CamProfile> cams;
    std::vector<double> phase_offsets;  ///< k * 2 pi / (n m)
};

/// Canonical lobe sampled uniformly over [delta, 2 pi / n - delta].
/// Requires samples >= 16.
CamProfile generate_lobe(const DesignParams& params, double delta, int samples);

/// Pitch curve over the same domain as generate_lobe.
CamProfile generate_pitch_lobe(const DesignParams& params, double delta, int samples);

/// Full n-lobe profile: lobe k is the canonical lobe rotated by -2 pi k / n.
/// The shared endpoint of consecutive lobes is stored once; the last point
/// repeats the first. Throws ClosureFailure when consecutive lobes or the
/// two ends miss by more than closure_tol.
CamProfile generate_cam(const DesignParams& params, double delta, const GenerationSettings& settings = {});
CamProfile generate_cam(const DesignParams& params, const GenerationSettings& settings = {});

/// Full pitch curve, lobes joined as in generate_cam (the pitch curve itself
/// is not closed at lobe joints; `closed` reflects whether it is).
CamProfile generate_pitch_curve(const DesignParams& params, double delta, const GenerationSettings& settings = {});

/// m phased copies of the cam, offset by beta = 2 pi / (n m).
CamAssembly generate_assembly(const DesignParams& params, double delta, const GenerationSettings& settings = {});
CamAssembly generate_assembly(const DesignParams& params, const GenerationSettings& settings = {});

/// Pitch curves of every cam in the assembly, phased like generate_assembly.
CamAssembly generate_pitch_assembly(const DesignParams& params, double delta,
                                    const GenerationSettings& settings = {});

/// Geometric convexity of a closed polyline.
///
/// True iff all turns between consecutive edges share one sign (turns whose
/// sine is below 1e-9 count as straight) and the total turning is one full
/// revolution. Throws DegeneratePolyline for open input, fewer than three
/// distinct points, or repeated consecutive points.
bool is_convex_polyline(const CamProfile& profile);

/// Every point rotated about the origin by `angle`.
CamProfile rotated(const CamProfile& profile, double angle);

}  // namespace slideocam::geometry
