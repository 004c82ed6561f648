#pragma once

#include "dba/assets.hpp"
#include "dba/geo.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace dba::orbit {

using assets::CameraPose;

/// Description of a circular acquisition path around a target.
struct OrbitSpec {
    geo::GeoPoint target{0.0, 0.0};
    int count = 31;
    double orbit_radius_m = 250.0;
    double altitude_m = 150.0;
    double tilt_deg = 45.0;
    double start_heading_deg = 0.0;
};

/// Bearing along which the camera looks, expressed in the target's local
/// frame: the reverse of the target-to-camera bearing. For a pose built from
/// destination_point this equals heading + 180 (mod 360).
double look_at_bearing(const CameraPose& pose);

/// True when the pose satisfies both construction invariants: the camera
/// sits at destination_point(target, heading, radius) and the look-at
/// bearing is heading + 180 within tol_deg.
bool pose_is_consistent(const CameraPose& pose, double tol_deg = 1e-6);

/// count poses with headings start + k*(360/count), k = 0..count-1.
std::vector<CameraPose> generate_orbit(const OrbitSpec& spec);

/// Greedy nearest-heading subsampling: for each target heading
/// 0, step, 2*step, ... < 360 relative to the first pose, selects the pose
/// with minimal circular heading distance (ties toward the lower index).
/// The result is a subsequence of the input.
std::vector<CameraPose> subsample_by_heading(const std::vector<CameraPose>& poses,
                                             double step_deg);

/// Versioned keyframe document (.orbit). Byte output is deterministic for
/// identical input.
std::string export_orbit_document(const std::vector<CameraPose>& poses);
std::vector<CameraPose> parse_orbit_document(const std::string& text);

struct IntakeIssue {
    int frame_index = -1;
    std::string message;
};

struct IntakeResult {
    std::vector<assets::ImageAsset> assets;
    std::vector<IntakeIssue> issues;
};

/// Ingests externally rendered frames named frame_{index:03}.{png|jpg|jpeg},
/// one per pose, hashing each into the store as an oblique_orbit asset with
/// its pose attached. Missing frames raise IntakeError listing every missing
/// index; unreadable files are reported per frame while the rest proceed.
IntakeResult intake_images(const std::filesystem::path& directory,
                           const std::vector<CameraPose>& poses, assets::AssetStore& store);

} // namespace dba::orbit
