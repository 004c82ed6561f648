#pragma once

#include "dba/geo.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace dba::assets {

enum class MapKind { roadmap, satellite };

std::string to_string(MapKind kind);
MapKind map_kind_from_string(const std::string& s);

/// One frame of an orbital acquisition. The camera sits on a circle of
/// radius orbit_radius_m around the target; heading_deg is the bearing of
/// the camera as seen from the target, and the camera looks back along
/// heading + 180.
struct CameraPose {
    geo::GeoPoint target{0.0, 0.0};
    geo::GeoPoint camera_position{0.0, 0.0};
    double altitude_m = 0.0;
    double heading_deg = 0.0;
    double tilt_deg = 0.0;
    double orbit_radius_m = 0.0;
};

/// Parameters of one static-map retrieval.
struct StaticMapRequest {
    StaticMapRequest(geo::GeoPoint center_pt, geo::ZoomLevel zoom_level, MapKind map_kind,
                     int width = 640, int height = 640,
                     std::optional<geo::PolygonRing> overlay_ring = std::nullopt);

    geo::GeoPoint center;
    geo::ZoomLevel zoom;
    MapKind kind;
    int width_px;
    int height_px;
    std::optional<geo::PolygonRing> overlay;
};

enum class AssetKind { oblique_orbit, satellite, street_map };

std::string to_string(AssetKind kind);
AssetKind asset_kind_from_string(const std::string& s);

using Acquisition = std::variant<CameraPose, StaticMapRequest>;

/// One retrieved or ingested image. asset_id is the SHA-256 of the stored
/// bytes; the kind always matches the acquisition variant (oblique_orbit for
/// camera poses, map kinds for static-map requests).
struct ImageAsset {
    std::string asset_id;
    AssetKind kind = AssetKind::satellite;
    Acquisition acquisition{CameraPose{}};
    int width_px = 0;
    int height_px = 0;
    std::string media_type;
    std::string storage_path;
};

struct ImageDims {
    int width = 0;
    int height = 0;
};

/// Reads the pixel dimensions from a PNG IHDR or JPEG SOF marker without a
/// full decode. Returns nullopt for anything else.
std::optional<ImageDims> sniff_image_dimensions(std::span<const unsigned char> bytes);

/// Media type from magic bytes; empty when unrecognized.
std::string sniff_media_type(std::span<const unsigned char> bytes);

/// Minimal deterministic PNG encoder (RGB8, stored deflate blocks). Used by
/// the deterministic mock providers and test fixtures.
std::vector<unsigned char> encode_png_rgb(int width, int height,
                                          std::span<const unsigned char> rgb);

/// Content-addressed image store. Files live under root/<asset_id>.<ext> and
/// a manifest.json maps asset_id to metadata. Writes of identical content are
/// idempotent; the store is safe to share across threads.
class AssetStore {
public:
    explicit AssetStore(std::filesystem::path root);

    ImageAsset put_image(std::span<const unsigned char> bytes, AssetKind kind,
                         Acquisition acquisition);

    std::optional<ImageAsset> find(const std::string& asset_id) const;
    std::vector<unsigned char> read_bytes(const std::string& asset_id) const;
    std::size_t size() const;
    const std::filesystem::path& root() const { return root_; }

private:
    void save_manifest_locked();

    std::filesystem::path root_;
    mutable std::mutex mu_;
    std::map<std::string, ImageAsset> by_id_;
};

} // namespace dba::assets
