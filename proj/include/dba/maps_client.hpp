#pragma once

#include "dba/assets.hpp"
#include "dba/geo.hpp"
#include "dba/http.hpp"

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dba::maps {

/// Exactly one way of naming a building: street address, proper name,
/// postal code, or geographic coordinates.
class BuildingQuery {
public:
    enum class Kind { address, place_name, postal_code, coordinates };

    static BuildingQuery address(const std::string& text);
    static BuildingQuery place_name(const std::string& text);
    static BuildingQuery postal_code(const std::string& text);
    static BuildingQuery coordinates(geo::GeoPoint point);

    Kind kind() const { return kind_; }
    const std::string& text() const { return text_; }
    const geo::GeoPoint& point() const { return *point_; }

    /// Human-readable form for error messages.
    std::string describe() const;

private:
    BuildingQuery(Kind kind, std::string text, std::optional<geo::GeoPoint> point);

    Kind kind_;
    std::string text_;
    std::optional<geo::GeoPoint> point_;
};

/// Which API request contributed a field, in issue order.
struct ProvenanceEntry {
    std::string signature;
    std::string operation;
    std::int64_t sequence = 0;
};

/// Geocoded identity of a building.
struct BuildingRecord {
    std::string formatted_address;
    geo::GeoPoint location{0.0, 0.0};
    std::vector<geo::GeoPoint> entrances;
    std::optional<geo::PolygonRing> footprint;
    std::optional<double> ground_elevation_m;
    std::string place_id;
    std::vector<ProvenanceEntry> provenance;
};

/// Static-map retrieval plan for one bundle. Call count is a pure function
/// of this configuration: 2 + |satellite_zooms| + |roadmap_zooms|.
struct BundleOptions {
    std::vector<geo::ZoomLevel> satellite_zooms{geo::ZoomLevel(18), geo::ZoomLevel(19)};
    std::vector<geo::ZoomLevel> roadmap_zooms{};
    int map_width_px = 640;
    int map_height_px = 640;
    /// Draw the geocoded footprint on satellite images when available.
    bool overlay_footprint = true;
};

struct CallIssue {
    std::string operation;
    std::string message;
};

struct BuildingBundle {
    BuildingRecord record;
    std::vector<assets::ImageAsset> assets;
    std::vector<CallIssue> issues;
};

/// Client for the cloud-mapping HTTP service: geocoding and reverse
/// geocoding, elevation, and static maps. All requests flow through the
/// injected transport, so tests can run against mocks, cassettes, or a cache.
class MapsClient {
public:
    MapsClient(std::shared_ptr<http::Transport> transport,
               std::shared_ptr<assets::AssetStore> store);

    BuildingRecord geocode(const BuildingQuery& query);
    double elevation(const geo::GeoPoint& point);
    assets::ImageAsset static_map(const assets::StaticMapRequest& request);

    /// Runs the retrieval DAG: geocode first, then elevation and the
    /// configured static maps against the geocoded location. Geocode failure
    /// aborts; downstream failures are collected per call and the bundle is
    /// returned partially filled.
    BuildingBundle retrieve_building_bundle(const BuildingQuery& query,
                                            const BundleOptions& options = {});

    // Request builders, exposed so wire formats can be golden-tested.
    static http::Request geocode_request(const BuildingQuery& query);
    static http::Request elevation_request(const geo::GeoPoint& point);
    static http::Request static_map_request(const assets::StaticMapRequest& request);

private:
    http::Response send_checked(const http::Request& req, const std::string& operation);
    ProvenanceEntry provenance_for(const http::Request& req, const std::string& operation);

    std::shared_ptr<http::Transport> transport_;
    std::shared_ptr<assets::AssetStore> store_;
    std::atomic<std::int64_t> sequence_{0};
};

} // namespace dba::maps
