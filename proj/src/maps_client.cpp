#include "dba/maps_client.hpp"

#include "dba/error.hpp"
#include "dba/util.hpp"

#include <json.hpp>

#include <utility>

namespace dba::maps {

using nlohmann::json;

namespace {

std::string body_excerpt(const std::string& body) {
    constexpr std::size_t kMax = 200;
    if (body.size() <= kMax) return body;
    return body.substr(0, kMax) + "...";
}

std::string coord_pair(const geo::GeoPoint& p) {
    return util::format_coord(p.lat()) + "," + util::format_coord(p.lng());
}

json parse_json_body(const http::Response& resp, const std::string& operation) {
    try {
        return json::parse(resp.body);
    } catch (const json::parse_error&) {
        throw ParseError(operation + " response is not valid JSON: " + body_excerpt(resp.body));
    }
}

geo::GeoPoint parse_lat_lng(const json& j) {
    return geo::GeoPoint(j.at("lat").get<double>(), j.at("lng").get<double>());
}

// GeoJSON polygons carry [lng, lat] positions.
geo::PolygonRing parse_geojson_ring(const json& coords) {
    std::vector<geo::GeoPoint> verts;
    for (const auto& pos : coords) {
        verts.emplace_back(pos.at(1).get<double>(), pos.at(0).get<double>());
    }
    return geo::PolygonRing(std::move(verts));
}

std::string overlay_path_param(const geo::PolygonRing& ring) {
    std::string path = "color:0xff0000ff|weight:2";
    for (const auto& v : ring.vertices()) {
        path += "|" + coord_pair(v);
    }
    return path;
}

} // namespace

BuildingQuery::BuildingQuery(Kind kind, std::string text, std::optional<geo::GeoPoint> point)
    : kind_(kind), text_(std::move(text)), point_(point) {}

BuildingQuery BuildingQuery::address(const std::string& text) {
    const std::string trimmed = util::trim(text);
    if (trimmed.empty()) throw DomainError("address query is empty");
    return BuildingQuery(Kind::address, trimmed, std::nullopt);
}

BuildingQuery BuildingQuery::place_name(const std::string& text) {
    const std::string trimmed = util::trim(text);
    if (trimmed.empty()) throw DomainError("place name query is empty");
    return BuildingQuery(Kind::place_name, trimmed, std::nullopt);
}

BuildingQuery BuildingQuery::postal_code(const std::string& text) {
    const std::string trimmed = util::trim(text);
    if (trimmed.empty()) throw DomainError("postal code query is empty");
    return BuildingQuery(Kind::postal_code, trimmed, std::nullopt);
}

BuildingQuery BuildingQuery::coordinates(geo::GeoPoint point) {
    return BuildingQuery(Kind::coordinates, coord_pair(point), point);
}

std::string BuildingQuery::describe() const {
    switch (kind_) {
    case Kind::address: return "address '" + text_ + "'";
    case Kind::place_name: return "place '" + text_ + "'";
    case Kind::postal_code: return "postal code '" + text_ + "'";
    case Kind::coordinates: return "coordinates " + text_;
    }
    return text_;
}

http::Request MapsClient::geocode_request(const BuildingQuery& query) {
    http::Request req;
    req.path = "/maps/api/geocode/json";
    switch (query.kind()) {
    case BuildingQuery::Kind::address:
    case BuildingQuery::Kind::place_name:
        req.params.push_back({"address", query.text()});
        break;
    case BuildingQuery::Kind::postal_code:
        req.params.push_back({"components", "postal_code:" + query.text()});
        break;
    case BuildingQuery::Kind::coordinates:
        req.params.push_back({"latlng", query.text()});
        break;
    }
    req.params.push_back({"extra_computations", "BUILDING_AND_ENTRANCES"});
    return req;
}

http::Request MapsClient::elevation_request(const geo::GeoPoint& point) {
    http::Request req;
    req.path = "/maps/api/elevation/json";
    req.params.push_back({"locations", coord_pair(point)});
    return req;
}

http::Request MapsClient::static_map_request(const assets::StaticMapRequest& request) {
    http::Request req;
    req.path = "/maps/api/staticmap";
    req.params.push_back({"center", coord_pair(request.center)});
    req.params.push_back({"zoom", std::to_string(request.zoom.value())});
    req.params.push_back({"size", std::to_string(request.width_px) + "x" +
                                      std::to_string(request.height_px)});
    req.params.push_back({"maptype", assets::to_string(request.kind)});
    if (request.overlay) {
        req.params.push_back({"path", overlay_path_param(*request.overlay)});
    }
    return req;
}

MapsClient::MapsClient(std::shared_ptr<http::Transport> transport,
                       std::shared_ptr<assets::AssetStore> store)
    : transport_(std::move(transport)), store_(std::move(store)) {
    if (!transport_) throw ConfigError("maps client needs a transport");
    if (!store_) throw ConfigError("maps client needs an asset store");
}

http::Response MapsClient::send_checked(const http::Request& req, const std::string& operation) {
    const http::Response resp = transport_->send(req);
    if (resp.status != 200) {
        throw TransportError(operation + " failed with HTTP " + std::to_string(resp.status) +
                             ": " + body_excerpt(resp.body));
    }
    return resp;
}

ProvenanceEntry MapsClient::provenance_for(const http::Request& req,
                                           const std::string& operation) {
    return ProvenanceEntry{http::request_signature(req), operation,
                           sequence_.fetch_add(1) + 1};
}

BuildingRecord MapsClient::geocode(const BuildingQuery& query) {
    const http::Request req = geocode_request(query);
    const ProvenanceEntry prov = provenance_for(req, "geocode");
    const http::Response resp = send_checked(req, "geocoding");
    const json doc = parse_json_body(resp, "geocoding");

    const std::string status = doc.value("status", std::string{});
    if (status == "ZERO_RESULTS") {
        throw NotFoundError("no geocoding result for " + query.describe(), query.text());
    }
    if (status != "OK") {
        throw TransportError("geocoding returned status '" + status + "'");
    }
    if (!doc.contains("results") || !doc.at("results").is_array() || doc.at("results").empty()) {
        throw ParseError("geocoding response has no results array: " + body_excerpt(resp.body));
    }

    const json& first = doc.at("results").at(0);
    BuildingRecord record;
    try {
        record.formatted_address = first.at("formatted_address").get<std::string>();
        record.location = parse_lat_lng(first.at("geometry").at("location"));
        record.place_id = first.value("place_id", std::string{});
        if (first.contains("entrances")) {
            for (const auto& entry : first.at("entrances")) {
                record.entrances.push_back(parse_lat_lng(entry.at("location")));
            }
        }
        if (first.contains("buildings") && !first.at("buildings").empty()) {
            const json& building = first.at("buildings").at(0);
            if (building.contains("building_outlines") && !building.at("building_outlines").empty()) {
                const json& outline = building.at("building_outlines").at(0);
                record.footprint = parse_geojson_ring(
                    outline.at("display_polygon").at("coordinates").at(0));
            }
        }
    } catch (const json::exception& e) {
        throw ParseError("geocoding response missing documented fields (" +
                         std::string(e.what()) + "): " + body_excerpt(resp.body));
    }
    record.provenance.push_back(prov);
    return record;
}

double MapsClient::elevation(const geo::GeoPoint& point) {
    const http::Request req = elevation_request(point);
    const http::Response resp = send_checked(req, "elevation");
    const json doc = parse_json_body(resp, "elevation");
    if (doc.value("status", std::string{}) != "OK" || !doc.contains("results") ||
        doc.at("results").empty()) {
        throw ParseError("elevation response has no result: " + body_excerpt(resp.body));
    }
    try {
        return doc.at("results").at(0).at("elevation").get<double>();
    } catch (const json::exception& e) {
        throw ParseError("elevation response missing documented fields (" +
                         std::string(e.what()) + "): " + body_excerpt(resp.body));
    }
}

assets::ImageAsset MapsClient::static_map(const assets::StaticMapRequest& request) {
    const http::Request req = static_map_request(request);
    const http::Response resp = send_checked(req, "static map");
    const auto bytes = std::span<const unsigned char>(
        reinterpret_cast<const unsigned char*>(resp.body.data()), resp.body.size());
    const std::string sniffed = assets::sniff_media_type(bytes);
    const bool content_type_image = resp.content_type.rfind("image/", 0) == 0;
    if (sniffed.empty() && !content_type_image) {
        throw ParseError("static map response is not an image (content type '" +
                         resp.content_type + "'): " + body_excerpt(resp.body));
    }
    const assets::AssetKind kind = request.kind == assets::MapKind::satellite
                                       ? assets::AssetKind::satellite
                                       : assets::AssetKind::street_map;
    return store_->put_image(bytes, kind, request);
}

BuildingBundle MapsClient::retrieve_building_bundle(const BuildingQuery& query,
                                                    const BundleOptions& options) {
    BuildingBundle bundle;
    bundle.record = geocode(query);

    const geo::GeoPoint& center = bundle.record.location;
    try {
        const http::Request elev_req = elevation_request(center);
        const ProvenanceEntry prov = provenance_for(elev_req, "elevation");
        bundle.record.ground_elevation_m = elevation(center);
        bundle.record.provenance.push_back(prov);
    } catch (const Error& e) {
        bundle.issues.push_back({"elevation", e.what()});
    }

    auto fetch_map = [&](geo::ZoomLevel zoom, assets::MapKind kind) {
        std::optional<geo::PolygonRing> overlay;
        if (options.overlay_footprint && kind == assets::MapKind::satellite) {
            overlay = bundle.record.footprint;
        }
        const assets::StaticMapRequest map_req(center, zoom, kind, options.map_width_px,
                                               options.map_height_px, std::move(overlay));
        const std::string op =
            "static_map " + assets::to_string(kind) + " z" + std::to_string(zoom.value());
        try {
            const http::Request wire = static_map_request(map_req);
            const ProvenanceEntry prov = provenance_for(wire, op);
            bundle.assets.push_back(static_map(map_req));
            bundle.record.provenance.push_back(prov);
        } catch (const Error& e) {
            bundle.issues.push_back({op, e.what()});
        }
    };

    for (const auto zoom : options.roadmap_zooms) fetch_map(zoom, assets::MapKind::roadmap);
    for (const auto zoom : options.satellite_zooms) fetch_map(zoom, assets::MapKind::satellite);
    return bundle;
}

} // namespace dba::maps
