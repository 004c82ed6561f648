#include "dba/json_codec.hpp"

#include "dba/error.hpp"

namespace dba::codec {

Json geo_point(const geo::GeoPoint& p) {
    return Json{{"lat", p.lat()}, {"lng", p.lng()}};
}

geo::GeoPoint geo_point(const Json& j) {
    if (!j.is_object() || !j.contains("lat") || !j.contains("lng")) {
        throw ParseError("expected {lat, lng} object, got: " + j.dump());
    }
    return geo::GeoPoint(j.at("lat").get<double>(), j.at("lng").get<double>());
}

Json polygon_ring(const geo::PolygonRing& r) {
    Json arr = Json::array();
    for (const auto& v : r.vertices()) arr.push_back(geo_point(v));
    return arr;
}

geo::PolygonRing polygon_ring(const Json& j) {
    std::vector<geo::GeoPoint> verts;
    for (const auto& item : j) verts.push_back(geo_point(item));
    return geo::PolygonRing(std::move(verts));
}

Json camera_pose(const assets::CameraPose& pose) {
    return Json{{"target", geo_point(pose.target)},
                {"camera", geo_point(pose.camera_position)},
                {"altitude_m", pose.altitude_m},
                {"heading_deg", pose.heading_deg},
                {"tilt_deg", pose.tilt_deg},
                {"orbit_radius_m", pose.orbit_radius_m}};
}

assets::CameraPose camera_pose(const Json& j) {
    assets::CameraPose pose;
    pose.target = geo_point(j.at("target"));
    pose.camera_position = geo_point(j.at("camera"));
    pose.altitude_m = j.at("altitude_m").get<double>();
    pose.heading_deg = j.at("heading_deg").get<double>();
    pose.tilt_deg = j.at("tilt_deg").get<double>();
    pose.orbit_radius_m = j.at("orbit_radius_m").get<double>();
    return pose;
}

Json static_map_request(const assets::StaticMapRequest& req) {
    Json j{{"center", geo_point(req.center)},
           {"zoom", req.zoom.value()},
           {"map_kind", assets::to_string(req.kind)},
           {"width_px", req.width_px},
           {"height_px", req.height_px}};
    if (req.overlay) j["overlay"] = polygon_ring(*req.overlay);
    return j;
}

assets::StaticMapRequest static_map_request(const Json& j) {
    std::optional<geo::PolygonRing> overlay;
    if (j.contains("overlay")) overlay = polygon_ring(j.at("overlay"));
    return assets::StaticMapRequest(
        geo_point(j.at("center")), geo::ZoomLevel(j.at("zoom").get<int>()),
        assets::map_kind_from_string(j.at("map_kind").get<std::string>()),
        j.at("width_px").get<int>(), j.at("height_px").get<int>(), std::move(overlay));
}

Json image_asset(const assets::ImageAsset& asset) {
    Json j{{"asset_id", asset.asset_id},
           {"kind", assets::to_string(asset.kind)},
           {"width_px", asset.width_px},
           {"height_px", asset.height_px},
           {"media_type", asset.media_type},
           {"storage_path", asset.storage_path}};
    if (std::holds_alternative<assets::CameraPose>(asset.acquisition)) {
        j["acquisition"] = Json{{"type", "camera_pose"},
                                {"pose", camera_pose(std::get<assets::CameraPose>(asset.acquisition))}};
    } else {
        j["acquisition"] =
            Json{{"type", "static_map"},
                 {"request", static_map_request(std::get<assets::StaticMapRequest>(asset.acquisition))}};
    }
    return j;
}

assets::ImageAsset image_asset(const Json& j) {
    assets::ImageAsset asset;
    asset.asset_id = j.at("asset_id").get<std::string>();
    asset.kind = assets::asset_kind_from_string(j.at("kind").get<std::string>());
    asset.width_px = j.at("width_px").get<int>();
    asset.height_px = j.at("height_px").get<int>();
    asset.media_type = j.at("media_type").get<std::string>();
    asset.storage_path = j.at("storage_path").get<std::string>();
    const auto& acq = j.at("acquisition");
    const auto type = acq.at("type").get<std::string>();
    if (type == "camera_pose") {
        asset.acquisition = camera_pose(acq.at("pose"));
    } else if (type == "static_map") {
        asset.acquisition = static_map_request(acq.at("request"));
    } else {
        throw ParseError("unknown acquisition type '" + type + "'");
    }
    return asset;
}

} // namespace dba::codec
