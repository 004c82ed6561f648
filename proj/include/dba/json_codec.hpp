#pragma once

#include "dba/assets.hpp"
#include "dba/geo.hpp"

#include <json.hpp>

namespace dba::codec {

using Json = nlohmann::ordered_json;

Json geo_point(const geo::GeoPoint& p);
geo::GeoPoint geo_point(const Json& j);

Json polygon_ring(const geo::PolygonRing& r);
geo::PolygonRing polygon_ring(const Json& j);

Json camera_pose(const assets::CameraPose& pose);
assets::CameraPose camera_pose(const Json& j);

Json static_map_request(const assets::StaticMapRequest& req);
assets::StaticMapRequest static_map_request(const Json& j);

Json image_asset(const assets::ImageAsset& asset);
assets::ImageAsset image_asset(const Json& j);

} // namespace dba::codec
