#include "dba/geo.hpp"

#include "dba/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace dba::geo {

namespace {

constexpr double kPi = std::numbers::pi;

void require_mercator_band(double lat_deg) {
    if (!(std::abs(lat_deg) <= kMercatorMaxLatDeg)) {
        throw DomainError("latitude " + std::to_string(lat_deg) +
                          " outside Web Mercator band [-85.05113, 85.05113]");
    }
}

} // namespace

double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

double normalize_lng(double lng) {
    double x = std::fmod(lng + 180.0, 360.0);
    if (x < 0) x += 360.0;
    return x - 180.0;
}

double normalize_bearing(double deg) {
    double x = std::fmod(deg, 360.0);
    if (x < 0) x += 360.0;
    return x;
}

double circular_diff_deg(double a, double b) {
    const double d = std::abs(normalize_bearing(a) - normalize_bearing(b));
    return d > 180.0 ? 360.0 - d : d;
}

GeoPoint::GeoPoint(double lat_deg, double lng_deg) {
    if (!(lat_deg >= -90.0 && lat_deg <= 90.0)) {
        throw DomainError("latitude " + std::to_string(lat_deg) + " outside [-90, 90]");
    }
    lat_ = lat_deg;
    lng_ = normalize_lng(lng_deg);
}

ZoomLevel::ZoomLevel(int z) {
    if (z < 0 || z > 22) {
        throw DomainError("zoom level " + std::to_string(z) + " outside [0, 22]");
    }
    z_ = z;
}

WorldPixel::WorldPixel(double x_px, double y_px, ZoomLevel zoom_level)
    : x(x_px), y(y_px), zoom(zoom_level) {
    const double size = static_cast<double>(zoom.world_size_px());
    if (!(x >= 0.0 && x < size) || !(y >= 0.0 && y < size)) {
        throw DomainError("world pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") outside [0, " + std::to_string(size) + ") at zoom " +
                          std::to_string(zoom.value()));
    }
}

WorldPixel project(const GeoPoint& p, ZoomLevel z) {
    require_mercator_band(p.lat());
    const double size = static_cast<double>(z.world_size_px());
    const double x = (p.lng() + 180.0) / 360.0 * size;
    const double phi = deg_to_rad(p.lat());
    double y = (1.0 - std::log(std::tan(phi) + 1.0 / std::cos(phi)) / kPi) / 2.0 * size;
    // The band limit sits a hair beyond atan(sinh(pi)); keep the edge inside
    // the world square.
    const double edge = std::nextafter(size, 0.0);
    y = std::clamp(y, 0.0, edge);
    return WorldPixel(std::min(x, edge), y, z);
}

GeoPoint unproject(const WorldPixel& px) {
    const double size = static_cast<double>(px.zoom.world_size_px());
    const double lng = px.x / size * 360.0 - 180.0;
    const double n = kPi * (1.0 - 2.0 * px.y / size);
    const double lat = rad_to_deg(std::atan(std::sinh(n)));
    return GeoPoint(lat, lng);
}

double ground_resolution(double lat_deg, ZoomLevel z) {
    require_mercator_band(lat_deg);
    const double base = std::cos(deg_to_rad(lat_deg)) * 2.0 * kPi * kEquatorRadiusM /
                        static_cast<double>(kTileSizePx);
    return std::ldexp(base, -z.value());
}

GeoPoint destination_point(const GeoPoint& origin, double bearing_deg, double distance_m) {
    if (distance_m < 0.0) {
        throw DomainError("geodesic distance must be nonnegative, got " +
                          std::to_string(distance_m));
    }
    if (distance_m == 0.0) return origin;
    const double delta = distance_m / kMeanEarthRadiusM;
    const double theta = deg_to_rad(normalize_bearing(bearing_deg));
    const double phi1 = deg_to_rad(origin.lat());
    const double lam1 = deg_to_rad(origin.lng());
    const double sin_phi2 =
        std::sin(phi1) * std::cos(delta) + std::cos(phi1) * std::sin(delta) * std::cos(theta);
    const double phi2 = std::asin(std::clamp(sin_phi2, -1.0, 1.0));
    if (std::abs(std::cos(phi2)) < 1e-12) {
        // Pole: longitude is undefined, use 0 by convention.
        return GeoPoint(rad_to_deg(phi2), 0.0);
    }
    const double lam2 = lam1 + std::atan2(std::sin(theta) * std::sin(delta) * std::cos(phi1),
                                          std::cos(delta) - std::sin(phi1) * sin_phi2);
    return GeoPoint(std::clamp(rad_to_deg(phi2), -90.0, 90.0), rad_to_deg(lam2));
}

double initial_bearing(const GeoPoint& from, const GeoPoint& to) {
    if (from == to) return 0.0;
    const double phi1 = deg_to_rad(from.lat());
    const double phi2 = deg_to_rad(to.lat());
    const double dlam = deg_to_rad(to.lng() - from.lng());
    const double y = std::sin(dlam) * std::cos(phi2);
    const double x = std::cos(phi1) * std::sin(phi2) - std::sin(phi1) * std::cos(phi2) * std::cos(dlam);
    return normalize_bearing(rad_to_deg(std::atan2(y, x)));
}

PolygonRing::PolygonRing(std::vector<GeoPoint> vertices) {
    if (!vertices.empty() && vertices.front() == vertices.back()) {
        vertices.pop_back();
    }
    std::vector<GeoPoint> distinct;
    for (const auto& v : vertices) {
        if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) {
            distinct.push_back(v);
        }
    }
    if (distinct.size() < 3) {
        throw DomainError("polygon ring needs at least 3 distinct vertices, got " +
                          std::to_string(distinct.size()));
    }
    verts_ = std::move(vertices);
    verts_.push_back(verts_.front());
}

Centroid ring_centroid(const PolygonRing& ring) {
    const auto& vs = ring.vertices();
    const std::size_t n = ring.distinct_count();

    double mean_lat = 0.0;
    double mean_lng = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_lat += vs[i].lat();
        mean_lng += vs[i].lng();
    }
    const GeoPoint center(mean_lat / static_cast<double>(n), mean_lng / static_cast<double>(n));

    // Azimuthal-equidistant local frame about the vertex mean: x east, y north,
    // in meters.
    std::vector<double> xs(n + 1);
    std::vector<double> ys(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double b = deg_to_rad(initial_bearing(center, vs[i]));
        const double phi1 = deg_to_rad(center.lat());
        const double phi2 = deg_to_rad(vs[i].lat());
        const double dlam = deg_to_rad(vs[i].lng() - center.lng());
        const double cc = std::clamp(std::sin(phi1) * std::sin(phi2) +
                                         std::cos(phi1) * std::cos(phi2) * std::cos(dlam),
                                     -1.0, 1.0);
        const double rho = std::acos(cc) * kMeanEarthRadiusM;
        xs[i] = rho * std::sin(b);
        ys[i] = rho * std::cos(b);
    }

    double area2 = 0.0;
    double cx6 = 0.0;
    double cy6 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cross = xs[i] * ys[i + 1] - xs[i + 1] * ys[i];
        area2 += cross;
        cx6 += (xs[i] + xs[i + 1]) * cross;
        cy6 += (ys[i] + ys[i + 1]) * cross;
    }

    if (std::abs(area2) < 1e-9) {
        return Centroid{center, true};
    }
    const double cx = cx6 / (3.0 * area2);
    const double cy = cy6 / (3.0 * area2);
    const double rho = std::hypot(cx, cy);
    if (rho == 0.0) {
        return Centroid{center, false};
    }
    const double bearing = rad_to_deg(std::atan2(cx, cy));
    return Centroid{destination_point(center, bearing, rho), false};
}

} // namespace dba::geo
