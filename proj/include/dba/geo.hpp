#pragma once

#include <cstddef>
#include <vector>

namespace dba::geo {

/// Latitude cutoff of the square Web Mercator world (the standard tile bound).
inline constexpr double kMercatorMaxLatDeg = 85.05113;

/// Equatorial radius used by Web Mercator tile math (WGS84 semi-major axis).
inline constexpr double kEquatorRadiusM = 6378137.0;

/// Mean earth radius used for spherical great-circle geodesics.
inline constexpr double kMeanEarthRadiusM = 6371008.8;

/// Pixel side of one map tile.
inline constexpr int kTileSizePx = 256;

double deg_to_rad(double deg);
double rad_to_deg(double rad);

/// Normalizes a longitude into [-180, 180).
double normalize_lng(double lng);

/// Normalizes a bearing into [0, 360).
double normalize_bearing(double deg);

/// Smallest absolute angular difference between two bearings, in [0, 180].
double circular_diff_deg(double a, double b);

/// A point on the sphere. Latitude is validated on construction, longitude is
/// normalized into [-180, 180). Latitudes outside [-90, 90] are rejected, not
/// clamped.
class GeoPoint {
public:
    GeoPoint(double lat_deg, double lng_deg);

    double lat() const { return lat_; }
    double lng() const { return lng_; }

    friend bool operator==(const GeoPoint& a, const GeoPoint& b) {
        return a.lat_ == b.lat_ && a.lng_ == b.lng_;
    }

private:
    double lat_;
    double lng_;
};

/// Discrete map scale index in [0, 22].
class ZoomLevel {
public:
    explicit ZoomLevel(int z);

    int value() const { return z_; }

    /// Side of the world square in pixels: 256 * 2^z.
    long world_size_px() const { return static_cast<long>(kTileSizePx) << z_; }

    friend bool operator==(ZoomLevel a, ZoomLevel b) { return a.z_ == b.z_; }

private:
    int z_;
};

/// Position on the 256*2^z pixel world square. 0 <= x, y < 256*2^z.
struct WorldPixel {
    WorldPixel(double x_px, double y_px, ZoomLevel zoom_level);

    double x;
    double y;
    ZoomLevel zoom;
};

/// Spherical Web Mercator projection onto the world-pixel square.
/// Rejects latitudes outside the +-85.05113 degree validity band.
WorldPixel project(const GeoPoint& p, ZoomLevel z);

/// Inverse of project at the same zoom.
GeoPoint unproject(const WorldPixel& px);

/// Meters per pixel at the given latitude and zoom:
/// cos(lat) * 2*pi*R / (256 * 2^z). Scaling by zoom is exact binary scaling,
/// so stepping z by one halves the result bitwise.
double ground_resolution(double lat_deg, ZoomLevel z);

/// Great-circle destination on a spherical earth (R = 6371008.8 m).
/// A zero distance returns the origin unchanged. At the poles the longitude
/// is conventionally 0.
GeoPoint destination_point(const GeoPoint& origin, double bearing_deg, double distance_m);

/// Initial bearing of the great circle from `from` to `to`, in [0, 360).
/// Returns 0 for coincident points.
double initial_bearing(const GeoPoint& from, const GeoPoint& to);

/// Closed ring of at least three distinct vertices. Construction normalizes
/// the ring so that the first vertex equals the last; normalization is
/// idempotent.
class PolygonRing {
public:
    explicit PolygonRing(std::vector<GeoPoint> vertices);

    /// Closed vertex list: front() == back().
    const std::vector<GeoPoint>& vertices() const { return verts_; }

    /// Number of vertices excluding the closing duplicate.
    std::size_t distinct_count() const { return verts_.size() - 1; }

    friend bool operator==(const PolygonRing& a, const PolygonRing& b) {
        return a.verts_ == b.verts_;
    }

private:
    std::vector<GeoPoint> verts_;
};

struct Centroid {
    GeoPoint point;
    /// True when the ring had no usable area and the vertex mean was used.
    bool degenerate = false;
};

/// Shoelace centroid computed in a local azimuthal-equidistant frame about
/// the vertex mean. Zero-area rings fall back to the vertex mean and are
/// flagged degenerate.
Centroid ring_centroid(const PolygonRing& ring);

} // namespace dba::geo
