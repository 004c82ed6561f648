#include "dba/assets.hpp"

#include "dba/error.hpp"
#include "dba/json_codec.hpp"
#include "dba/util.hpp"

#include <array>
#include <cstring>
#include <fstream>

namespace dba::assets {

std::string to_string(MapKind kind) {
    return kind == MapKind::roadmap ? "roadmap" : "satellite";
}

MapKind map_kind_from_string(const std::string& s) {
    if (s == "roadmap") return MapKind::roadmap;
    if (s == "satellite") return MapKind::satellite;
    throw ParseError("unknown map kind '" + s + "'");
}

std::string to_string(AssetKind kind) {
    switch (kind) {
    case AssetKind::oblique_orbit: return "oblique_orbit";
    case AssetKind::satellite: return "satellite";
    case AssetKind::street_map: return "street_map";
    }
    return "satellite";
}

AssetKind asset_kind_from_string(const std::string& s) {
    if (s == "oblique_orbit") return AssetKind::oblique_orbit;
    if (s == "satellite") return AssetKind::satellite;
    if (s == "street_map") return AssetKind::street_map;
    throw ParseError("unknown asset kind '" + s + "'");
}

StaticMapRequest::StaticMapRequest(geo::GeoPoint center_pt, geo::ZoomLevel zoom_level,
                                   MapKind map_kind, int width, int height,
                                   std::optional<geo::PolygonRing> overlay_ring)
    : center(center_pt), zoom(zoom_level), kind(map_kind), width_px(width), height_px(height),
      overlay(std::move(overlay_ring)) {
    if (width_px < 1 || width_px > 2048 || height_px < 1 || height_px > 2048) {
        throw DomainError("static map size " + std::to_string(width_px) + "x" +
                          std::to_string(height_px) + " outside [1, 2048]");
    }
}

std::optional<ImageDims> sniff_image_dimensions(std::span<const unsigned char> bytes) {
    static const unsigned char png_magic[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (bytes.size() >= 24 && std::memcmp(bytes.data(), png_magic, 8) == 0) {
        // IHDR is the first chunk: width/height are big-endian at offsets 16/20.
        auto be32 = [&](std::size_t off) {
            return (static_cast<int>(bytes[off]) << 24) | (static_cast<int>(bytes[off + 1]) << 16) |
                   (static_cast<int>(bytes[off + 2]) << 8) | static_cast<int>(bytes[off + 3]);
        };
        return ImageDims{be32(16), be32(20)};
    }
    if (bytes.size() >= 4 && bytes[0] == 0xff && bytes[1] == 0xd8) {
        std::size_t i = 2;
        while (i + 9 < bytes.size()) {
            if (bytes[i] != 0xff) return std::nullopt;
            const unsigned char marker = bytes[i + 1];
            if (marker == 0xd8 || (marker >= 0xd0 && marker <= 0xd7)) {
                i += 2;
                continue;
            }
            const std::size_t seg_len =
                (static_cast<std::size_t>(bytes[i + 2]) << 8) | bytes[i + 3];
            const bool is_sof = (marker >= 0xc0 && marker <= 0xcf) && marker != 0xc4 &&
                                marker != 0xc8 && marker != 0xcc;
            if (is_sof) {
                const int h = (static_cast<int>(bytes[i + 5]) << 8) | bytes[i + 6];
                const int w = (static_cast<int>(bytes[i + 7]) << 8) | bytes[i + 8];
                return ImageDims{w, h};
            }
            i += 2 + seg_len;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

std::string sniff_media_type(std::span<const unsigned char> bytes) {
    static const unsigned char png_magic[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (bytes.size() >= 8 && std::memcmp(bytes.data(), png_magic, 8) == 0) return "image/png";
    if (bytes.size() >= 2 && bytes[0] == 0xff && bytes[1] == 0xd8) return "image/jpeg";
    if (bytes.size() >= 6 && std::memcmp(bytes.data(), "GIF8", 4) == 0) return "image/gif";
    return "";
}

namespace {

std::uint32_t crc32_of(std::span<const unsigned char> data, std::uint32_t crc = 0) {
    static const auto table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t n = 0; n < 256; ++n) {
            std::uint32_t c = n;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
            t[n] = c;
        }
        return t;
    }();
    crc ^= 0xffffffffu;
    for (unsigned char b : data) crc = table[(crc ^ b) & 0xffu] ^ (crc >> 8);
    return crc ^ 0xffffffffu;
}

void put_be32(std::vector<unsigned char>& out, std::uint32_t v) {
    out.push_back(static_cast<unsigned char>(v >> 24));
    out.push_back(static_cast<unsigned char>(v >> 16));
    out.push_back(static_cast<unsigned char>(v >> 8));
    out.push_back(static_cast<unsigned char>(v));
}

void put_chunk(std::vector<unsigned char>& out, const char type[4],
               std::span<const unsigned char> payload) {
    put_be32(out, static_cast<std::uint32_t>(payload.size()));
    std::vector<unsigned char> body(type, type + 4);
    body.insert(body.end(), payload.begin(), payload.end());
    out.insert(out.end(), body.begin(), body.end());
    put_be32(out, crc32_of(body));
}

// zlib stream with stored (uncompressed) deflate blocks.
std::vector<unsigned char> zlib_store(std::span<const unsigned char> raw) {
    std::vector<unsigned char> out;
    out.push_back(0x78);
    out.push_back(0x01);
    std::size_t pos = 0;
    do {
        const std::size_t n = std::min<std::size_t>(raw.size() - pos, 65535);
        const bool last = pos + n == raw.size();
        out.push_back(last ? 1 : 0);
        out.push_back(static_cast<unsigned char>(n & 0xff));
        out.push_back(static_cast<unsigned char>(n >> 8));
        out.push_back(static_cast<unsigned char>(~n & 0xff));
        out.push_back(static_cast<unsigned char>((~n >> 8) & 0xff));
        out.insert(out.end(), raw.begin() + static_cast<std::ptrdiff_t>(pos),
                   raw.begin() + static_cast<std::ptrdiff_t>(pos + n));
        pos += n;
    } while (pos < raw.size());
    std::uint32_t a = 1;
    std::uint32_t b = 0;
    for (unsigned char c : raw) {
        a = (a + c) % 65521;
        b = (b + a) % 65521;
    }
    put_be32(out, (b << 16) | a);
    return out;
}

} // namespace

std::vector<unsigned char> encode_png_rgb(int width, int height,
                                          std::span<const unsigned char> rgb) {
    if (width <= 0 || height <= 0 ||
        rgb.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * 3) {
        throw DomainError("png payload size does not match dimensions");
    }
    std::vector<unsigned char> out(
        {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a});
    std::vector<unsigned char> ihdr;
    put_be32(ihdr, static_cast<std::uint32_t>(width));
    put_be32(ihdr, static_cast<std::uint32_t>(height));
    ihdr.push_back(8);  // bit depth
    ihdr.push_back(2);  // color type RGB
    ihdr.push_back(0);
    ihdr.push_back(0);
    ihdr.push_back(0);
    put_chunk(out, "IHDR", ihdr);

    std::vector<unsigned char> scanlines;
    scanlines.reserve(static_cast<std::size_t>(height) * (1 + 3 * static_cast<std::size_t>(width)));
    for (int y = 0; y < height; ++y) {
        scanlines.push_back(0); // filter: none
        const std::size_t row = static_cast<std::size_t>(y) * static_cast<std::size_t>(width) * 3;
        scanlines.insert(scanlines.end(), rgb.begin() + static_cast<std::ptrdiff_t>(row),
                         rgb.begin() + static_cast<std::ptrdiff_t>(row + 3 * static_cast<std::size_t>(width)));
    }
    const auto idat = zlib_store(scanlines);
    put_chunk(out, "IDAT", idat);
    put_chunk(out, "IEND", {});
    return out;
}

AssetStore::AssetStore(std::filesystem::path root) : root_(std::move(root)) {
    std::filesystem::create_directories(root_);
    const auto manifest = root_ / "manifest.json";
    if (std::filesystem::exists(manifest)) {
        const auto doc = codec::Json::parse(util::read_file(manifest.string()));
        for (const auto& [id, meta] : doc.at("assets").items()) {
            by_id_[id] = codec::image_asset(meta);
        }
    }
}

ImageAsset AssetStore::put_image(std::span<const unsigned char> bytes, AssetKind kind,
                                 Acquisition acquisition) {
    const bool pose_acq = std::holds_alternative<CameraPose>(acquisition);
    if (pose_acq != (kind == AssetKind::oblique_orbit)) {
        throw DomainError("asset kind '" + to_string(kind) + "' does not match acquisition variant");
    }
    ImageAsset asset;
    asset.asset_id = util::sha256_hex(bytes);
    asset.kind = kind;
    asset.acquisition = std::move(acquisition);
    asset.media_type = sniff_media_type(bytes);
    if (asset.media_type.empty()) asset.media_type = "application/octet-stream";
    if (const auto dims = sniff_image_dimensions(bytes)) {
        asset.width_px = dims->width;
        asset.height_px = dims->height;
    }
    std::string ext = "bin";
    if (asset.media_type == "image/png") ext = "png";
    else if (asset.media_type == "image/jpeg") ext = "jpg";
    else if (asset.media_type == "image/gif") ext = "gif";
    const auto path = root_ / (asset.asset_id + "." + ext);
    asset.storage_path = path.string();

    std::lock_guard lock(mu_);
    if (!std::filesystem::exists(path)) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write asset file: " + path.string());
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
    }
    by_id_[asset.asset_id] = asset;
    save_manifest_locked();
    return asset;
}

std::optional<ImageAsset> AssetStore::find(const std::string& asset_id) const {
    std::lock_guard lock(mu_);
    const auto it = by_id_.find(asset_id);
    if (it == by_id_.end()) return std::nullopt;
    return it->second;
}

std::vector<unsigned char> AssetStore::read_bytes(const std::string& asset_id) const {
    const auto asset = find(asset_id);
    if (!asset) throw NotFoundError("asset not in store: " + asset_id, asset_id);
    const auto content = util::read_file(asset->storage_path);
    return std::vector<unsigned char>(content.begin(), content.end());
}

std::size_t AssetStore::size() const {
    std::lock_guard lock(mu_);
    return by_id_.size();
}

void AssetStore::save_manifest_locked() {
    codec::Json assets_doc = codec::Json::object();
    for (const auto& [id, asset] : by_id_) assets_doc[id] = codec::image_asset(asset);
    const codec::Json doc{{"version", 1}, {"assets", assets_doc}};
    util::write_file((root_ / "manifest.json").string(), doc.dump(2) + "\n");
}

} // namespace dba::assets
