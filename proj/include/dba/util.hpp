#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dba::util {

/// Hex-encoded SHA-256 of arbitrary bytes. Used for content addressing and
/// request signatures.
std::string sha256_hex(std::span<const unsigned char> bytes);
std::string sha256_hex(std::string_view text);

/// Stable 64-bit seed derived from text (first 8 bytes of its SHA-256).
std::uint64_t seed_from(std::string_view text);

std::string base64_encode(std::span<const unsigned char> bytes);
std::string base64_encode(std::string_view text);
std::vector<unsigned char> base64_decode(std::string_view text);

/// Levenshtein distance, used to report the nearest recorded request on a
/// cassette replay miss.
std::size_t edit_distance(std::string_view a, std::string_view b);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Shortest decimal rendering of a double that round-trips, e.g. for
/// deterministic document output.
std::string format_double(double v);

/// Fixed-precision coordinate rendering with trailing zeros trimmed,
/// e.g. 43.4643000 -> "43.4643". Seven decimals before trimming.
std::string format_coord(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace dba::util
