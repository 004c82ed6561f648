#include "dba/cassette.hpp"

#include "dba/error.hpp"
#include "dba/util.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <limits>

namespace dba::http {

namespace {

std::string now_utc_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

Cassette Cassette::load(const std::string& path) {
    Cassette cassette;
    const auto doc = nlohmann::json::parse(util::read_file(path));
    for (const auto& item : doc.at("entries")) {
        CassetteEntry entry;
        entry.canonical = item.at("canonical").get<std::string>();
        entry.signature = util::sha256_hex(entry.canonical);
        entry.status = item.at("status").get<int>();
        entry.content_type = item.value("content_type", std::string{});
        const auto bytes = util::base64_decode(item.at("body_b64").get<std::string>());
        entry.body.assign(bytes.begin(), bytes.end());
        entry.recorded_at = item.value("recorded_at", std::string{});
        cassette.put(std::move(entry));
    }
    return cassette;
}

void Cassette::save(const std::string& path) const {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : entries_) {
        entries.push_back({{"signature", e.signature},
                           {"canonical", e.canonical},
                           {"status", e.status},
                           {"content_type", e.content_type},
                           {"body_b64", util::base64_encode(e.body)},
                           {"recorded_at", e.recorded_at}});
    }
    const nlohmann::ordered_json doc{{"version", 1}, {"entries", entries}};
    util::write_file(path, doc.dump(2) + "\n");
}

void Cassette::put(CassetteEntry entry) {
    if (entry.signature.empty()) entry.signature = util::sha256_hex(entry.canonical);
    for (auto& existing : entries_) {
        if (existing.signature == entry.signature) {
            existing = std::move(entry);
            return;
        }
    }
    entries_.push_back(std::move(entry));
}

std::optional<CassetteEntry> Cassette::find(const std::string& signature) const {
    for (const auto& e : entries_) {
        if (e.signature == signature) return e;
    }
    return std::nullopt;
}

std::optional<CassetteEntry> Cassette::nearest(const std::string& canonical) const {
    std::optional<CassetteEntry> best;
    std::size_t best_dist = std::numeric_limits<std::size_t>::max();
    for (const auto& e : entries_) {
        const std::size_t d = util::edit_distance(canonical, e.canonical);
        if (d < best_dist) {
            best_dist = d;
            best = e;
        }
    }
    return best;
}

RecordingTransport::RecordingTransport(std::shared_ptr<Transport> inner, std::string cassette_path,
                                       std::vector<std::string> secret_params)
    : inner_(std::move(inner)), path_(std::move(cassette_path)),
      secret_params_(std::move(secret_params)) {}

RecordingTransport::~RecordingTransport() {
    try {
        flush();
    } catch (...) {
        // destructor must not throw; an explicit flush() reports IO errors
    }
}

Response RecordingTransport::send(const Request& req) {
    const Response resp = inner_->send(req);
    CassetteEntry entry;
    entry.canonical = canonical_request(req, secret_params_);
    entry.signature = util::sha256_hex(entry.canonical);
    entry.status = resp.status;
    entry.content_type = resp.content_type;
    entry.body = resp.body;
    entry.recorded_at = now_utc_iso8601();
    std::lock_guard lock(mu_);
    cassette_.put(std::move(entry));
    return resp;
}

void RecordingTransport::flush() {
    std::lock_guard lock(mu_);
    cassette_.save(path_);
}

ReplayTransport::ReplayTransport(Cassette cassette, std::vector<std::string> secret_params)
    : cassette_(std::move(cassette)), secret_params_(std::move(secret_params)) {}

std::shared_ptr<ReplayTransport> ReplayTransport::from_file(const std::string& path) {
    return std::make_shared<ReplayTransport>(Cassette::load(path));
}

Response ReplayTransport::send(const Request& req) {
    const std::string canonical = canonical_request(req, secret_params_);
    const std::string sig = util::sha256_hex(canonical);
    const auto entry = cassette_.find(sig);
    if (!entry) {
        const auto near = cassette_.nearest(canonical);
        const std::string near_desc =
            near ? near->canonical + " (signature " + near->signature + ")" : "<empty cassette>";
        throw ReplayMissError("replay miss for: " + canonical + "; nearest recorded: " + near_desc,
                              near ? near->signature : "");
    }
    ++replay_count_;
    Response resp;
    resp.status = entry->status;
    resp.content_type = entry->content_type;
    resp.body = entry->body;
    return resp;
}

} // namespace dba::http
