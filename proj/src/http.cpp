#include "dba/http.hpp"

#include "dba/error.hpp"
#include "dba/util.hpp"

#include <json.hpp>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <thread>

namespace dba::http {

std::string url_encode(const std::string& s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        const bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                                (c >= '0' && c <= '9') || c == '-' || c == '.' || c == '_' ||
                                c == '~';
        if (unreserved) {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0x0f]);
        }
    }
    return out;
}

std::string encode_query_sorted(const std::vector<QueryParam>& params) {
    std::vector<QueryParam> sorted;
    sorted.reserve(params.size());
    for (const auto& p : params) sorted.push_back({util::to_lower(p.key), p.value});
    std::sort(sorted.begin(), sorted.end(), [](const QueryParam& a, const QueryParam& b) {
        return a.key != b.key ? a.key < b.key : a.value < b.value;
    });
    std::string out;
    for (const auto& p : sorted) {
        if (!out.empty()) out.push_back('&');
        out += url_encode(p.key) + "=" + url_encode(p.value);
    }
    return out;
}

std::string canonical_request(const Request& req, const std::vector<std::string>& secret_params) {
    std::vector<QueryParam> kept;
    for (const auto& p : req.params) {
        const std::string lowered = util::to_lower(p.key);
        if (std::find(secret_params.begin(), secret_params.end(), lowered) != secret_params.end()) {
            continue;
        }
        kept.push_back(p);
    }
    std::string line = req.method + " " + req.path;
    const std::string query = encode_query_sorted(kept);
    if (!query.empty()) line += "?" + query;
    if (req.method != "GET" && !req.body.empty()) line += "\n" + req.body;
    return line;
}

std::string request_signature(const Request& req, const std::vector<std::string>& secret_params) {
    return util::sha256_hex(canonical_request(req, secret_params));
}

bool retryable_status(int status) { return status == 429 || (status >= 500 && status < 600); }

RetryTransport::RetryTransport(std::shared_ptr<Transport> inner, RetryPolicy policy)
    : inner_(std::move(inner)), policy_(policy) {}

Response RetryTransport::send(const Request& req) {
    thread_local std::mt19937_64 rng{std::random_device{}()};
    std::string last_error;
    double backoff_ms = static_cast<double>(policy_.initial_backoff.count());
    for (int attempt = 1; attempt <= policy_.attempts; ++attempt) {
        try {
            Response resp = inner_->send(req);
            if (!retryable_status(resp.status)) return resp;
            last_error = "HTTP " + std::to_string(resp.status);
        } catch (const TransportError& e) {
            last_error = e.what();
        }
        if (attempt < policy_.attempts && backoff_ms > 0.0) {
            std::uniform_real_distribution<double> jitter(0.0, policy_.jitter);
            const double sleep_ms = backoff_ms * (1.0 + jitter(rng));
            std::this_thread::sleep_for(std::chrono::duration<double, std::milli>(sleep_ms));
        }
        backoff_ms *= policy_.multiplier;
    }
    throw TransportError("request failed after " + std::to_string(policy_.attempts) +
                         " attempts (" + last_error + "): " + req.method + " " + req.path);
}

AuthParamTransport::AuthParamTransport(std::shared_ptr<Transport> inner, std::string key,
                                       std::string value)
    : inner_(std::move(inner)), key_(std::move(key)), value_(std::move(value)) {}

Response AuthParamTransport::send(const Request& req) {
    Request with_key = req;
    with_key.params.push_back({key_, value_});
    return inner_->send(with_key);
}

CacheTransport::CacheTransport(std::shared_ptr<Transport> inner, std::string disk_dir)
    : inner_(std::move(inner)), disk_dir_(std::move(disk_dir)) {
    if (!disk_dir_.empty()) std::filesystem::create_directories(disk_dir_);
}

Response CacheTransport::send(const Request& req) {
    if (req.method != "GET") return inner_->send(req);
    const std::string sig = request_signature(req);
    {
        std::lock_guard lock(mu_);
        const auto it = entries_.find(sig);
        if (it != entries_.end()) {
            ++stats_.hits;
            return it->second;
        }
        if (!disk_dir_.empty()) {
            const auto path = std::filesystem::path(disk_dir_) / (sig + ".json");
            if (std::filesystem::exists(path)) {
                const auto doc = nlohmann::json::parse(util::read_file(path.string()));
                Response resp;
                resp.status = doc.at("status").get<int>();
                resp.content_type = doc.at("content_type").get<std::string>();
                const auto bytes = util::base64_decode(doc.at("body_b64").get<std::string>());
                resp.body.assign(bytes.begin(), bytes.end());
                entries_[sig] = resp;
                ++stats_.hits;
                return resp;
            }
        }
        ++stats_.misses;
    }
    Response resp = inner_->send(req);
    if (resp.status == 200) {
        std::lock_guard lock(mu_);
        entries_[sig] = resp;
        if (!disk_dir_.empty()) {
            const nlohmann::json doc{{"status", resp.status},
                                     {"content_type", resp.content_type},
                                     {"body_b64", util::base64_encode(resp.body)}};
            const auto path = std::filesystem::path(disk_dir_) / (sig + ".json");
            util::write_file(path.string(), doc.dump());
        }
    }
    return resp;
}

CacheStats CacheTransport::stats() const {
    std::lock_guard lock(mu_);
    return stats_;
}

MinIntervalLimiter::MinIntervalLimiter(std::chrono::milliseconds min_interval)
    : min_interval_(min_interval), last_(std::chrono::steady_clock::time_point::min()) {}

void MinIntervalLimiter::acquire() {
    std::unique_lock lock(mu_);
    const auto now = std::chrono::steady_clock::now();
    if (last_ != std::chrono::steady_clock::time_point::min()) {
        const auto next = last_ + min_interval_;
        if (now < next) {
            lock.unlock();
            std::this_thread::sleep_until(next);
            lock.lock();
        }
    }
    last_ = std::chrono::steady_clock::now();
}

LiveTransport::LiveTransport(std::string base_url, std::shared_ptr<MinIntervalLimiter> limiter)
    : base_url_(std::move(base_url)), limiter_(std::move(limiter)) {
    if (std::getenv("DBA_FORBID_NETWORK") != nullptr) {
        throw TransportError("network transport requested while DBA_FORBID_NETWORK is set");
    }
    if (base_url_.empty()) throw ConfigError("live transport needs a base URL");
}

Response LiveTransport::send(const Request& req) {
    if (limiter_) limiter_->acquire();
    httplib::Client client(base_url_);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(30, 0);
    client.set_follow_location(true);

    httplib::Headers headers;
    for (const auto& [k, v] : req.headers) headers.emplace(k, v);

    std::string target = req.path;
    const std::string query = encode_query_sorted(req.params);
    if (!query.empty()) target += "?" + query;

    httplib::Result result = req.method == "POST"
                                 ? client.Post(target, headers, req.body,
                                               req.content_type.empty() ? "application/json"
                                                                        : req.content_type)
                                 : client.Get(target, headers);
    if (!result) {
        throw TransportError("connection to " + base_url_ + " failed: " +
                             httplib::to_string(result.error()));
    }
    Response resp;
    resp.status = result->status;
    resp.body = result->body;
    resp.content_type = result->get_header_value("Content-Type");
    return resp;
}

} // namespace dba::http
