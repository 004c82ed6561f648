#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dba::http {

struct QueryParam {
    std::string key;
    std::string value;
};

/// One outbound request. The path is origin-relative; transports that talk to
/// a real server prepend their base URL. Headers never participate in
/// canonicalization, so credentials sent as headers stay out of signatures
/// and cassettes.
struct Request {
    std::string method = "GET";
    std::string path;
    std::vector<QueryParam> params;
    std::string body;
    std::string content_type;
    std::vector<std::pair<std::string, std::string>> headers;
};

struct Response {
    int status = 0;
    std::string body;
    std::string content_type;
};

/// Percent-encoding keeping only RFC 3986 unreserved characters.
std::string url_encode(const std::string& s);

/// Deterministic query string: keys lowercased, parameters sorted by
/// (key, value), values percent-encoded.
std::string encode_query_sorted(const std::vector<QueryParam>& params);

/// Canonical request line used for signatures and cassette keys:
/// "<METHOD> <path>?<sorted query>" with any parameter named in
/// `secret_params` removed, plus the body for non-GET requests.
std::string canonical_request(const Request& req,
                              const std::vector<std::string>& secret_params = {"key"});

/// SHA-256 of the canonical request. Equal requests always share a
/// signature; the signature never covers credentials.
std::string request_signature(const Request& req,
                              const std::vector<std::string>& secret_params = {"key"});

class Transport {
public:
    virtual ~Transport() = default;
    virtual Response send(const Request& req) = 0;
};

struct RetryPolicy {
    int attempts = 3;
    std::chrono::milliseconds initial_backoff{250};
    double multiplier = 2.0;
    double jitter = 0.1;
};

bool retryable_status(int status);

/// Retries connection failures and retryable statuses (429, 5xx) with
/// jittered exponential backoff; anything else is returned on the first
/// attempt. Exhausting the policy raises TransportError.
class RetryTransport : public Transport {
public:
    RetryTransport(std::shared_ptr<Transport> inner, RetryPolicy policy);
    Response send(const Request& req) override;

private:
    std::shared_ptr<Transport> inner_;
    RetryPolicy policy_;
};

/// Appends a fixed query parameter (typically the API key) to every request.
class AuthParamTransport : public Transport {
public:
    AuthParamTransport(std::shared_ptr<Transport> inner, std::string key, std::string value);
    Response send(const Request& req) override;

private:
    std::shared_ptr<Transport> inner_;
    std::string key_;
    std::string value_;
};

struct CacheStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
};

/// Signature-keyed response cache for GET requests. With a directory
/// configured, entries are persisted as JSON for reuse across processes.
class CacheTransport : public Transport {
public:
    explicit CacheTransport(std::shared_ptr<Transport> inner, std::string disk_dir = "");
    Response send(const Request& req) override;
    CacheStats stats() const;

private:
    std::shared_ptr<Transport> inner_;
    std::string disk_dir_;
    mutable std::mutex mu_;
    std::map<std::string, Response> entries_;
    CacheStats stats_;
};

/// Enforces a minimum spacing between consecutive requests to one host.
class MinIntervalLimiter {
public:
    explicit MinIntervalLimiter(std::chrono::milliseconds min_interval);
    void acquire();

private:
    std::chrono::milliseconds min_interval_;
    std::mutex mu_;
    std::chrono::steady_clock::time_point last_;
};

/// Real HTTP(S) transport. Construction fails when DBA_FORBID_NETWORK is set
/// so offline test runs cannot accidentally reach the network.
class LiveTransport : public Transport {
public:
    explicit LiveTransport(std::string base_url,
                           std::shared_ptr<MinIntervalLimiter> limiter = nullptr);
    Response send(const Request& req) override;

private:
    std::string base_url_;
    std::shared_ptr<MinIntervalLimiter> limiter_;
};

} // namespace dba::http
