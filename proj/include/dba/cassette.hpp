#pragma once

#include "dba/http.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace dba::http {

struct CassetteEntry {
    std::string signature;
    std::string canonical;
    int status = 0;
    std::string content_type;
    std::string body;
    std::string recorded_at;
};

/// Ordered record of canonical request/response pairs. Lookup is keyed by
/// signature, so replay order is independent of recording order. Signatures
/// are recomputed from the canonical request on load, which keeps hand-edited
/// fixtures valid.
class Cassette {
public:
    Cassette() = default;

    static Cassette load(const std::string& path);
    void save(const std::string& path) const;

    void put(CassetteEntry entry);
    std::optional<CassetteEntry> find(const std::string& signature) const;

    /// Entry whose canonical request is closest by edit distance; used to
    /// explain replay misses.
    std::optional<CassetteEntry> nearest(const std::string& canonical) const;

    std::size_t size() const { return entries_.size(); }
    const std::vector<CassetteEntry>& entries() const { return entries_; }

private:
    std::vector<CassetteEntry> entries_;
};

/// Records every response that passes through it. Call flush() (or let the
/// destructor run) to persist the cassette.
class RecordingTransport : public Transport {
public:
    RecordingTransport(std::shared_ptr<Transport> inner, std::string cassette_path,
                       std::vector<std::string> secret_params = {"key"});
    ~RecordingTransport() override;

    Response send(const Request& req) override;
    void flush();
    const Cassette& cassette() const { return cassette_; }

private:
    std::shared_ptr<Transport> inner_;
    std::string path_;
    std::vector<std::string> secret_params_;
    std::mutex mu_;
    Cassette cassette_;
};

/// Serves responses from a cassette only. A request whose signature was never
/// recorded fails loudly with the nearest recorded request named; there is no
/// network fallback.
class ReplayTransport : public Transport {
public:
    explicit ReplayTransport(Cassette cassette,
                             std::vector<std::string> secret_params = {"key"});
    static std::shared_ptr<ReplayTransport> from_file(const std::string& path);

    Response send(const Request& req) override;
    std::uint64_t replay_count() const { return replay_count_; }

private:
    Cassette cassette_;
    std::vector<std::string> secret_params_;
    std::uint64_t replay_count_ = 0;
};

} // namespace dba::http
