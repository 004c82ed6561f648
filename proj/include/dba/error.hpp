#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dba {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A value violates a documented precondition or type invariant.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Missing or inconsistent configuration (unknown model, unpriced model,
/// unresolvable path, bad grid file).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// HTTP-level failure that survived the retry policy.
class TransportError : public Error {
public:
    using Error::Error;
};

/// A response document could not be interpreted. Carries an excerpt of the
/// offending payload in the message.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A lookup returned zero results. Carries the original query text.
class NotFoundError : public Error {
public:
    NotFoundError(const std::string& msg, std::string query)
        : Error(msg), query_(std::move(query)) {}
    const std::string& query() const { return query_; }

private:
    std::string query_;
};

/// Replay transport saw a request whose signature is not in the cassette.
class ReplayMissError : public Error {
public:
    ReplayMissError(const std::string& msg, std::string nearest_signature)
        : Error(msg), nearest_signature_(std::move(nearest_signature)) {}
    const std::string& nearest_signature() const { return nearest_signature_; }

private:
    std::string nearest_signature_;
};

/// The selected model cannot perform the requested operation (for example
/// image analysis on an OCR-only model).
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// A multi-stage pipeline failed. Carries the asset that caused the failure.
class PipelineError : public Error {
public:
    PipelineError(const std::string& msg, std::string failed_asset)
        : Error(msg), failed_asset_(std::move(failed_asset)) {}
    const std::string& failed_asset() const { return failed_asset_; }

private:
    std::string failed_asset_;
};

/// Image intake could not find every expected frame.
class IntakeError : public Error {
public:
    IntakeError(const std::string& msg, std::vector<int> missing)
        : Error(msg), missing_indices_(std::move(missing)) {}
    const std::vector<int>& missing_indices() const { return missing_indices_; }

private:
    std::vector<int> missing_indices_;
};

/// Filesystem failure, message includes the path involved.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace dba
