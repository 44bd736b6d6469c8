#pragma once

#include <stdexcept>
#include <string>

namespace aircanyon {

// Malformed input documents (XML/JSON). Carries a line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, long line = -1)
        : std::runtime_error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Structurally valid input that violates a model invariant.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& msg, std::string object_id = {})
        : std::runtime_error(object_id.empty() ? msg : msg + " [id: " + object_id + "]"),
          object_id_(std::move(object_id)) {}
    const std::string& object_id() const { return object_id_; }

private:
    std::string object_id_;
};

// Degenerate or unusable geometry.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Out-of-domain argument (empty set, non-positive ratio, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unreadable or invalid run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Building centroid exactly on the street axis; side assignment undefined.
class AmbiguityError : public std::runtime_error {
public:
    AmbiguityError(const std::string& msg, std::string object_id)
        : std::runtime_error(msg + " [id: " + object_id + "]"),
          object_id_(std::move(object_id)) {}
    const std::string& object_id() const { return object_id_; }

private:
    std::string object_id_;
};

}  // namespace aircanyon
