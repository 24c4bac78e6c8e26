#pragma once

#include <stdexcept>
#include <string>

namespace semicond {

// Base class for all library failures. `kind()` is a stable machine-readable
// tag used by the CLI when rendering error objects.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& message)
        : Error("dimension_mismatch", message) {}
};

class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& message)
        : Error("invalid_input", message) {}
};

// A cone that contains a full line; the library only handles pointed cones.
class NotPointed : public Error {
public:
    explicit NotPointed(const std::string& message)
        : Error("not_pointed", message) {}
};

// A configured resource guard tripped. Callers either propagate this or
// downgrade the result to an explicitly uncertified one; a truncated answer
// is never presented as exact.
class BoundExceeded : public Error {
public:
    BoundExceeded(std::string guard, const std::string& message)
        : Error("bound_exceeded", message), guard_(std::move(guard)) {}
    const std::string& guard() const { return guard_; }

private:
    std::string guard_;
};

}  // namespace semicond
