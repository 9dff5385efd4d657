#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace chua {

/// Invalid configuration or invalid argument combination. Carries the
/// dotted field path (e.g. "circuit.c1") when the offending value came
/// from a config file.
class config_error : public std::runtime_error {
public:
    explicit config_error(std::string message, std::string field = {})
        : std::runtime_error(field.empty() ? message : field + ": " + message),
          field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Numeric failure during a computation (divergence, degenerate frame, ...).
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chua
