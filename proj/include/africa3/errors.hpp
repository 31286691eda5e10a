#pragma once

#include <stdexcept>
#include <string>

namespace africa3 {

// Error taxonomy mirrors the CLI exit codes: validation -> 1, routing -> 2, io -> 3.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct RoutingError : std::runtime_error {
    explicit RoutingError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace africa3
