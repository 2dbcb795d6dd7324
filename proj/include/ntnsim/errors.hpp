#pragma once

#include <stdexcept>
#include <string>

namespace ntnsim {

/// Invalid or inconsistent run configuration. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Failure while executing an otherwise valid run. CLI maps this to exit code 3.
struct SimulationError : std::runtime_error {
    explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ntnsim
