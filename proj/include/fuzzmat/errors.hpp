#pragma once

#include <stdexcept>
#include <string>

namespace fuzzmat {

// Bad user-supplied data: malformed files, out-of-range CLI parameters.
// The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Contract violation inside an engine: dimension mismatch, invalid state,
// diagnostic failures. The CLI maps this to exit code 2.
struct engine_error : std::runtime_error {
    explicit engine_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fuzzmat
