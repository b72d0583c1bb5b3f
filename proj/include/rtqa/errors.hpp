#pragma once

#include <stdexcept>
#include <string>

namespace rtqa {

// File/format problems: malformed DROP JSON, bad annotation lines, unreadable weights.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Bad wiring: dimension mismatches, unknown adapter names, missing required paths.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a backend's maximum sequence length.
struct LengthError : std::runtime_error {
  explicit LengthError(const std::string& what) : std::runtime_error(what) {}
};

// A decoded pointer has no word alignment (landed on a control subtoken).
struct InvalidPointerError : std::runtime_error {
  explicit InvalidPointerError(const std::string& what) : std::runtime_error(what) {}
};

// Remote backend unreachable after the configured retries.
struct TransportError : std::runtime_error {
  explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rtqa
