#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ulasan {

// Error taxonomy mapped to distinct CLI exit codes: config (2), data (3),
// internal invariant (4).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

// Non-fatal condition records (clamped parameters, zero-denominator metric
// cells, classes excluded from an aggregate). Carried in result objects.
using WarningLog = std::vector<std::string>;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kArtifactVersionMajor = 1;

}  // namespace ulasan
