// File: include/tnd/error.hpp
#pragma once

#include <stdexcept>
#include <string>

namespace tnd {

// Error taxonomy. ConfigError maps to CLI exit code 1 (validation),
// everything else to exit code 2 (runtime failure).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration or input files, detected before compute starts.
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

// A function was called outside its contract (caller bug).
struct ContractError : Error {
  explicit ContractError(const std::string& msg) : Error("contract: " + msg) {}
};

// Filesystem / serialization failure.
struct IoError : Error {
  explicit IoError(const std::string& msg) : Error("io: " + msg) {}
};

// A persisted artifact is corrupt or inconsistent (bad checksum, missing file).
struct IntegrityError : Error {
  explicit IntegrityError(const std::string& msg) : Error("integrity: " + msg) {}
};

// Numerical failure during training (non-finite loss, diverging ratios).
struct TrainingError : Error {
  explicit TrainingError(const std::string& msg) : Error("training: " + msg) {}
};

// Post-hoc analysis cannot proceed (too few points, singular design).
struct AnalysisError : Error {
  explicit AnalysisError(const std::string& msg) : Error("analysis: " + msg) {}
};

}  // namespace tnd

#define TND_CHECK(cond, msg)                                  \
  do {                                                        \
    if (!(cond)) throw ::tnd::ContractError(msg);             \
  } while (false)

#define TND_CHECK_CONFIG(cond, msg)                           \
  do {                                                        \
    if (!(cond)) throw ::tnd::ConfigError(msg);               \
  } while (false)

#define TND_CHECK_IO(cond, msg)                               \
  do {                                                        \
    if (!(cond)) throw ::tnd::IntegrityError(msg);            \
  } while (false)
