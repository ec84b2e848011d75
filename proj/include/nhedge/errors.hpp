#pragma once

#include <stdexcept>

namespace nhedge {

/// Invalid sizes, parameters or experiment settings. The CLI maps this to exit code 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed data fed to a learner (non-finite losses).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace nhedge
