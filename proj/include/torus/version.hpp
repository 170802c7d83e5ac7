#pragma once

#include <string>

namespace torus {

inline std::string version_string() { return "0.1.0"; }

}  // namespace torus
