#pragma once

#include <cstddef>
#include <string>

namespace elt {

/// Outcome of checking one claim over a batch of instances.
struct ClaimResult {
  std::string name;
  bool passed = false;
  std::size_t instances = 0;
  std::string detail;
};

}  // namespace elt
