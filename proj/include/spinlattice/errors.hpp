#pragma once

#include <stdexcept>
#include <string>

namespace spinlattice {

// Numeric guard tripped (overflow guards, dimension caps, divergent series).
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check that must hold by construction failed; indicates a kernel bug.
struct invariant_error : std::logic_error {
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

// Malformed experiment configuration.
struct schema_error : std::runtime_error {
  explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinlattice
