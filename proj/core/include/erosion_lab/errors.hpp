#pragma once

#include <stdexcept>
#include <string>

namespace elab {

/// Linear solve failed to reach the requested residual.
class numeric_error : public std::runtime_error {
 public:
  numeric_error(const std::string& what, double residual)
      : std::runtime_error(what + " (residual=" + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A random walk exceeded the configured hard step cap.
class walk_cap_error : public std::runtime_error {
 public:
  explicit walk_cap_error(long cap)
      : std::runtime_error("random walk exceeded the hard cap of " +
                           std::to_string(cap) + " steps"),
        cap_(cap) {}
  long cap() const { return cap_; }

 private:
  long cap_;
};

/// Request exceeds what the exact solver is sized for.
class resource_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace elab
