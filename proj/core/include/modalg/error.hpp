#pragma once

#include <stdexcept>
#include <string>

namespace modalg {

// Malformed arguments: prime/dimension mismatch, bad group tables, bad files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A verification step failed. `step()` names the check that tripped.
class CheckFailed : public std::runtime_error {
 public:
  CheckFailed(std::string step, const std::string& what)
      : std::runtime_error(step + ": " + what), step_(std::move(step)) {}
  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

// An enumeration bound (oracle order cap, element enumeration cap) was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modalg
