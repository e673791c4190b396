#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace freewidth {

// Domain failures carry a stable machine-readable name next to the human
// message, so callers (and the CLI) can dispatch on the name.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace freewidth
