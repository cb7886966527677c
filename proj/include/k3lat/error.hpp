#pragma once

#include <stdexcept>
#include <string>

namespace k3lat {

/// Domain error carrying a stable machine-readable code (e.g. "degenerate",
/// "not_even", "not_isotropic"). The CLI forwards the code verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace k3lat
