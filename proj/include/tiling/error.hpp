#pragma once

#include <stdexcept>
#include <string>

namespace tiling {

// Every failure carries a short machine-readable code (e.g. "SeedConflict")
// alongside the human message; the CLI echoes the code in its JSON report.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string &code() const noexcept { return code_; }

private:
  std::string code_;
};

} // namespace tiling
