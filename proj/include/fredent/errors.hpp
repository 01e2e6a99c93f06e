#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fredent {

// All validation failures throw this single type. `code()` is a stable,
// machine-readable tag (e.g. "NotHermitian", "TraceNotOne") that the CLI
// prints verbatim so callers can name the violated invariant; what() adds
// human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  explicit Error(std::string code) : Error(std::move(code), "") {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace fredent
