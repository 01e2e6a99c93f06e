#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace fredent {

// Outcome of a claim checker. `worst_margin` is the minimum slack observed
// across trials; each checker documents its margin convention, and in every
// case margin < -tol counts as a violation. `witness` holds the serialized
// JSON of one violating input (present exactly when violations > 0) so the
// run can be replayed bit-exactly.
struct ClaimReport {
  std::string claim_id;
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::optional<std::string> witness;

  void record(double margin, double tol, const std::string& witness_json) {
    ++trials;
    if (margin < worst_margin) worst_margin = margin;
    if (margin < -tol) {
      ++violations;
      if (!witness) witness = witness_json;
    }
  }
};

}  // namespace fredent
