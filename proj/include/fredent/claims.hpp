#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "fredent/claim_report.hpp"

namespace fredent::claims {

// Expected outcome stored per claim so callers can tell a known
// falsification (reproduced on purpose) from a regression.
enum class ExpectedStatus { Holds, DocumentedCounterexample };

struct ClaimSpec {
  const char* id;
  ExpectedStatus expected;
  const char* summary;
  ClaimReport (*run)(std::int64_t trials, int dim, std::uint64_t seed);
};

const std::vector<ClaimSpec>& registry();

// nullptr when the id is not registered.
const ClaimSpec* find_claim(std::string_view id);

// Whether the report's outcome (violations found or not) matches the
// registered expectation.
bool matches_expectation(const ClaimSpec& spec, const ClaimReport& report);

}  // namespace fredent::claims
