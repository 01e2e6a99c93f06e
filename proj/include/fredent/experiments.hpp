#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fredent::experiments {

struct ExperimentRow {
  double parameter = 0;
  double value = 0;
  double certified_error = 0;
};

const std::vector<std::string>& names();

// Runs a named sweep; throws Error("UnknownExperiment") for other names.
std::vector<ExperimentRow> run(std::string_view name);

// CSV with header `parameter,value,certified_error`, 17 significant digits.
std::string to_csv(const std::vector<ExperimentRow>& rows);

}  // namespace fredent::experiments
