#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "exc/json_io.hpp"

namespace exc {

struct ExperimentOptions {
  std::uint64_t seed = 1;
  long trials = 10000;
  int n = 0;        // 0: the experiment's default range
  bool quick = false;  // reduced trial counts for the unit suite
};

struct ExperimentReport {
  std::string name;
  std::string claim;  // what the experiment checks, in plain language
  std::map<std::string, std::string> parameters;
  enum class Status { PASS, FAIL, FINDING } status = Status::FAIL;
  Json expected;
  Json observed;
  double wall_ms = 0;

  Json to_json() const;
  bool ok() const { return status != Status::FAIL; }
};

const std::vector<std::string>& experiment_names();
ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& opt);

}  // namespace exc
