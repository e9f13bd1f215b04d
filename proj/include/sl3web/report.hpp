#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace sl3web {

using Json = nlohmann::ordered_json;

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Consolidated result of one CLI run.  The machine form has stable field
// names: command, inputs, results, checks, timing_ms.
struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<CheckOutcome> checks;
  double timing_ms = 0.0;

  bool all_passed() const;
  Json to_json() const;
  std::string human() const;
};

}  // namespace sl3web
