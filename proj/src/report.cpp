#include "sl3web/report.hpp"

#include <sstream>

namespace sl3web {

namespace {

void render_value(std::ostream& os, const std::string& key, const Json& v,
                  int indent) {
  std::string pad(static_cast<size_t>(indent), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, val] : v.items()) render_value(os, k, val, indent + 2);
  } else if (v.is_array() && !v.empty() &&
             (v.front().is_object() || v.front().is_array())) {
    os << pad << key << ":\n";
    for (const auto& el : v) os << pad << "  - " << el.dump() << '\n';
  } else if (v.is_string()) {
    os << pad << key << ": " << v.get<std::string>() << '\n';
  } else {
    os << pad << key << ": " << v.dump() << '\n';
  }
}

}  // namespace

bool RunReport::all_passed() const {
  for (const CheckOutcome& c : checks)
    if (!c.pass) return false;
  return true;
}

Json RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  Json outcome = Json::array();
  for (const CheckOutcome& c : checks)
    outcome.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = outcome;
  j["timing_ms"] = timing_ms;
  return j;
}

std::string RunReport::human() const {
  std::ostringstream os;
  os << "command: " << command << '\n';
  for (const auto& [k, v] : inputs.items()) render_value(os, k, v, 2);
  if (!results.empty()) {
    os << "results:\n";
    for (const auto& [k, v] : results.items()) render_value(os, k, v, 2);
  }
  if (!checks.empty()) {
    os << "checks:\n";
    for (const CheckOutcome& c : checks) {
      os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      os << '\n';
    }
  }
  os << "timing_ms: " << timing_ms << '\n';
  return os.str();
}

}  // namespace sl3web
