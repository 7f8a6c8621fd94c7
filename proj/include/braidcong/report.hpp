#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace braidcong {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

// Machine-readable result of one verification suite.  Cases are kept sorted by
// name so reports are byte-stable regardless of evaluation order.
struct Report {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CaseResult> cases;

  void add(const std::string& name, bool pass, const std::string& expected, const std::string& actual);
  void check(const std::string& name, bool pass) { add(name, pass, "true", pass ? "true" : "false"); }
  bool all_pass() const;
  size_t fail_count() const;
  nlohmann::json to_json() const;  // {"schema":1, "suite", "params", "cases":[...]}
};

}  // namespace braidcong
