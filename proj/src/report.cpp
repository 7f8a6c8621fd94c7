#include "braidcong/report.hpp"

#include <algorithm>

namespace braidcong {

void Report::add(const std::string& name, bool pass, const std::string& expected, const std::string& actual) {
  CaseResult c{name, pass, expected, actual};
  auto it = std::lower_bound(cases.begin(), cases.end(), c,
                             [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  cases.insert(it, std::move(c));
}

bool Report::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

size_t Report::fail_count() const {
  return static_cast<size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["schema"] = 1;
  out["suite"] = suite;
  out["params"] = params;
  nlohmann::json arr = nlohmann::json::array();
  for (const CaseResult& c : cases) {
    arr.push_back({{"name", c.name},
                   {"status", c.pass ? "pass" : "fail"},
                   {"expected", c.expected},
                   {"actual", c.actual}});
  }
  out["cases"] = arr;
  return out;
}

}  // namespace braidcong
