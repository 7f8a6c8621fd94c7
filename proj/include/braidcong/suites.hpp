#pragma once

#include "braidcong/report.hpp"
#include "braidcong/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace braidcong {

// Parameter ranges for a verification suite.  Unset fields fall back to the
// suite's documented defaults; seed fixes every randomized case.
struct SuiteConfig {
  std::vector<int> ns;
  std::vector<std::uint32_t> ps;
  std::vector<std::uint32_t> ms;
  std::optional<int> samples;
  size_t limit = 200'000;
  std::uint64_t seed = kDefaultSeed;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one named suite; throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace braidcong
