#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace boxspace::suites {

struct Config {
  std::uint64_t p = 5;
  std::uint64_t q = 29;
  std::uint64_t seed = 0;
  std::uint64_t cap_elements = 10'000'000;
  std::uint64_t cap_vertices = 4'000'000;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;  // one line
  nlohmann::json detail;
  double seconds = 0;
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const Config& cfg);

std::vector<std::string> suite_names();
// Throws ParameterError for unknown names.
std::vector<int> suite_criteria(const std::string& suite);
std::vector<CriterionResult> run_suite(const std::string& suite, const Config& cfg);

}  // namespace boxspace::suites
