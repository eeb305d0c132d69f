#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affw/json_io.hpp"

namespace affw {

struct OracleParams {
  RootType type = RootType::A2;
  int window = 0;  // 0 picks the suite default
  std::uint64_t seed = 0;
  int samples = 0;  // 0 picks the suite default
  int budget = kDefaultBudget;
};

struct OracleReport {
  std::string suite;
  RootType type = RootType::A2;
  int window = 0;
  std::uint64_t seed = 0;
  long long cases = 0;
  long long failure_count = 0;
  std::vector<Json> failures;  // first few counterexamples

  bool passed() const { return failure_count == 0; }
  Json to_json() const;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
OracleReport run_suite(const std::string& name, const OracleParams& params);

}  // namespace affw
