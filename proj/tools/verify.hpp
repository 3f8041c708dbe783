#pragma once

#include <cstdint>
#include <string>

namespace tdmcli {

struct SuiteResult {
  int passed = 0;
  int trials = 0;
  std::string first_failure;
};

// Known suites: prop-dual, gadget, rowpipe, colpipe, slack.
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed);

}  // namespace tdmcli
