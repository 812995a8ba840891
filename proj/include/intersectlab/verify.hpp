#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace intersectlab::verify {

struct SuiteResult {
  std::string name;
  std::string title;
  std::uint64_t checks = 0;
  /// Descriptions of failed checks; the first few only when there are many.
  std::vector<std::string> failures;
  std::uint64_t failure_count = 0;
  /// Values worth reporting alongside the verdict, e.g. search node counts.
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return failure_count == 0; }
};

/// Suite names in acceptance order; "all" is accepted by run_suites only.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name);

/// Runs `name`, or every suite when name is "all".
std::vector<SuiteResult> run_suites(const std::string& name);

}  // namespace intersectlab::verify
