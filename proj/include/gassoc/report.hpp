#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gassoc {

/// Outcome of an exhaustive check: how many cases were examined and what failed.
struct CheckReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> skipped;
  bool ok() const { return failures.empty(); }
  void merge(const CheckReport& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    skipped.insert(skipped.end(), other.skipped.begin(), other.skipped.end());
  }
};

}  // namespace gassoc
