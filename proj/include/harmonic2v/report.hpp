#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace harmonic2v {

/// Outcome of one exact check; `detail` carries a counterexample on failure.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

class CheckReport {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }
  void merge(const CheckReport& other) {
    results_.insert(results_.end(), other.results_.begin(), other.results_.end());
  }

  const std::vector<CheckResult>& results() const noexcept { return results_; }
  std::size_t size() const noexcept { return results_.size(); }
  std::size_t failures() const noexcept {
    std::size_t n = 0;
    for (const auto& r : results_) n += r.passed ? 0 : 1;
    return n;
  }
  /// Vacuously true for an empty report.
  bool all_passed() const noexcept { return failures() == 0; }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace harmonic2v
