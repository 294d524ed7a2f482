#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qcrystal {

struct SelftestOptions {
  int max_size = 6;
  int max_n = 4;
  /// Worker threads; 0 picks QCRYSTAL_THREADS or the hardware count.
  unsigned threads = 0;
};

struct CheckResult {
  std::string name;
  std::string description;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  /// Observations that do not count as failures.
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

/// Worker count from QCRYSTAL_THREADS, else the hardware concurrency; at
/// least 1.
unsigned default_thread_count();

/// Runs every invariant over all shapes of size <= max_size and alphabets
/// 1..max_n. Results come back in a fixed order regardless of threading.
std::vector<CheckResult> run_selftest(const SelftestOptions& options);

}  // namespace qcrystal
