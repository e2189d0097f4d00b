#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace interbranch {

/// One verified claim with the worst measured deviation and its bound.
struct ClaimResult {
  std::string suite;
  std::string claim;
  bool pass = false;
  double measured = 0;
  double tolerance = 0;
  std::string detail;
};

/// theorem1, corollary1, lemma1, corollary2, swapsynth.
std::vector<std::string_view> suite_names();

/// Runs a named suite, or every suite for "all". Sampling uses fixed seeds,
/// so results are reproducible. Throws std::invalid_argument for an unknown
/// suite name.
std::vector<ClaimResult> run_suite(std::string_view name);

}  // namespace interbranch
