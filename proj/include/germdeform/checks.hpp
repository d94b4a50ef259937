#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "germdeform/polynomial.hpp"

namespace germdeform {

struct CheckRow {
  std::string name;
  bool pass = false;
  double value = 0.0;      // measured quantity (error, fraction, count)
  double threshold = 0.0;
  std::string detail;
};

/// Raw terms of the built-in corpus germs, in fixed order.
struct CorpusEntry {
  std::string name;
  std::vector<Term> terms;
  int expected_r = 0;
};
const std::vector<CorpusEntry>& builtin_corpus();

/// Runs the invariant suite over the built-in corpus. Rows come back in a fixed order.
std::vector<CheckRow> run_checks(std::uint64_t seed);

}  // namespace germdeform
