#pragma once

#include <cstdint>
#include <vector>

#include "fsr/feedback.hpp"

namespace testing_support {

inline fsr::TruthTable table_of(const std::vector<int>& g, unsigned vars) {
  std::vector<std::uint8_t> bits(g.begin(), g.end());
  return fsr::TruthTable(vars, std::move(bits));
}

inline fsr::FeedbackSpec spec_of(const std::vector<int>& g, unsigned n) {
  return fsr::FeedbackSpec::from_table(table_of(g, n - 1));
}

}  // namespace testing_support
