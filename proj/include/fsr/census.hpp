#pragma once

#include <cstdint>
#include <map>

#include "fsr/feedback.hpp"
#include "fsr/number_theory.hpp"

namespace fsr {

// Registers are indexed by their order n throughout; every cycle length d
// of PSR_n or CSR_n divides n+1.

/// Number of cycles of length d in PSR_n. Requires d | (n+1).
Count psr_count(unsigned n, std::uint64_t d);

/// Number of cycles of length d in CSR_n. Requires d | (n+1); zero for odd
/// n whenever (n+1)/d is even.
Count csr_count(unsigned n, std::uint64_t d);

struct CycleTotals {
  Count psr;
  Count csr;
};

/// Total cycle counts of PSR_n and CSR_n from the totient sums over d | (n+1).
CycleTotals golomb_totals(unsigned n);

enum class CensusSource { formula, enumeration };

/// Cycle length -> number of cycles, zero entries omitted.
struct CensusTable {
  RegisterKind kind;
  unsigned order;
  CensusSource source;
  std::map<std::uint64_t, Count> entries;

  Count cycle_total() const;
  Count state_total() const;
};

CensusTable census(RegisterKind kind, unsigned n, CensusSource source,
                   const EnumerationLimits& limits = {});

/// CSR_n cycles grouped by extended weight (always odd, 1..n+1).
std::map<unsigned, std::uint64_t> weight_census(unsigned n, const EnumerationLimits& limits = {});

}  // namespace fsr
