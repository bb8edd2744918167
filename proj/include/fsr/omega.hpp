#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fsr/cycles.hpp"
#include "fsr/feedback.hpp"

namespace fsr {

// Omega(n): nonsingular n-stage registers whose cycle lengths all divide n+1.

struct OmegaVerdict {
  bool member;
  /// A cycle whose length does not divide n+1, when member is false.
  std::optional<CycleRep> witness;
};

OmegaVerdict in_omega(const FeedbackSpec& f, const EnumerationLimits& limits = {});

/// True when every state of c has the same extended weight under f.
bool extended_weight_constant(const FeedbackSpec& f, const CycleRep& c);

enum class OmegaScope {
  /// Every g over n-1 variables.
  exhaustive,
  /// Symmetric g only, one candidate per value vector of length n.
  symmetric,
};

inline constexpr unsigned kMaxExhaustiveOrder = 5;

/// Candidate numbering: for exhaustive scope, bit j of the id is g's table
/// entry j; for symmetric scope, bit w is g's value on inputs of weight w.
std::uint64_t omega_candidate_count(unsigned n, OmegaScope scope);
TruthTable omega_candidate(unsigned n, OmegaScope scope, std::uint64_t id);

struct CandidateVerdict {
  std::uint64_t candidate;
  bool member;
  /// Length of the first non-dividing cycle found, 0 for members.
  std::uint64_t offending_length;
};

struct OmegaReport {
  unsigned order;
  OmegaScope scope;
  std::vector<CandidateVerdict> verdicts;
  std::vector<FeedbackSpec> members;
};

/// Tests every candidate in the scope. Exhaustive scope needs n <= 5; the
/// symmetric scope needs n within the enumeration cap. The candidate range
/// is split into independent shards that are merged in candidate order.
OmegaReport enumerate_omega(unsigned n, OmegaScope scope, const EnumerationLimits& limits = {});

}  // namespace fsr
