#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsr/feedback.hpp"
#include "fsr/state.hpp"

namespace fsr {

/// A cycle of an n-stage register, stored as its sequence of first digits.
///
/// The state at position j is the n-window starting at digit j of the
/// infinite repetition of digits(). Construction canonicalizes to the
/// lexicographically least rotation; the full period is always kept, so
/// length() is the true cycle length even when it is smaller than n.
class CycleRep {
 public:
  CycleRep(unsigned order, std::string digits);

  unsigned order() const { return order_; }
  std::size_t length() const { return digits_.size(); }
  const std::string& digits() const { return digits_; }

  State state_at(std::size_t position) const;
  std::optional<std::size_t> position_of(const State& s) const;
  bool contains(const State& s) const { return position_of(s).has_value(); }

  std::vector<State> states() const;
  /// States in cycle order beginning at `start`, which must lie on the cycle.
  std::vector<State> states_from(const State& start) const;

  /// True when every state steps to its successor under f and the l
  /// windows are pairwise distinct.
  bool is_cycle_of(const FeedbackSpec& f) const;

  friend bool operator==(const CycleRep&, const CycleRep&) = default;

 private:
  unsigned order_;
  std::string digits_;
};

/// Index of the lexicographically least rotation (0 < 1) of a digit string.
std::size_t least_rotation(const std::string& digits);

/// Cycles sorted by (length, digits) plus, for every state value, the index
/// of its cycle in that list.
struct CycleLabeling {
  std::vector<CycleRep> cycles;
  std::vector<std::uint32_t> cycle_of_state;
};

CycleLabeling label_cycles(const FeedbackSpec& f, const EnumerationLimits& limits = {});

/// Partition of all 2^n states into cycles, sorted by (length, digits).
std::vector<CycleRep> decompose(const FeedbackSpec& f, const EnumerationLimits& limits = {});

CycleRep cycle_of(const FeedbackSpec& f, const State& s);

struct AdjacencyEdge {
  std::uint32_t a;
  std::uint32_t b;
  /// Weight of the (n-1)-digit block shared by the conjugate pair.
  unsigned shared_weight;

  friend bool operator==(const AdjacencyEdge&, const AdjacencyEdge&) = default;
  friend auto operator<=>(const AdjacencyEdge&, const AdjacencyEdge&) = default;
};

/// One vertex per cycle; an edge for each distinct (a < b, k) such that a
/// conjugate pair with shared suffix weight k straddles cycles a and b.
/// Conjugate pairs and companion pairs give the same edge set, since the
/// successors of a conjugate pair are a companion pair.
struct AdjacencyGraph {
  std::vector<CycleRep> vertices;
  std::vector<AdjacencyEdge> edges;

  std::size_t component_count() const;
  bool connected() const { return component_count() <= 1; }
};

AdjacencyGraph adjacency_graph(const FeedbackSpec& f, const EnumerationLimits& limits = {});

enum class PairKind { companion, conjugate };

/// Joins two cycles that share a companion (or conjugate) pair.
///
/// `s` lies on `first` and its partner on `second`. For a companion pair the
/// predecessors of s and s' exchange successors; for a conjugate pair s and
/// its conjugate exchange successors. The result has length l1 + l2.
CycleRep join_cycles(const FeedbackSpec& f, const CycleRep& first, const CycleRep& second,
                     const State& s, PairKind kind = PairKind::companion);

}  // namespace fsr
