#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsr/cycles.hpp"
#include "fsr/feedback.hpp"
#include "fsr/number_theory.hpp"
#include "fsr/state.hpp"

namespace fsr {

/// (x_1, ..., x_{n+1}) with x_{n+1} = f(x_1, ..., x_n); x_1 is the most
/// significant bit of bits().
class ExtRep {
 public:
  ExtRep(unsigned length, std::uint64_t bits);
  static ExtRep from_bits(std::string_view bits);

  unsigned length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  unsigned weight() const;
  /// The first n digits.
  State state() const { return State(length_ - 1, bits_ >> 1); }
  std::string to_string() const;

  friend bool operator==(const ExtRep&, const ExtRep&) = default;

 private:
  unsigned length_;
  std::uint64_t bits_;
};

ExtRep extended_rep(const FeedbackSpec& f, const State& s);

/// True when the ones form a single cyclic block (all-ones included, all-zeros excluded).
bool is_run_cycle(const ExtRep& e);
unsigned longest_cyclic_run(const ExtRep& e);

// Word-level primitives over a `width`-bit word, first digit most significant.
// The generator calls these once per output bit.
namespace word {

std::uint64_t rotate_left(std::uint64_t w, unsigned r, unsigned width);
bool is_cyclic_run(std::uint64_t w, unsigned width);
unsigned longest_cyclic_run(std::uint64_t w, unsigned width);
/// Whether w reads 0^r 1^t 0 ... 1 0 with exactly t ones after the leading zeros.
bool has_preferred_form(std::uint64_t w, unsigned width, unsigned t);
/// Base-2 maximum among the rotations of w in preferred form, using t =
/// longest cyclic run of w; nullopt for run words.
std::optional<std::uint64_t> preferred_rotation(std::uint64_t w, unsigned width);

}  // namespace word

struct PreferredState {
  State state;
  /// r in 0^r 1^t 0 ... 1; zero for run-cycles.
  unsigned leading_zeros;
  /// t, the longest cyclic run of ones in the extended representation.
  unsigned run_length;
  bool run_cycle;
};

/// P(C) for a cycle of CSR_n. Throws std::invalid_argument for any other register.
PreferredState preferred_state(const FeedbackSpec& f, const CycleRep& c);

struct MainCycle {
  CycleRep cycle;
  /// (P(C), P(C)') for each joined cycle, in joining order.
  std::vector<std::pair<State, State>> joins;
};

/// MC_k: starting from the run-cycle of extended weight 2k+1, joins the
/// remaining cycles of that weight in order of longest run of ones, ties
/// broken by the larger preferred state.
MainCycle build_main_cycle(const FeedbackSpec& f, unsigned k, const EnumerationLimits& limits = {});

/// Bridge states U_{2k+1} for k = 1 .. floor(n/2). U_{2k+1} lies on MC_k and
/// its companion on MC_{k-1}.
class UTable {
 public:
  UTable(unsigned order, std::vector<State> bridges);

  unsigned order() const { return order_; }
  unsigned max_k() const { return order_ / 2; }
  const State& bridge(unsigned k) const;
  void set_bridge(unsigned k, State s);
  const std::vector<State>& bridges() const { return bridges_; }

  friend bool operator==(const UTable&, const UTable&) = default;

 private:
  unsigned order_;
  std::vector<State> bridges_;
};

/// U_{2k+1} = 1^(2k-1) 0^(n-2k) 1.
UTable default_utable(unsigned n);

struct UTableReport {
  std::vector<std::string> violations;
  /// Number of admissible U_{2k+1}, index k-1.
  std::vector<Count> choices;

  bool ok() const { return violations.empty(); }
};

UTableReport validate_utable(unsigned n, const UTable& u);

/// Product over k of the admissible bridge choices.
Count count_utables(unsigned n);

/// Joins MC_floor(n/2), ..., MC_0 into one cycle of length 2^n at the
/// bridge pairs (U_{2k+1}, U_{2k+1}'); materializes every cycle.
CycleRep join_main_cycles(unsigned n, const UTable& u, const EnumerationLimits& limits = {});

class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, std::uint64_t steps)
      : std::runtime_error(what), steps_(steps) {}
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t steps_;
};

/// Window S_i with its running parity p_i and weight w_i.
struct GeneratorState {
  State window;
  int parity;
  unsigned weight;
  std::uint64_t step;

  static GeneratorState start(const State& s0);
  bool consistent() const;
};

enum class StepBranch { stable, interchange };

struct StepResult {
  int bit;
  StepBranch branch;
  GeneratorState next;
};

/// One step of the CSR-based generator; decisions use only the current window.
StepResult generator_step(const GeneratorState& gs, const UTable& u);

inline constexpr unsigned kMaxGeneratorOrder = 30;

/// Emits a_{n+1}, a_{n+2}, ... as ASCII '0'/'1' from s0 until the window
/// returns to s0. Throws GenerationError unless that takes exactly 2^n steps.
std::string generate(unsigned n, const UTable& u, const State& s0);

/// (0, 1^(n-1)).
State default_seed(unsigned n);

struct DeBruijnCheck {
  bool ok;
  std::size_t length;
  std::size_t expected_length;
  /// First window (in reading order) that occurs twice.
  std::optional<std::string> repeated_window;
};

/// Checks an ASCII bit string read cyclically; throws std::invalid_argument
/// on characters other than '0'/'1'.
DeBruijnCheck check_debruijn(std::string_view seq, unsigned n);
bool verify_debruijn(std::string_view seq, unsigned n);

}  // namespace fsr
