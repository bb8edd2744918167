#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsr/state.hpp"

namespace fsr {

/// Truth table of a boolean function of m variables (m may be 0).
/// Entry j is the value at the input whose bits, first variable most
/// significant, spell j.
class TruthTable {
 public:
  TruthTable(unsigned vars, std::vector<std::uint8_t> bits);
  static TruthTable constant(unsigned vars, int value);
  static TruthTable parity(unsigned vars);
  static TruthTable complemented_parity(unsigned vars);
  /// Table whose entry j is bit j of `packed`; requires 2^vars <= 64.
  static TruthTable from_packed(unsigned vars, std::uint64_t packed);
  /// ASCII '0'/'1', entry 0 first; the length must be a power of two.
  static TruthTable from_string(std::string_view bits);

  unsigned vars() const { return vars_; }
  std::size_t size() const { return bits_.size(); }
  int operator[](std::uint64_t index) const { return bits_[index]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  std::string to_string() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned vars_;
  std::vector<std::uint8_t> bits_;
};

enum class RegisterKind { psr, csr, general };

std::string_view to_string(RegisterKind kind);

/// Nonsingular feedback f(x_1, ..., x_n) = x_1 xor g(x_2, ..., x_n).
///
/// PSR and CSR are evaluated by popcount and never materialize g, so they
/// are usable at any order; general specs carry their table.
class FeedbackSpec {
 public:
  static FeedbackSpec psr(unsigned order);
  static FeedbackSpec csr(unsigned order);
  /// Wraps g (over order-1 variables); the kind is PSR/CSR when g is
  /// (complemented) parity and GENERAL otherwise.
  static FeedbackSpec from_table(TruthTable g);

  unsigned order() const { return order_; }
  RegisterKind kind() const { return kind_; }

  /// g at the (n-1)-bit suffix value (x_2 most significant).
  int g(std::uint64_t suffix) const;
  /// f at a raw n-bit state value.
  int f(std::uint64_t value) const;
  /// Successor of a raw n-bit state value.
  std::uint64_t next(std::uint64_t value) const {
    return ((value << 1) & order_mask(order_)) | static_cast<std::uint64_t>(f(value));
  }

  TruthTable g_table() const;

 private:
  FeedbackSpec(unsigned order, RegisterKind kind, std::optional<TruthTable> table);

  unsigned order_;
  RegisterKind kind_;
  std::optional<TruthTable> table_;
};

/// f(a_1, ..., a_n).
int eval(const FeedbackSpec& f, const State& s);
/// (a_2, ..., a_n, f(s)).
State next_state(const FeedbackSpec& f, const State& s);

/// Bounds for operations that walk all 2^n states.
struct EnumerationLimits {
  unsigned max_order = 22;
};

void require_enumerable(unsigned order, const EnumerationLimits& limits, std::string_view what);

}  // namespace fsr
