#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsr/feedback.hpp"

namespace fsr {

using BitVector = std::vector<std::uint8_t>;

BitVector bits_from_string(std::string_view text);
std::string bits_to_string(std::span<const std::uint8_t> bits);

/// a ⪯ b: every binary digit of a is at most the matching digit of b.
constexpr bool dominated_by(std::uint64_t a, std::uint64_t b) { return (a & b) == a; }

/// C(w, i) mod 2, which is 1 exactly when i ⪯ w (Lucas).
constexpr int binomial_parity(std::uint64_t w, std::uint64_t i) { return dominated_by(i, w) ? 1 : 0; }

/// lambda(i) = xor over k ⪯ i of v(k). The transform is its own inverse, so
/// anf_to_value applies the same map.
BitVector value_to_anf(std::span<const std::uint8_t> v);
BitVector anf_to_value(std::span<const std::uint8_t> lambda);

/// Symmetric boolean function of n variables, held both as its value vector
/// v (f(x) = v(wt(x))) and its ANF vector over elementary symmetric
/// polynomials X_{i,n}.
class SymFn {
 public:
  static SymFn from_values(BitVector v);
  static SymFn from_anf(BitVector lambda);
  /// x_1 xor ... xor x_n.
  static SymFn parity(unsigned n);
  /// 1 xor x_1 xor ... xor x_n.
  static SymFn complemented_parity(unsigned n);

  unsigned arity() const { return static_cast<unsigned>(values_.size() - 1); }
  const BitVector& values() const { return values_; }
  const BitVector& anf() const { return anf_; }

  TruthTable truth_table() const;

 private:
  SymFn(BitVector values, BitVector anf) : values_(std::move(values)), anf_(std::move(anf)) {}

  BitVector values_;
  BitVector anf_;
};

/// v(wt(x)).
int eval_symmetric(const SymFn& f, std::span<const std::uint8_t> x);
/// xor over i of lambda(i) * (C(wt(x), i) mod 2).
int eval_symmetric_anf(const SymFn& f, std::span<const std::uint8_t> x);

enum class LevelValue { zero, one, mixed };

enum class AlternatingPattern {
  none,
  /// g_k = 1 for odd k, 0 for even k (the PSR feedback tail).
  odd_levels_one,
  /// g_k = 1 for even k, 0 for odd k (the CSR feedback tail).
  even_levels_one,
};

/// Behaviour of a function on each Hamming-weight level 0..m.
struct RestrictionProfile {
  std::vector<LevelValue> levels;

  bool symmetric() const;
  AlternatingPattern pattern() const;
};

inline constexpr unsigned kMaxProfileVars = 24;

RestrictionProfile restriction_profile(const TruthTable& g);
bool is_symmetric(const TruthTable& g);

}  // namespace fsr
