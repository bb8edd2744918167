#include "fsr/symfn.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fsr {

namespace {

void require_bits(std::span<const std::uint8_t> bits, const char* what) {
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument(std::string(what) + " entries must be 0 or 1");
  }
}

// In-place GF(2) zeta transform over the subset lattice; {0..len-1} is
// closed downward under ⪯, so zero padding to a power of two is harmless.
BitVector subset_xor_transform(std::span<const std::uint8_t> in) {
  require_bits(in, "vector");
  const std::size_t padded = std::bit_ceil(std::max<std::size_t>(in.size(), 1));
  BitVector a(padded, 0);
  std::copy(in.begin(), in.end(), a.begin());
  for (std::size_t step = 1; step < padded; step <<= 1) {
    for (std::size_t i = 0; i < padded; ++i) {
      if (i & step) a[i] ^= a[i ^ step];
    }
  }
  a.resize(in.size());
  return a;
}

unsigned weight_of(std::span<const std::uint8_t> x) {
  require_bits(x, "input");
  return static_cast<unsigned>(std::count(x.begin(), x.end(), std::uint8_t{1}));
}

}  // namespace

BitVector bits_from_string(std::string_view text) {
  BitVector out;
  out.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("expected ASCII bits, got \"" + std::string(text) + "\"");
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(static_cast<char>('0' + b));
  return out;
}

BitVector value_to_anf(std::span<const std::uint8_t> v) { return subset_xor_transform(v); }
BitVector anf_to_value(std::span<const std::uint8_t> lambda) {
  return subset_xor_transform(lambda);
}

SymFn SymFn::from_values(BitVector v) {
  if (v.empty()) throw std::invalid_argument("value vector needs at least one entry");
  auto anf = value_to_anf(v);
  return SymFn(std::move(v), std::move(anf));
}

SymFn SymFn::from_anf(BitVector lambda) {
  if (lambda.empty()) throw std::invalid_argument("ANF vector needs at least one entry");
  auto values = anf_to_value(lambda);
  return SymFn(std::move(values), std::move(lambda));
}

SymFn SymFn::parity(unsigned n) {
  BitVector v(n + 1);
  for (unsigned i = 0; i <= n; ++i) v[i] = i & 1u;
  return from_values(std::move(v));
}

SymFn SymFn::complemented_parity(unsigned n) {
  BitVector v(n + 1);
  for (unsigned i = 0; i <= n; ++i) v[i] = (i & 1u) ^ 1u;
  return from_values(std::move(v));
}

TruthTable SymFn::truth_table() const {
  std::vector<std::uint8_t> bits(std::size_t{1} << arity());
  for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = values_[std::popcount(j)];
  return TruthTable(arity(), std::move(bits));
}

int eval_symmetric(const SymFn& f, std::span<const std::uint8_t> x) {
  if (x.size() != f.arity()) throw std::invalid_argument("input arity does not match function");
  return f.values()[weight_of(x)];
}

int eval_symmetric_anf(const SymFn& f, std::span<const std::uint8_t> x) {
  if (x.size() != f.arity()) throw std::invalid_argument("input arity does not match function");
  const unsigned w = weight_of(x);
  int out = 0;
  for (unsigned i = 0; i <= f.arity(); ++i) out ^= f.anf()[i] & binomial_parity(w, i);
  return out;
}

bool RestrictionProfile::symmetric() const {
  return std::none_of(levels.begin(), levels.end(),
                      [](LevelValue v) { return v == LevelValue::mixed; });
}

AlternatingPattern RestrictionProfile::pattern() const {
  bool odd_ones = true;
  bool even_ones = true;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const auto want_odd = (k % 2 == 1) ? LevelValue::one : LevelValue::zero;
    const auto want_even = (k % 2 == 0) ? LevelValue::one : LevelValue::zero;
    odd_ones = odd_ones && levels[k] == want_odd;
    even_ones = even_ones && levels[k] == want_even;
  }
  if (odd_ones) return AlternatingPattern::odd_levels_one;
  if (even_ones) return AlternatingPattern::even_levels_one;
  return AlternatingPattern::none;
}

RestrictionProfile restriction_profile(const TruthTable& g) {
  if (g.vars() > kMaxProfileVars) {
    throw std::invalid_argument("restriction profile supports at most " +
                                std::to_string(kMaxProfileVars) + " variables");
  }
  constexpr std::uint8_t kSeenZero = 1;
  constexpr std::uint8_t kSeenOne = 2;
  std::vector<std::uint8_t> seen(g.vars() + 1, 0);
  for (std::uint64_t j = 0; j < g.size(); ++j) {
    seen[std::popcount(j)] |= g[j] ? kSeenOne : kSeenZero;
  }
  RestrictionProfile profile;
  for (auto s : seen) {
    profile.levels.push_back(s == kSeenZero  ? LevelValue::zero
                             : s == kSeenOne ? LevelValue::one
                                             : LevelValue::mixed);
  }
  return profile;
}

bool is_symmetric(const TruthTable& g) { return restriction_profile(g).symmetric(); }

}  // namespace fsr
