#include "fsr/feedback.hpp"

#include <bit>

namespace fsr {

namespace {

void require_same_order(const FeedbackSpec& f, const State& s) {
  if (s.order() != f.order()) {
    throw std::invalid_argument("state order " + std::to_string(s.order()) +
                                " does not match register order " + std::to_string(f.order()));
  }
}

}  // namespace

TruthTable::TruthTable(unsigned vars, std::vector<std::uint8_t> bits)
    : vars_(vars), bits_(std::move(bits)) {
  if (vars > 40) throw std::invalid_argument("truth table arity too large");
  if (bits_.size() != (std::size_t{1} << vars)) {
    throw std::invalid_argument("truth table over " + std::to_string(vars) + " variables needs " +
                                std::to_string(std::size_t{1} << vars) + " entries, got " +
                                std::to_string(bits_.size()));
  }
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
  }
}

TruthTable TruthTable::constant(unsigned vars, int value) {
  return TruthTable(vars, std::vector<std::uint8_t>(std::size_t{1} << vars,
                                                    static_cast<std::uint8_t>(value & 1)));
}

TruthTable TruthTable::parity(unsigned vars) {
  std::vector<std::uint8_t> bits(std::size_t{1} << vars);
  for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = std::popcount(j) & 1u;
  return TruthTable(vars, std::move(bits));
}

TruthTable TruthTable::complemented_parity(unsigned vars) {
  std::vector<std::uint8_t> bits(std::size_t{1} << vars);
  for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = (std::popcount(j) & 1u) ^ 1u;
  return TruthTable(vars, std::move(bits));
}

TruthTable TruthTable::from_packed(unsigned vars, std::uint64_t packed) {
  if (vars > 6) throw std::invalid_argument("packed truth tables hold at most 6 variables");
  std::vector<std::uint8_t> bits(std::size_t{1} << vars);
  for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = (packed >> j) & 1u;
  return TruthTable(vars, std::move(bits));
}

TruthTable TruthTable::from_string(std::string_view text) {
  if (text.empty() || !std::has_single_bit(text.size())) {
    throw std::invalid_argument("truth table length must be a power of two");
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("truth table must be ASCII bits");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return TruthTable(static_cast<unsigned>(std::countr_zero(text.size())), std::move(bits));
}

std::string TruthTable::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

std::string_view to_string(RegisterKind kind) {
  switch (kind) {
    case RegisterKind::psr: return "PSR";
    case RegisterKind::csr: return "CSR";
    case RegisterKind::general: return "GENERAL";
  }
  return "?";
}

FeedbackSpec::FeedbackSpec(unsigned order, RegisterKind kind, std::optional<TruthTable> table)
    : order_(order), kind_(kind), table_(std::move(table)) {
  if (order < 2 || order > kMaxOrder) {
    throw std::invalid_argument("register order must lie in [2, " + std::to_string(kMaxOrder) +
                                "], got " + std::to_string(order));
  }
}

FeedbackSpec FeedbackSpec::psr(unsigned order) {
  return FeedbackSpec(order, RegisterKind::psr, std::nullopt);
}

FeedbackSpec FeedbackSpec::csr(unsigned order) {
  return FeedbackSpec(order, RegisterKind::csr, std::nullopt);
}

FeedbackSpec FeedbackSpec::from_table(TruthTable g) {
  const unsigned order = g.vars() + 1;
  if (order < 2) throw std::invalid_argument("g needs at least one variable (order >= 2)");
  if (g == TruthTable::parity(g.vars())) return psr(order);
  if (g == TruthTable::complemented_parity(g.vars())) return csr(order);
  return FeedbackSpec(order, RegisterKind::general, std::move(g));
}

int FeedbackSpec::g(std::uint64_t suffix) const {
  switch (kind_) {
    case RegisterKind::psr: return std::popcount(suffix) & 1;
    case RegisterKind::csr: return (std::popcount(suffix) & 1) ^ 1;
    case RegisterKind::general: break;
  }
  return (*table_)[suffix];
}

int FeedbackSpec::f(std::uint64_t value) const {
  const auto first = static_cast<int>((value >> (order_ - 1)) & 1u);
  return first ^ g(value & order_mask(order_ - 1));
}

TruthTable FeedbackSpec::g_table() const {
  switch (kind_) {
    case RegisterKind::psr: return TruthTable::parity(order_ - 1);
    case RegisterKind::csr: return TruthTable::complemented_parity(order_ - 1);
    case RegisterKind::general: break;
  }
  return *table_;
}

int eval(const FeedbackSpec& f, const State& s) {
  require_same_order(f, s);
  return f.f(s.value());
}

State next_state(const FeedbackSpec& f, const State& s) {
  require_same_order(f, s);
  return State(f.order(), f.next(s.value()));
}

void require_enumerable(unsigned order, const EnumerationLimits& limits, std::string_view what) {
  if (order > limits.max_order) {
    throw LimitError(std::string(what) + ": order " + std::to_string(order) +
                     " exceeds the enumeration cap of " + std::to_string(limits.max_order) +
                     " (2^" + std::to_string(limits.max_order) + " states)");
  }
}

}  // namespace fsr
