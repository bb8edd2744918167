#include "fsr/state.hpp"

#include <bit>

namespace fsr {

State::State(unsigned order, std::uint64_t value) : order_(order), value_(value) {
  if (order < 2 || order > kMaxOrder) {
    throw std::invalid_argument("register order must lie in [2, " + std::to_string(kMaxOrder) +
                                "], got " + std::to_string(order));
  }
  if (value > order_mask(order)) {
    throw std::invalid_argument("state value " + std::to_string(value) + " does not fit in " +
                                std::to_string(order) + " bits");
  }
}

State State::from_bits(std::string_view bits) {
  std::uint64_t v = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("state bits must be '0' or '1': \"" + std::string(bits) + "\"");
    }
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return State(static_cast<unsigned>(bits.size()), v);
}

int State::bit(unsigned i) const {
  if (i < 1 || i > order_) {
    throw std::out_of_range("state digit index " + std::to_string(i) + " outside [1, " +
                            std::to_string(order_) + "]");
  }
  return static_cast<int>((value_ >> (order_ - i)) & 1u);
}

unsigned State::weight() const { return static_cast<unsigned>(std::popcount(value_)); }

std::string State::to_string() const {
  std::string out(order_, '0');
  for (unsigned i = 0; i < order_; ++i) {
    if ((value_ >> (order_ - 1 - i)) & 1u) out[i] = '1';
  }
  return out;
}

State conjugate(const State& s) {
  return State(s.order(), s.value() ^ (std::uint64_t{1} << (s.order() - 1)));
}

State companion(const State& s) { return State(s.order(), s.value() ^ 1u); }

}  // namespace fsr
