#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fsr {

/// Thrown when an exhaustive operation would exceed the configured state-space cap.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest register order a State can hold (one bit of headroom for the
/// (n+1)-bit extended representation).
inline constexpr unsigned kMaxOrder = 62;

/// Content (a_1, ..., a_n) of an n-stage register.
///
/// Packed into an integer with a_1 as the most significant digit, so
/// value() = sum a_i * 2^(n-i). label() is value()+1, the 1-based numbering
/// that lists the states 0...0 through 1...1 as 1 through 2^n.
class State {
 public:
  State(unsigned order, std::uint64_t value);

  /// Parses an ASCII string of '0'/'1', a_1 first.
  static State from_bits(std::string_view bits);

  unsigned order() const { return order_; }
  std::uint64_t value() const { return value_; }
  std::uint64_t label() const { return value_ + 1; }

  /// a_i for 1 <= i <= n.
  int bit(unsigned i) const;
  int first() const { return bit(1); }
  int last() const { return static_cast<int>(value_ & 1u); }

  unsigned weight() const;
  int parity() const { return static_cast<int>(weight() & 1u); }

  std::string to_string() const;

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

 private:
  unsigned order_;
  std::uint64_t value_;
};

inline std::uint64_t state_count(unsigned order) { return std::uint64_t{1} << order; }
inline std::uint64_t order_mask(unsigned order) { return state_count(order) - 1; }

/// Flips a_1.
State conjugate(const State& s);
/// Flips a_n.
State companion(const State& s);

}  // namespace fsr
