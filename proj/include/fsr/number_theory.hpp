#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsr {

using Count = boost::multiprecision::cpp_int;

/// Memoized Mobius, Euler totient and divisor lists. Reads take a shared
/// lock; a miss computes outside the lock and inserts if still absent.
class NumberTheoryCache {
 public:
  int mobius(std::uint64_t m);
  std::uint64_t totient(std::uint64_t m);
  /// Ascending.
  std::vector<std::uint64_t> divisors(std::uint64_t m);

 private:
  struct Entry {
    int mobius;
    std::uint64_t totient;
    std::vector<std::uint64_t> divisors;
  };
  const Entry& lookup(std::uint64_t m);

  std::shared_mutex mutex_;
  std::map<std::uint64_t, Entry> entries_;
};

NumberTheoryCache& number_theory();

/// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m);

Count pow2(std::uint64_t exponent);
Count binomial(unsigned n, unsigned k);

/// Exact quotient; throws std::logic_error if `den` does not divide `num`.
Count exact_div(const Count& num, const Count& den, const char* context);

}  // namespace fsr
