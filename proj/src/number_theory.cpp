#include "fsr/number_theory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace fsr {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("factorize(0)");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p <= m / p; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

const NumberTheoryCache::Entry& NumberTheoryCache::lookup(std::uint64_t m) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(m); it != entries_.end()) return it->second;
  }
  const auto factors = factorize(m);
  Entry e{1, m, {1}};
  for (auto [p, k] : factors) {
    e.mobius = k > 1 ? 0 : -e.mobius;
    e.totient = e.totient / p * (p - 1);
    const std::size_t base = e.divisors.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= k; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) e.divisors.push_back(e.divisors[j] * pk);
    }
  }
  std::sort(e.divisors.begin(), e.divisors.end());
  std::unique_lock lock(mutex_);
  // std::map never invalidates references, so returning into it is safe.
  return entries_.try_emplace(m, std::move(e)).first->second;
}

int NumberTheoryCache::mobius(std::uint64_t m) { return lookup(m).mobius; }
std::uint64_t NumberTheoryCache::totient(std::uint64_t m) { return lookup(m).totient; }
std::vector<std::uint64_t> NumberTheoryCache::divisors(std::uint64_t m) {
  return lookup(m).divisors;
}

NumberTheoryCache& number_theory() {
  static NumberTheoryCache cache;
  return cache;
}

Count pow2(std::uint64_t exponent) {
  Count one = 1;
  return one << static_cast<unsigned>(exponent);
}

Count binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Count exact_div(const Count& num, const Count& den, const char* context) {
  Count q;
  Count r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw std::logic_error(std::string(context) + ": " + num.str() + " is not divisible by " +
                           den.str());
  }
  return q;
}

}  // namespace fsr
