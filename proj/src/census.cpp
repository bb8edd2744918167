#include "fsr/census.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "fsr/cycles.hpp"

namespace fsr {

namespace {

void require_divisor(unsigned n, std::uint64_t d) {
  if (n < 2) throw std::invalid_argument("register order must be at least 2");
  if (d == 0 || (std::uint64_t{n} + 1) % d != 0) {
    throw std::invalid_argument("cycle length " + std::to_string(d) + " does not divide n+1 = " +
                                std::to_string(std::uint64_t{n} + 1));
  }
}

enum class DivisorFilter { all, even, odd };

// sum over d' | d (filtered) of mu(d') * 2^(d/d')
Count mobius_sum(std::uint64_t d, DivisorFilter filter) {
  auto& nt = number_theory();
  Count sum = 0;
  for (auto dp : nt.divisors(d)) {
    if (filter == DivisorFilter::even && dp % 2 != 0) continue;
    if (filter == DivisorFilter::odd && dp % 2 == 0) continue;
    const int mu = nt.mobius(dp);
    if (mu == 0) continue;
    const Count term = pow2(d / dp);
    if (mu > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

Count psr_count(unsigned n, std::uint64_t d) {
  require_divisor(n, d);
  const std::uint64_t quotient = (std::uint64_t{n} + 1) / d;
  if (n % 2 == 0 || quotient % 2 == 1) {
    const Count num = mobius_sum(d, DivisorFilter::all) + mobius_sum(d, DivisorFilter::even);
    return exact_div(num, Count(2 * d), "psr_count");
  }
  return exact_div(mobius_sum(d, DivisorFilter::all), Count(d), "psr_count");
}

Count csr_count(unsigned n, std::uint64_t d) {
  require_divisor(n, d);
  const std::uint64_t quotient = (std::uint64_t{n} + 1) / d;
  if (n % 2 == 0) return exact_div(mobius_sum(d, DivisorFilter::all), Count(2 * d), "csr_count");
  if (quotient % 2 == 0) return 0;
  return exact_div(mobius_sum(d, DivisorFilter::odd), Count(2 * d), "csr_count");
}

CycleTotals golomb_totals(unsigned n) {
  if (n < 2) throw std::invalid_argument("register order must be at least 2");
  auto& nt = number_theory();
  const std::uint64_t m = std::uint64_t{n} + 1;
  Count all = 0;
  Count even = 0;
  Count odd = 0;
  for (auto d : nt.divisors(m)) {
    const Count term = Count(nt.totient(d)) * pow2(m / d);
    all += term;
    if (d % 2 == 0) {
      even += term;
    } else {
      odd += term;
    }
  }
  const Count den = 2 * m;
  return {exact_div(all + even, den, "golomb_totals"), exact_div(odd, den, "golomb_totals")};
}

Count CensusTable::cycle_total() const {
  Count total = 0;
  for (const auto& [d, c] : entries) total += c;
  return total;
}

Count CensusTable::state_total() const {
  Count total = 0;
  for (const auto& [d, c] : entries) total += c * d;
  return total;
}

CensusTable census(RegisterKind kind, unsigned n, CensusSource source,
                   const EnumerationLimits& limits) {
  if (kind == RegisterKind::general) {
    throw std::invalid_argument("census tables exist only for PSR and CSR");
  }
  CensusTable table{kind, n, source, {}};
  if (source == CensusSource::formula) {
    for (auto d : number_theory().divisors(std::uint64_t{n} + 1)) {
      Count c = kind == RegisterKind::psr ? psr_count(n, d) : csr_count(n, d);
      if (c != 0) table.entries.emplace(d, std::move(c));
    }
    return table;
  }
  const auto f = kind == RegisterKind::psr ? FeedbackSpec::psr(n) : FeedbackSpec::csr(n);
  for (const auto& c : decompose(f, limits)) table.entries[c.length()] += 1;
  return table;
}

std::map<unsigned, std::uint64_t> weight_census(unsigned n, const EnumerationLimits& limits) {
  const auto f = FeedbackSpec::csr(n);
  std::map<unsigned, std::uint64_t> out;
  for (const auto& c : decompose(f, limits)) {
    const auto v = c.state_at(0).value();
    const auto weight = static_cast<unsigned>(std::popcount(v)) + static_cast<unsigned>(f.f(v));
    ++out[weight];
  }
  return out;
}

}  // namespace fsr
