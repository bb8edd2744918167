#pragma once

// Reference implementations for tests. Everything here works on ASCII bit
// strings or plain vectors and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Bits = std::string;  // '0'/'1', a_1 first

inline int popcount(const Bits& s) { return static_cast<int>(std::count(s.begin(), s.end(), '1')); }

inline Bits to_bits(std::uint64_t value, unsigned n) {
  Bits s(n, '0');
  for (unsigned i = 0; i < n; ++i) {
    if ((value >> (n - 1 - i)) & 1u) s[i] = '1';
  }
  return s;
}

inline std::uint64_t from_bits(const Bits& s) {
  std::uint64_t v = 0;
  for (char c : s) v = v * 2 + static_cast<std::uint64_t>(c - '0');
  return v;
}

/// Feedback as a function of the whole state string.
using Feedback = std::function<int(const Bits&)>;

inline Feedback psr() {
  return [](const Bits& s) { return popcount(s) % 2; };
}
inline Feedback csr() {
  return [](const Bits& s) { return 1 - popcount(s) % 2; };
}
/// x_1 xor g(x_2..x_n), with g given as a table indexed by x_2 as the high bit.
inline Feedback from_g(std::vector<int> g) {
  return [g = std::move(g)](const Bits& s) {
    return (s[0] - '0') ^ g[from_bits(s.substr(1))];
  };
}

inline Bits step(const Feedback& f, const Bits& s) {
  return s.substr(1) + static_cast<char>('0' + f(s));
}

/// Every cycle as the list of its states, discovered by walking from each
/// unvisited state in numeric order.
inline std::vector<std::vector<Bits>> cycles(const Feedback& f, unsigned n) {
  std::set<Bits> seen;
  std::vector<std::vector<Bits>> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    Bits s = to_bits(v, n);
    if (seen.count(s)) continue;
    std::vector<Bits> cyc;
    Bits cur = s;
    do {
      seen.insert(cur);
      cyc.push_back(cur);
      cur = step(f, cur);
    } while (cur != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

inline std::multiset<std::size_t> cycle_lengths(const Feedback& f, unsigned n) {
  std::multiset<std::size_t> out;
  for (const auto& c : cycles(f, n)) out.insert(c.size());
  return out;
}

inline std::map<std::uint64_t, std::uint64_t> length_census(const Feedback& f, unsigned n) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& c : cycles(f, n)) ++out[c.size()];
  return out;
}

/// Minimum over all rotations, by brute force.
inline Bits min_rotation(const Bits& s) {
  Bits best = s;
  for (std::size_t r = 1; r < s.size(); ++r) best = std::min(best, s.substr(r) + s.substr(0, r));
  return best;
}

/// Every cyclic n-window distinct and the length exactly 2^n.
inline bool is_debruijn(const Bits& seq, unsigned n) {
  if (seq.size() != (std::size_t{1} << n)) return false;
  const Bits doubled = seq + seq;
  std::set<Bits> windows;
  for (std::size_t i = 0; i < seq.size(); ++i) windows.insert(doubled.substr(i, n));
  return windows.size() == seq.size();
}

/// True when t is a cyclic rotation of s; sets offset so that t = s rotated left by offset.
inline bool rotation_of(const Bits& s, const Bits& t, std::size_t& offset) {
  if (s.size() != t.size()) return false;
  for (std::size_t r = 0; r < s.size(); ++r) {
    if (s.substr(r) + s.substr(0, r) == t) {
      offset = r;
      return true;
    }
  }
  return false;
}

inline bool single_cyclic_block(const Bits& w) {
  const int ones = popcount(w);
  if (ones == 0) return false;
  const Bits doubled = w + w;
  return doubled.find(Bits(ones, '1')) != Bits::npos;
}

inline std::size_t longest_cyclic_run(const Bits& w) {
  if (popcount(w) == static_cast<int>(w.size())) return w.size();
  const Bits doubled = w + w;
  std::size_t best = 0, run = 0;
  for (char c : doubled) {
    run = c == '1' ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

/// Preferred state of the CSR cycle containing `cycle`, read off the
/// pattern 0^r 1^t 0 ... 1 0 directly on strings.
inline Bits preferred_state(const std::vector<Bits>& cycle) {
  const std::size_t n = cycle.front().size();
  auto ext = [](const Bits& s) { return s + static_cast<char>('0' + (1 - popcount(s) % 2)); };
  const Bits e0 = ext(cycle.front());
  if (single_cyclic_block(e0)) {
    const std::size_t w = std::min<std::size_t>(popcount(e0), n);
    return Bits(w, '1') + Bits(n - w, '0');
  }
  const std::size_t t = longest_cyclic_run(e0);
  Bits best;
  for (const auto& s : cycle) {
    const Bits e = ext(s);
    if (e.substr(e.size() - 2) != "10") continue;
    const std::size_t r = e.find('1');
    if (e.compare(r, t, Bits(t, '1')) != 0 || r + t >= e.size() || e[r + t] != '0') continue;
    if (r + t + 3 > e.size()) continue;
    if (e > best) best = e;
  }
  return best.substr(0, n);
}

/// The elementary symmetric polynomial X_{i,m}(x) by summing every monomial.
inline int elementary_symmetric(const std::vector<int>& x, unsigned i) {
  const unsigned m = static_cast<unsigned>(x.size());
  int acc = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != i) continue;
    int term = 1;
    for (unsigned j = 0; j < m; ++j) {
      if ((mask >> j) & 1u) term &= x[j];
    }
    acc ^= term;
  }
  return acc;
}

/// lambda(i) = xor over k with (k & i) == k of v(k), as a double loop.
inline std::vector<int> anf_direct(const std::vector<int>& v) {
  std::vector<int> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      if ((k & i) == k) out[i] ^= v[k];
    }
  }
  return out;
}

inline int mobius(std::uint64_t m) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

inline std::uint64_t totient(std::uint64_t m) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
  return count;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Random g table over m variables.
inline std::vector<int> random_g(std::mt19937_64& rng, unsigned m) {
  std::vector<int> g(std::size_t{1} << m);
  for (auto& x : g) x = static_cast<int>(rng() & 1u);
  return g;
}

}  // namespace oracle
