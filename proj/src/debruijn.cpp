#include "fsr/debruijn.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace fsr {

namespace {

std::uint64_t low_mask(unsigned width) {
  return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

void require_csr(const FeedbackSpec& f, const char* what) {
  if (f.kind() != RegisterKind::csr) {
    throw std::invalid_argument(std::string(what) + " is defined only for CSR registers, got " +
                                std::string(to_string(f.kind())));
  }
}

std::uint64_t extended_bits(const FeedbackSpec& f, std::uint64_t v) {
  return (v << 1) | static_cast<std::uint64_t>(f.f(v));
}

// State at the start of the run-cycle of extended weight 2k+1.
State run_state(unsigned n, unsigned k) {
  const unsigned ones = std::min(2 * k + 1, n);
  return State(n, low_mask(ones) << (n - ones));
}

MainCycle build_from_labeling(const FeedbackSpec& f, const CycleLabeling& labeling, unsigned k) {
  const unsigned n = f.order();
  const unsigned target = 2 * k + 1;
  const State start = run_state(n, k);
  const auto main_id = labeling.cycle_of_state[start.value()];
  MainCycle result{labeling.cycles[main_id], {}};

  struct Candidate {
    std::uint32_t id;
    PreferredState preferred;
  };
  std::vector<Candidate> rest;
  for (std::uint32_t id = 0; id < labeling.cycles.size(); ++id) {
    if (id == main_id) continue;
    const auto& c = labeling.cycles[id];
    if (extended_rep(f, c.state_at(0)).weight() != target) continue;
    rest.push_back({id, preferred_state(f, c)});
  }
  std::sort(rest.begin(), rest.end(), [](const Candidate& a, const Candidate& b) {
    if (a.preferred.run_length != b.preferred.run_length) {
      return a.preferred.run_length > b.preferred.run_length;
    }
    return a.preferred.state.value() > b.preferred.state.value();
  });

  for (const auto& cand : rest) {
    const State p = cand.preferred.state;
    const State partner = companion(p);
    if (!result.cycle.contains(partner)) {
      throw std::logic_error("main cycle MC_" + std::to_string(k) + " does not contain P(C)' = " +
                             partner.to_string());
    }
    result.cycle = join_cycles(f, labeling.cycles[cand.id], result.cycle, p);
    result.joins.emplace_back(p, partner);
  }
  return result;
}

std::vector<CycleRep> main_cycles_from(const FeedbackSpec& f, const CycleLabeling& labeling,
                                       std::vector<MainCycle>* logs) {
  std::vector<CycleRep> out;
  for (unsigned k = 0; k <= f.order() / 2; ++k) {
    auto mc = build_from_labeling(f, labeling, k);
    out.push_back(mc.cycle);
    if (logs) logs->push_back(std::move(mc));
  }
  return out;
}

struct RawStep {
  std::uint64_t window;
  int parity;
  unsigned weight;
  int bit;
  bool interchange;
};

// bridges[k-1] holds the value of U_{2k+1}.
RawStep raw_step(unsigned n, std::uint64_t window, int parity, unsigned weight,
                 const std::vector<std::uint64_t>& bridges) {
  const int a = static_cast<int>((window >> (n - 1)) & 1u);
  const std::uint64_t candidate = ((window & low_mask(n - 1)) << 1) | 1u;
  bool interchange = false;
  if ((parity ^ a) == 1) {
    // Possible predecessor of U_{w-a+2} or its companion.
    const unsigned index = weight - static_cast<unsigned>(a) + 2;
    if (index % 2 == 1) {
      const unsigned k = (index - 1) / 2;
      interchange = k >= 1 && k <= bridges.size() && bridges[k - 1] == candidate;
    }
  } else {
    const unsigned width = n + 1;
    const std::uint64_t star = candidate << 1;
    if (!word::is_cyclic_run(star, width)) {
      const unsigned t = word::longest_cyclic_run(star, width);
      if (word::has_preferred_form(star, width, t)) {
        interchange = word::preferred_rotation(star, width) == star;
      }
    }
  }
  const int bit = interchange ? parity : parity ^ 1;
  return {((window << 1) & low_mask(n)) | static_cast<std::uint64_t>(bit), interchange ? a : a ^ 1,
          weight - static_cast<unsigned>(a) + static_cast<unsigned>(bit), bit, interchange};
}

std::vector<std::uint64_t> bridge_values(const UTable& u) {
  std::vector<std::uint64_t> out;
  for (const auto& s : u.bridges()) out.push_back(s.value());
  return out;
}

void require_valid(unsigned n, const UTable& u) {
  const auto report = validate_utable(n, u);
  if (!report.ok()) {
    std::string msg = "invalid bridge table:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
}

}  // namespace

ExtRep::ExtRep(unsigned length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length < 3 || length > kMaxOrder + 1) {
    throw std::invalid_argument("extended representation length out of range");
  }
  if (bits > low_mask(length)) throw std::invalid_argument("extended representation too wide");
}

ExtRep ExtRep::from_bits(std::string_view text) {
  std::uint64_t v = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("extended representation must be bits");
    v = (v << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return ExtRep(static_cast<unsigned>(text.size()), v);
}

unsigned ExtRep::weight() const { return static_cast<unsigned>(std::popcount(bits_)); }

std::string ExtRep::to_string() const {
  std::string out(length_, '0');
  for (unsigned i = 0; i < length_; ++i) {
    if ((bits_ >> (length_ - 1 - i)) & 1u) out[i] = '1';
  }
  return out;
}

ExtRep extended_rep(const FeedbackSpec& f, const State& s) {
  return ExtRep(f.order() + 1, (s.value() << 1) | static_cast<std::uint64_t>(eval(f, s)));
}

namespace word {

std::uint64_t rotate_left(std::uint64_t w, unsigned r, unsigned width) {
  r %= width;
  if (r == 0) return w;
  return ((w << r) | (w >> (width - r))) & low_mask(width);
}

bool is_cyclic_run(std::uint64_t w, unsigned width) {
  if (w == 0) return false;
  // A run ends wherever a one is followed (cyclically) by a zero.
  const std::uint64_t follower = rotate_left(w, 1, width);
  return std::popcount(w & ~follower & low_mask(width)) <= 1;
}

unsigned longest_cyclic_run(std::uint64_t w, unsigned width) {
  if (w == low_mask(width)) return width;
  unsigned t = 0;
  while (w != 0) {
    w &= rotate_left(w, 1, width);
    ++t;
  }
  return t;
}

bool has_preferred_form(std::uint64_t w, unsigned width, unsigned t) {
  if ((w & 3u) != 2u || t == 0) return false;
  const auto zeros = static_cast<unsigned>(width - std::bit_width(w));
  const std::uint64_t aligned = w << (64 - width + zeros);
  const auto ones = static_cast<unsigned>(std::countl_one(aligned));
  // The 1^t block must be followed by a zero and be distinct from the final "10".
  return ones == t && zeros + t + 3 <= width;
}

std::optional<std::uint64_t> preferred_rotation(std::uint64_t w, unsigned width) {
  if (is_cyclic_run(w, width)) return std::nullopt;
  const unsigned t = longest_cyclic_run(w, width);
  std::optional<std::uint64_t> best;
  for (unsigned r = 0; r < width; ++r) {
    const auto candidate = rotate_left(w, r, width);
    if (has_preferred_form(candidate, width, t) && (!best || candidate > *best)) best = candidate;
  }
  return best;
}

}  // namespace word

bool is_run_cycle(const ExtRep& e) { return word::is_cyclic_run(e.bits(), e.length()); }

unsigned longest_cyclic_run(const ExtRep& e) {
  return word::longest_cyclic_run(e.bits(), e.length());
}

PreferredState preferred_state(const FeedbackSpec& f, const CycleRep& c) {
  require_csr(f, "preferred_state");
  if (c.order() != f.order()) throw std::invalid_argument("cycle order does not match register");
  const unsigned n = f.order();
  const unsigned width = n + 1;
  const ExtRep first = extended_rep(f, c.state_at(0));
  const unsigned t = longest_cyclic_run(first);
  if (is_run_cycle(first)) {
    return {run_state(n, (first.weight() - 1) / 2), 0, t, true};
  }
  std::optional<std::uint64_t> best;
  for (const auto& s : c.states()) {
    const auto e = extended_bits(f, s.value());
    if (word::has_preferred_form(e, width, t) && (!best || e > *best)) best = e;
  }
  if (!best) throw std::logic_error("non-run cycle without a preferred extended representation");
  const auto zeros = static_cast<unsigned>(width - std::bit_width(*best));
  return {State(n, *best >> 1), zeros, t, false};
}

MainCycle build_main_cycle(const FeedbackSpec& f, unsigned k, const EnumerationLimits& limits) {
  require_csr(f, "build_main_cycle");
  if (k > f.order() / 2) {
    throw std::out_of_range("main cycle index k = " + std::to_string(k) + " outside [0, " +
                            std::to_string(f.order() / 2) + "]");
  }
  return build_from_labeling(f, label_cycles(f, limits), k);
}

UTable::UTable(unsigned order, std::vector<State> bridges)
    : order_(order), bridges_(std::move(bridges)) {
  if (order < 2 || order > kMaxOrder) throw std::invalid_argument("bridge table order out of range");
}

const State& UTable::bridge(unsigned k) const {
  if (k < 1 || k > bridges_.size()) {
    throw std::out_of_range("no bridge U_" + std::to_string(2 * k + 1) + " in table");
  }
  return bridges_[k - 1];
}

void UTable::set_bridge(unsigned k, State s) {
  if (k < 1 || k > bridges_.size()) {
    throw std::out_of_range("no bridge U_" + std::to_string(2 * k + 1) + " in table");
  }
  bridges_[k - 1] = s;
}

UTable default_utable(unsigned n) {
  if (n < 2 || n > kMaxOrder) throw std::invalid_argument("register order out of range");
  std::vector<State> bridges;
  for (unsigned k = 1; k <= n / 2; ++k) {
    const std::uint64_t ones = low_mask(2 * k - 1) << (n - 2 * k + 1);
    bridges.emplace_back(n, ones | 1u);
  }
  return UTable(n, std::move(bridges));
}

UTableReport validate_utable(unsigned n, const UTable& u) {
  UTableReport report;
  if (u.order() != n) {
    report.violations.push_back("table order " + std::to_string(u.order()) +
                                " does not match n = " + std::to_string(n));
  }
  if (u.bridges().size() != n / 2) {
    report.violations.push_back("expected " + std::to_string(n / 2) + " bridges, got " +
                                std::to_string(u.bridges().size()));
  }
  for (unsigned k = 1; k <= n / 2; ++k) {
    report.choices.push_back(binomial(n - 1, 2 * k - 1));
    if (k > u.bridges().size()) continue;
    const State& s = u.bridge(k);
    const std::string name = "U_" + std::to_string(2 * k + 1) + " = " + s.to_string();
    if (s.order() != n) {
      report.violations.push_back(name + ": length " + std::to_string(s.order()) + ", expected " +
                                  std::to_string(n));
      continue;
    }
    if (s.last() != 1) report.violations.push_back(name + ": last bit must be 1");
    if (s.weight() != 2 * k) {
      report.violations.push_back(name + ": weight " + std::to_string(s.weight()) + ", expected " +
                                  std::to_string(2 * k));
    }
  }
  return report;
}

Count count_utables(unsigned n) {
  if (n < 2) throw std::invalid_argument("register order must be at least 2");
  Count total = 1;
  for (unsigned k = 1; k <= n / 2; ++k) total *= binomial(n - 1, 2 * k - 1);
  return total;
}

CycleRep join_main_cycles(unsigned n, const UTable& u, const EnumerationLimits& limits) {
  require_valid(n, u);
  const auto f = FeedbackSpec::csr(n);
  const auto mains = main_cycles_from(f, label_cycles(f, limits), nullptr);
  CycleRep full = mains.back();
  for (unsigned k = n / 2; k >= 1; --k) {
    full = join_cycles(f, full, mains[k - 1], u.bridge(k));
  }
  return full;
}

GeneratorState GeneratorState::start(const State& s0) {
  return {s0, s0.parity(), s0.weight(), 0};
}

bool GeneratorState::consistent() const {
  return parity == window.parity() && weight == window.weight();
}

StepResult generator_step(const GeneratorState& gs, const UTable& u) {
  if (!gs.consistent()) {
    throw std::logic_error("generator state out of sync: parity/weight disagree with window " +
                           gs.window.to_string());
  }
  if (u.order() != gs.window.order()) throw std::invalid_argument("bridge table order mismatch");
  const unsigned n = gs.window.order();
  const auto r = raw_step(n, gs.window.value(), gs.parity, gs.weight, bridge_values(u));
  return {r.bit, r.interchange ? StepBranch::interchange : StepBranch::stable,
          GeneratorState{State(n, r.window), r.parity, r.weight, gs.step + 1}};
}

State default_seed(unsigned n) { return State(n, low_mask(n - 1)); }

std::string generate(unsigned n, const UTable& u, const State& s0) {
  if (n < 2 || n > kMaxGeneratorOrder) {
    throw std::invalid_argument("generator order must lie in [2, " +
                                std::to_string(kMaxGeneratorOrder) + "]");
  }
  if (s0.order() != n) throw std::invalid_argument("seed state order does not match n");
  require_valid(n, u);

  const auto bridges = bridge_values(u);
  const std::uint64_t period = state_count(n);
  std::string out;
  out.reserve(period);
  std::uint64_t window = s0.value();
  int parity = s0.parity();
  unsigned weight = s0.weight();
  std::uint64_t steps = 0;
  do {
    const auto r = raw_step(n, window, parity, weight, bridges);
    window = r.window;
    parity = r.parity;
    weight = r.weight;
    assert(parity == (std::popcount(window) & 1) && weight == unsigned(std::popcount(window)));
    out.push_back(static_cast<char>('0' + r.bit));
    if (++steps > period) {
      throw GenerationError("generator did not return to the seed within 2^n steps", steps);
    }
  } while (window != s0.value());
  if (steps != period) {
    throw GenerationError("generator closed after " + std::to_string(steps) +
                              " steps, expected " + std::to_string(period),
                          steps);
  }
  return out;
}

DeBruijnCheck check_debruijn(std::string_view seq, unsigned n) {
  if (n < 1 || n > kMaxGeneratorOrder) throw std::invalid_argument("order out of range");
  for (char c : seq) {
    if (c != '0' && c != '1') throw std::invalid_argument("sequence must contain only '0'/'1'");
  }
  DeBruijnCheck result{false, seq.size(), static_cast<std::size_t>(state_count(n)), std::nullopt};
  if (seq.empty()) return result;
  std::vector<bool> seen(state_count(n));
  const std::size_t len = seq.size();
  std::uint64_t w = 0;
  for (unsigned i = 0; i < n; ++i) w = (w << 1) | static_cast<std::uint64_t>(seq[i % len] - '0');
  for (std::size_t i = 0; i < len; ++i) {
    if (seen[w]) {
      std::string window(n, '0');
      for (unsigned b = 0; b < n; ++b) {
        if ((w >> (n - 1 - b)) & 1u) window[b] = '1';
      }
      result.repeated_window = std::move(window);
      return result;
    }
    seen[w] = true;
    w = ((w << 1) & low_mask(n)) | static_cast<std::uint64_t>(seq[(i + n) % len] - '0');
  }
  result.ok = len == result.expected_length;
  return result;
}

bool verify_debruijn(std::string_view seq, unsigned n) { return check_debruijn(seq, n).ok; }

}  // namespace fsr
