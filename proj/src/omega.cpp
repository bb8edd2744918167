#include "fsr/omega.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <stdexcept>
#include <thread>

namespace fsr {

namespace {

// Start state and length of the first cycle (by smallest unvisited start)
// whose length does not divide n+1.
std::optional<std::pair<std::uint64_t, std::uint64_t>> first_offending_cycle(
    const FeedbackSpec& f) {
  const std::uint64_t total = state_count(f.order());
  const std::uint64_t period = std::uint64_t{f.order()} + 1;
  std::vector<std::uint8_t> visited(total, 0);
  for (std::uint64_t start = 0; start < total; ++start) {
    if (visited[start]) continue;
    std::uint64_t length = 0;
    std::uint64_t v = start;
    do {
      visited[v] = 1;
      v = f.next(v);
      ++length;
    } while (v != start);
    if (period % length != 0) return std::pair{start, length};
  }
  return std::nullopt;
}

struct Shard {
  std::vector<CandidateVerdict> verdicts;
  std::vector<FeedbackSpec> members;
};

Shard run_shard(unsigned n, OmegaScope scope, std::uint64_t begin, std::uint64_t end) {
  Shard out;
  out.verdicts.reserve(end - begin);
  for (std::uint64_t id = begin; id < end; ++id) {
    auto f = FeedbackSpec::from_table(omega_candidate(n, scope, id));
    const auto bad = first_offending_cycle(f);
    out.verdicts.push_back({id, !bad, bad ? bad->second : 0});
    if (!bad) out.members.push_back(std::move(f));
  }
  return out;
}

}  // namespace

OmegaVerdict in_omega(const FeedbackSpec& f, const EnumerationLimits& limits) {
  require_enumerable(f.order(), limits, "omega membership");
  const auto bad = first_offending_cycle(f);
  if (!bad) return {true, std::nullopt};
  return {false, cycle_of(f, State(f.order(), bad->first))};
}

bool extended_weight_constant(const FeedbackSpec& f, const CycleRep& c) {
  if (c.order() != f.order()) throw std::invalid_argument("cycle order does not match register");
  std::optional<unsigned> weight;
  for (const auto& s : c.states()) {
    const auto w = s.weight() + static_cast<unsigned>(eval(f, s));
    if (weight && *weight != w) return false;
    weight = w;
  }
  return true;
}

std::uint64_t omega_candidate_count(unsigned n, OmegaScope scope) {
  if (n < 2) throw std::invalid_argument("register order must be at least 2");
  if (scope == OmegaScope::exhaustive) {
    if (n > kMaxExhaustiveOrder) {
      throw LimitError("exhaustive omega search supports n <= " +
                       std::to_string(kMaxExhaustiveOrder) + " (2^(2^(n-1)) candidates); use " +
                       "the symmetric scope for larger n");
    }
    return std::uint64_t{1} << (std::uint64_t{1} << (n - 1));
  }
  return std::uint64_t{1} << n;
}

TruthTable omega_candidate(unsigned n, OmegaScope scope, std::uint64_t id) {
  if (id >= omega_candidate_count(n, scope)) throw std::out_of_range("omega candidate id");
  const unsigned vars = n - 1;
  if (scope == OmegaScope::exhaustive) return TruthTable::from_packed(vars, id);
  std::vector<std::uint8_t> bits(std::size_t{1} << vars);
  for (std::size_t j = 0; j < bits.size(); ++j) bits[j] = (id >> std::popcount(j)) & 1u;
  return TruthTable(vars, std::move(bits));
}

OmegaReport enumerate_omega(unsigned n, OmegaScope scope, const EnumerationLimits& limits) {
  const std::uint64_t count = omega_candidate_count(n, scope);
  require_enumerable(n, limits, "omega search");

  const std::uint64_t shards =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, count);
  std::vector<std::future<Shard>> pending;
  for (std::uint64_t s = 0; s < shards; ++s) {
    const std::uint64_t begin = count * s / shards;
    const std::uint64_t end = count * (s + 1) / shards;
    pending.push_back(std::async(std::launch::async, run_shard, n, scope, begin, end));
  }
  OmegaReport report{n, scope, {}, {}};
  report.verdicts.reserve(count);
  for (auto& p : pending) {
    auto shard = p.get();
    report.verdicts.insert(report.verdicts.end(), shard.verdicts.begin(), shard.verdicts.end());
    for (auto& m : shard.members) report.members.push_back(std::move(m));
  }
  return report;
}

}  // namespace fsr
