#include "fsr/cycles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace fsr {

namespace {

constexpr std::uint32_t kUnlabeled = 0xFFFFFFFFu;

std::string rotate_from(const std::string& digits, std::size_t start) {
  std::string out;
  out.reserve(digits.size());
  out.append(digits, start, std::string::npos);
  out.append(digits, 0, start);
  return out;
}

// Walks the cycle through `start`, returning its first digits in order.
template <typename Visit>
std::string walk_digits(const FeedbackSpec& f, std::uint64_t start, Visit&& visit) {
  const unsigned n = f.order();
  std::string digits;
  std::uint64_t v = start;
  do {
    visit(v);
    digits.push_back(static_cast<char>('0' + ((v >> (n - 1)) & 1u)));
    v = f.next(v);
  } while (v != start);
  return digits;
}

}  // namespace

std::size_t least_rotation(const std::string& s) {
  const std::size_t n = s.size();
  std::size_t i = 0;
  std::size_t j = 1;
  std::size_t k = 0;
  while (i < n && j < n && k < n) {
    const char a = s[(i + k) % n];
    const char b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return n == 0 ? 0 : std::min(i, j);
}

CycleRep::CycleRep(unsigned order, std::string digits) : order_(order) {
  if (order < 2 || order > kMaxOrder) throw std::invalid_argument("cycle order out of range");
  if (digits.empty()) throw std::invalid_argument("a cycle has at least one state");
  for (char c : digits) {
    if (c != '0' && c != '1') throw std::invalid_argument("cycle digits must be '0' or '1'");
  }
  digits_ = rotate_from(digits, least_rotation(digits));
}

State CycleRep::state_at(std::size_t position) const {
  const std::size_t l = digits_.size();
  std::uint64_t v = 0;
  for (unsigned i = 0; i < order_; ++i) {
    v = (v << 1) | static_cast<std::uint64_t>(digits_[(position + i) % l] - '0');
  }
  return State(order_, v);
}

std::optional<std::size_t> CycleRep::position_of(const State& s) const {
  if (s.order() != order_) return std::nullopt;
  const std::size_t l = digits_.size();
  const std::uint64_t mask = order_mask(order_);
  std::uint64_t w = state_at(0).value();
  for (std::size_t p = 0; p < l; ++p) {
    if (w == s.value()) return p;
    w = ((w << 1) & mask) | static_cast<std::uint64_t>(digits_[(p + order_) % l] - '0');
  }
  return std::nullopt;
}

std::vector<State> CycleRep::states() const {
  std::vector<State> out;
  out.reserve(digits_.size());
  for (std::size_t p = 0; p < digits_.size(); ++p) out.push_back(state_at(p));
  return out;
}

std::vector<State> CycleRep::states_from(const State& start) const {
  const auto pos = position_of(start);
  if (!pos) throw std::invalid_argument("state " + start.to_string() + " is not on the cycle");
  std::vector<State> out;
  out.reserve(digits_.size());
  for (std::size_t p = 0; p < digits_.size(); ++p) out.push_back(state_at(*pos + p));
  return out;
}

bool CycleRep::is_cycle_of(const FeedbackSpec& f) const {
  if (f.order() != order_) return false;
  const auto all = states();
  for (std::size_t p = 0; p < all.size(); ++p) {
    if (f.next(all[p].value()) != all[(p + 1) % all.size()].value()) return false;
  }
  std::vector<std::uint64_t> values;
  values.reserve(all.size());
  for (const auto& s : all) values.push_back(s.value());
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

CycleLabeling label_cycles(const FeedbackSpec& f, const EnumerationLimits& limits) {
  require_enumerable(f.order(), limits, "cycle decomposition");
  const std::uint64_t total = state_count(f.order());

  std::vector<std::uint32_t> label(total, kUnlabeled);
  std::vector<std::string> found;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (label[start] != kUnlabeled) continue;
    const auto id = static_cast<std::uint32_t>(found.size());
    found.push_back(walk_digits(f, start, [&](std::uint64_t v) { label[v] = id; }));
  }

  std::vector<CycleRep> cycles;
  cycles.reserve(found.size());
  for (auto& d : found) cycles.emplace_back(f.order(), std::move(d));

  std::vector<std::uint32_t> order(cycles.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& x = cycles[a];
    const auto& y = cycles[b];
    if (x.length() != y.length()) return x.length() < y.length();
    return x.digits() < y.digits();
  });
  std::vector<std::uint32_t> remap(cycles.size());
  CycleLabeling out;
  out.cycles.reserve(cycles.size());
  for (std::uint32_t rank = 0; rank < order.size(); ++rank) {
    remap[order[rank]] = rank;
    out.cycles.push_back(std::move(cycles[order[rank]]));
  }
  for (auto& id : label) id = remap[id];
  out.cycle_of_state = std::move(label);
  return out;
}

std::vector<CycleRep> decompose(const FeedbackSpec& f, const EnumerationLimits& limits) {
  return label_cycles(f, limits).cycles;
}

CycleRep cycle_of(const FeedbackSpec& f, const State& s) {
  if (s.order() != f.order()) throw std::invalid_argument("state order does not match register");
  return CycleRep(f.order(), walk_digits(f, s.value(), [](std::uint64_t) {}));
}

std::size_t AdjacencyGraph::component_count() const {
  std::vector<std::uint32_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices.size();
  for (const auto& e : edges) {
    const auto ra = find(e.a);
    const auto rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

AdjacencyGraph adjacency_graph(const FeedbackSpec& f, const EnumerationLimits& limits) {
  auto labeling = label_cycles(f, limits);
  const unsigned n = f.order();
  const std::uint64_t high = std::uint64_t{1} << (n - 1);
  const std::uint64_t suffix_mask = order_mask(n - 1);

  AdjacencyGraph graph;
  for (std::uint64_t v = 0; v < high; ++v) {
    const auto a = labeling.cycle_of_state[v];
    const auto b = labeling.cycle_of_state[v | high];
    if (a == b) continue;
    graph.edges.push_back({std::min(a, b), std::max(a, b),
                           static_cast<unsigned>(std::popcount(v & suffix_mask))});
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
  graph.vertices = std::move(labeling.cycles);
  return graph;
}

CycleRep join_cycles(const FeedbackSpec& f, const CycleRep& first, const CycleRep& second,
                     const State& s, PairKind kind) {
  const unsigned n = f.order();
  if (first.order() != n || second.order() != n || s.order() != n) {
    throw std::invalid_argument("join_cycles: cycles and state must match the register order");
  }
  const State partner = kind == PairKind::companion ? companion(s) : conjugate(s);
  const auto p1 = first.position_of(s);
  const auto p2 = second.position_of(partner);
  if (!p1 || !p2 || first.contains(partner)) {
    throw std::invalid_argument("join_cycles: pair (" + s.to_string() + ", " +
                                partner.to_string() + ") is not shared between the two cycles");
  }
  // A conjugate pair exchanges its own successors, which are a companion pair.
  const std::size_t shift = kind == PairKind::companion ? 0 : 1;
  std::string digits = rotate_from(first.digits(), (*p1 + shift) % first.length());
  digits += rotate_from(second.digits(), (*p2 + shift) % second.length());
  return CycleRep(n, std::move(digits));
}

}  // namespace fsr
