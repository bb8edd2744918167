#include "fsr/cycles.hpp"

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using fsr::CycleRep;
using fsr::FeedbackSpec;
using fsr::State;

namespace {

std::multiset<std::size_t> lengths_of(const std::vector<CycleRep>& cycles) {
  std::multiset<std::size_t> out;
  for (const auto& c : cycles) out.insert(c.length());
  return out;
}

// Number of states whose successor on `c` differs from the register's.
std::size_t rewired_states(const FeedbackSpec& f, const CycleRep& c) {
  const auto states = c.states();
  std::size_t count = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    count += f.next(states[i].value()) != states[(i + 1) % states.size()].value();
  }
  return count;
}

std::set<std::uint64_t> values_of(const CycleRep& c) {
  std::set<std::uint64_t> out;
  for (const auto& s : c.states()) out.insert(s.value());
  return out;
}

}  // namespace

TEST(CycleRep, CanonicalizesToLeastRotation) {
  const CycleRep c(3, "1000");
  EXPECT_EQ(c.digits(), "0001");
  EXPECT_EQ(c.length(), 4u);
  EXPECT_EQ(CycleRep(3, "0100"), c);
  EXPECT_EQ(fsr::least_rotation("1101"), 2u);
}

TEST(CycleRep, LeastRotationMatchesBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t len = 1 + rng() % 24;
    std::string s(len, '0');
    for (auto& ch : s) ch = (rng() & 1u) ? '1' : '0';
    const auto r = fsr::least_rotation(s);
    ASSERT_EQ(s.substr(r) + s.substr(0, r), oracle::min_rotation(s)) << s;
  }
}

TEST(CycleRep, WindowsAndPositions) {
  // CSR_3: 000 -> 001 -> 010 -> 100 -> 000.
  const auto f = FeedbackSpec::csr(3);
  const auto c = fsr::cycle_of(f, State::from_bits("000"));
  EXPECT_TRUE(c.is_cycle_of(f));
  EXPECT_EQ(c.state_at(0), State::from_bits(c.digits().substr(0, 3)));
  for (std::size_t p = 0; p < c.length(); ++p) {
    EXPECT_EQ(c.position_of(c.state_at(p)), p);
  }
  const auto from = c.states_from(State::from_bits("000"));
  ASSERT_EQ(from.size(), 4u);
  EXPECT_EQ(from[0], State::from_bits("000"));
  EXPECT_EQ(from[1], State::from_bits("001"));
  EXPECT_THROW(c.states_from(State::from_bits("111")), std::invalid_argument);
}

TEST(CycleRep, ShortCycleKeepsTrueLength) {
  // PSR_3 has the 2-cycle 010 <-> 101: the period is 2 although n = 3.
  const auto c = fsr::cycle_of(FeedbackSpec::psr(3), State::from_bits("010"));
  EXPECT_EQ(c.length(), 2u);
  EXPECT_EQ(c.digits(), "01");
  EXPECT_TRUE(c.contains(State::from_bits("101")));
  EXPECT_FALSE(c.contains(State::from_bits("011")));
}

TEST(CycleRep, RejectsMalformed) {
  EXPECT_THROW(CycleRep(3, ""), std::invalid_argument);
  EXPECT_THROW(CycleRep(3, "012"), std::invalid_argument);
  EXPECT_THROW(CycleRep(1, "0"), std::invalid_argument);
  EXPECT_FALSE(CycleRep(3, "0011").is_cycle_of(FeedbackSpec::csr(3)));
}

TEST(Decompose, Examples) {
  const auto csr7 = fsr::decompose(FeedbackSpec::csr(7));
  EXPECT_EQ(csr7.size(), 16u);
  for (const auto& c : csr7) EXPECT_EQ(c.length(), 8u);
  EXPECT_EQ(lengths_of(fsr::decompose(FeedbackSpec::psr(3))), (std::multiset<std::size_t>{1, 1, 2, 4}));
  EXPECT_EQ(lengths_of(fsr::decompose(FeedbackSpec::csr(3))), (std::multiset<std::size_t>{4, 4}));
}

TEST(Decompose, CycleOfExamples) {
  const auto c = fsr::cycle_of(FeedbackSpec::csr(7), State::from_bits("0000000"));
  EXPECT_EQ(c.digits(), "00000001");
  EXPECT_EQ(c.length(), 8u);
  std::set<std::uint64_t> labels;
  for (const auto& s : c.states()) labels.insert(s.label());
  EXPECT_EQ(labels, (std::set<std::uint64_t>{1, 2, 3, 5, 9, 17, 33, 65}));

  EXPECT_EQ(fsr::cycle_of(FeedbackSpec::psr(3), State::from_bits("000")).digits(), "0");
  const auto fixed = fsr::cycle_of(FeedbackSpec::csr(2), State::from_bits("11"));
  EXPECT_EQ(fixed.digits(), "1");
  EXPECT_EQ(fixed.length(), 1u);
}

TEST(Decompose, AgreesWithStringWalk) {
  std::mt19937_64 rng(22);
  for (unsigned n = 2; n <= 10; ++n) {
    std::vector<std::pair<FeedbackSpec, oracle::Feedback>> regs{
        {FeedbackSpec::psr(n), oracle::psr()}, {FeedbackSpec::csr(n), oracle::csr()}};
    for (int trial = 0; trial < 4; ++trial) {
      const auto g = oracle::random_g(rng, n - 1);
      regs.emplace_back(testing_support::spec_of(g, n), oracle::from_g(g));
    }
    for (const auto& [f, ref] : regs) {
      const auto cycles = fsr::decompose(f);
      std::multiset<std::string> mine;
      for (const auto& c : cycles) mine.insert(c.digits());
      std::multiset<std::string> theirs;
      for (const auto& cyc : oracle::cycles(ref, n)) {
        std::string digits;
        for (const auto& s : cyc) digits.push_back(s[0]);
        theirs.insert(oracle::min_rotation(digits));
      }
      ASSERT_EQ(mine, theirs) << "n=" << n;
    }
  }
}

TEST(Decompose, PartitionsTheStateSpace) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 11);
    const auto f = testing_support::spec_of(oracle::random_g(rng, n - 1), n);
    const auto labeling = fsr::label_cycles(f);
    std::vector<int> hits(fsr::state_count(n), 0);
    std::size_t total = 0;
    for (std::size_t i = 0; i < labeling.cycles.size(); ++i) {
      const auto& c = labeling.cycles[i];
      ASSERT_TRUE(c.is_cycle_of(f));
      ASSERT_EQ(c.digits(), oracle::min_rotation(c.digits()));
      if (i > 0) {
        const auto& p = labeling.cycles[i - 1];
        ASSERT_TRUE(p.length() < c.length() || (p.length() == c.length() && p.digits() < c.digits()));
      }
      total += c.length();
      for (const auto& s : c.states()) {
        ++hits[s.value()];
        ASSERT_EQ(labeling.cycle_of_state[s.value()], i);
      }
    }
    ASSERT_EQ(total, fsr::state_count(n));
    for (int h : hits) ASSERT_EQ(h, 1);
  }
}

TEST(Decompose, SummingRegisterLengthsDivideNPlusOne) {
  for (unsigned n = 2; n <= 16; ++n) {
    for (const auto& f : {FeedbackSpec::psr(n), FeedbackSpec::csr(n)}) {
      for (const auto& c : fsr::decompose(f)) ASSERT_EQ((n + 1) % c.length(), 0u) << n;
    }
  }
}

TEST(Decompose, RefusesAboveCap) {
  EXPECT_THROW(fsr::decompose(FeedbackSpec::csr(23)), fsr::LimitError);
  EXPECT_THROW(fsr::decompose(FeedbackSpec::csr(9), {8}), fsr::LimitError);
  EXPECT_THROW(fsr::adjacency_graph(FeedbackSpec::csr(23)), fsr::LimitError);
}

TEST(Adjacency, Examples) {
  const auto psr3 = fsr::adjacency_graph(FeedbackSpec::psr(3));
  EXPECT_EQ(psr3.vertices.size(), 4u);
  EXPECT_TRUE(psr3.connected());
  const auto csr7 = fsr::adjacency_graph(FeedbackSpec::csr(7));
  EXPECT_EQ(csr7.vertices.size(), 16u);
  EXPECT_TRUE(csr7.connected());

  // f = x_1 xor 1 on n = 2 walks 00 -> 01 -> 11 -> 10 -> 00, a single cycle.
  const auto single = fsr::adjacency_graph(FeedbackSpec::from_table(fsr::TruthTable::from_string("11")));
  EXPECT_EQ(single.vertices.size(), 1u);
  EXPECT_TRUE(single.edges.empty());
  EXPECT_TRUE(single.connected());
}

TEST(Adjacency, EdgesMatchBruteForce) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 8);
    const auto f = testing_support::spec_of(oracle::random_g(rng, n - 1), n);
    const auto graph = fsr::adjacency_graph(f);
    const auto labeling = fsr::label_cycles(f);
    // Conjugate pairs and companion pairs both give the same vertex pairs.
    std::set<std::pair<std::uint32_t, std::uint32_t>> conj, comp, mine;
    for (std::uint64_t v = 0; v < fsr::state_count(n); ++v) {
      const State s(n, v);
      auto a = labeling.cycle_of_state[v];
      auto b = labeling.cycle_of_state[fsr::conjugate(s).value()];
      if (a != b) conj.insert({std::min(a, b), std::max(a, b)});
      b = labeling.cycle_of_state[fsr::companion(s).value()];
      if (a != b) comp.insert({std::min(a, b), std::max(a, b)});
    }
    for (const auto& e : graph.edges) {
      ASSERT_LT(e.a, e.b);
      ASSERT_LE(e.shared_weight, n - 1);
      mine.insert({e.a, e.b});
    }
    ASSERT_EQ(mine, conj);
    ASSERT_EQ(conj, comp);
  }
}

TEST(Adjacency, SummingRegistersAreConnected) {
  for (unsigned n = 2; n <= 10; ++n) {
    EXPECT_TRUE(fsr::adjacency_graph(FeedbackSpec::psr(n)).connected()) << n;
    EXPECT_TRUE(fsr::adjacency_graph(FeedbackSpec::csr(n)).connected()) << n;
  }
}

TEST(Join, CompanionPairFromMainCycleExample) {
  const auto f = FeedbackSpec::csr(7);
  const auto run = fsr::cycle_of(f, State::from_bits("1110000"));   // 113
  const auto other = fsr::cycle_of(f, State::from_bits("1100001"));  // 98
  ASSERT_NE(run, other);
  const auto joined = fsr::join_cycles(f, other, run, State::from_bits("1100001"));
  EXPECT_EQ(joined.length(), 16u);
  EXPECT_EQ(rewired_states(f, joined), 2u);
  auto expected = values_of(run);
  for (auto v : values_of(other)) expected.insert(v);
  EXPECT_EQ(values_of(joined), expected);
  // 57 -> 113 -> 98 -> 67 as in the first steps of the weight-3 main cycle.
  const auto seq = joined.states_from(State(7, 56));
  EXPECT_EQ(seq[1].label(), 113u);
  EXPECT_EQ(seq[2].label(), 98u);
  EXPECT_EQ(seq[3].label(), 67u);
}

TEST(Join, ConjugatePairOfFixedPoints) {
  // f = x_1 on n = 2: fixed points 00 and 11, and the 2-cycle 01 <-> 10.
  const auto f = FeedbackSpec::from_table(fsr::TruthTable::from_string("00"));
  const auto zero = fsr::cycle_of(f, State::from_bits("00"));
  const auto one = fsr::cycle_of(f, State::from_bits("11"));
  const auto two = fsr::cycle_of(f, State::from_bits("10"));
  ASSERT_EQ(zero.length(), 1u);
  ASSERT_EQ(one.length(), 1u);

  const auto a = fsr::join_cycles(f, zero, two, State::from_bits("00"), fsr::PairKind::conjugate);
  EXPECT_EQ(a.length(), 3u);
  EXPECT_EQ(rewired_states(f, a), 2u);
  const auto b = fsr::join_cycles(f, one, two, State::from_bits("11"), fsr::PairKind::companion);
  EXPECT_EQ(b.length(), 3u);
  EXPECT_EQ(rewired_states(f, b), 2u);
  // 00 and 11 are neither conjugates nor companions.
  EXPECT_THROW(fsr::join_cycles(f, zero, one, State::from_bits("00"), fsr::PairKind::conjugate),
               std::invalid_argument);
}

TEST(Join, TwoCyclesOfCsr3GiveDeBruijnCycle) {
  const auto f = FeedbackSpec::csr(3);
  const auto cycles = fsr::decompose(f);
  ASSERT_EQ(cycles.size(), 2u);
  int joins = 0;
  for (const auto& s : cycles[0].states()) {
    if (!cycles[1].contains(fsr::companion(s))) continue;
    const auto joined = fsr::join_cycles(f, cycles[0], cycles[1], s);
    EXPECT_TRUE(oracle::is_debruijn(joined.digits(), 3)) << joined.digits();
    ++joins;
  }
  EXPECT_GT(joins, 0);
}

TEST(Join, RandomAdjacentPairsJoin) {
  std::mt19937_64 rng(25);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 2 + static_cast<unsigned>(rng() % 9);
    const auto f = testing_support::spec_of(oracle::random_g(rng, n - 1), n);
    const auto labeling = fsr::label_cycles(f);
    const State s(n, rng() & fsr::order_mask(n));
    const auto kind = (rng() & 1u) ? fsr::PairKind::companion : fsr::PairKind::conjugate;
    const State partner = kind == fsr::PairKind::companion ? fsr::companion(s) : fsr::conjugate(s);
    const auto a = labeling.cycle_of_state[s.value()];
    const auto b = labeling.cycle_of_state[partner.value()];
    const auto& c1 = labeling.cycles[a];
    const auto& c2 = labeling.cycles[b];
    if (a == b) {
      ASSERT_THROW(fsr::join_cycles(f, c1, c2, s, kind), std::invalid_argument);
      continue;
    }
    const auto joined = fsr::join_cycles(f, c1, c2, s, kind);
    ASSERT_EQ(joined.length(), c1.length() + c2.length());
    ASSERT_EQ(rewired_states(f, joined), 2u);
    auto expected = values_of(c1);
    for (auto v : values_of(c2)) expected.insert(v);
    ASSERT_EQ(values_of(joined), expected);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Join, RejectsUnsharedPair) {
  const auto f = FeedbackSpec::csr(7);
  const auto run = fsr::cycle_of(f, State::from_bits("1110000"));
  const auto other = fsr::cycle_of(f, State::from_bits("1100001"));
  EXPECT_THROW(fsr::join_cycles(f, other, run, State::from_bits("1110000")), std::invalid_argument);
  EXPECT_THROW(fsr::join_cycles(f, run, run, State::from_bits("1110000")), std::invalid_argument);
  EXPECT_THROW(fsr::join_cycles(f, other, run, State::from_bits("110000")), std::invalid_argument);
}
