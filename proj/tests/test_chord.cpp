#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "webperm/chord.hpp"
#include "webperm/errors.hpp"
#include "webperm/sequences.hpp"

using namespace webperm;

namespace {

using Partners = std::vector<int>;

bool interleave(int a, int c, int b, int d) {
  // Chords {a,c} and {b,d} as partner pairs with a < c, b < d.
  return (a < b && b < c && c < d) || (b < a && a < d && d < c);
}

// Plain recursion on partner tables, no memo, no canonical ordering: expand
// the first crossing pair found and recurse into both smoothings.
void expand_all(Partners p, std::map<Partners, long>& leaves) {
  const int v = static_cast<int>(p.size());
  for (int x = 0; x < v; ++x) {
    if (p[x] < x) continue;
    for (int y = x + 1; y < v; ++y) {
      if (p[y] < y || !interleave(x, p[x], y, p[y])) continue;
      const int a = x, b = y, c = p[x], d = p[y];  // a < b < c < d
      Partners left = p, right = p;
      left[a] = b, left[b] = a, left[c] = d, left[d] = c;
      right[b] = c, right[c] = b, right[a] = d, right[d] = a;
      expand_all(left, leaves);
      expand_all(right, leaves);
      return;
    }
  }
  ++leaves[p];
}

std::map<Partners, long> oracle(const ChordDiagram& e) {
  std::map<Partners, long> out;
  expand_all(e.partners(), out);
  return out;
}

std::map<Partners, long> flatten(const NCDMultiset& m) {
  std::map<Partners, long> out;
  for (const auto& [d, c] : m) out[d.partners()] = static_cast<long>(c);
  return out;
}

BigInt leaf_total(const NCDMultiset& m) {
  BigInt t = 0;
  for (const auto& kv : m) t += kv.second;
  return t;
}

}  // namespace

TEST(Chord, Crossing) {
  EXPECT_TRUE(crosses({0, 2}, {1, 3}));
  EXPECT_TRUE(crosses({1, 3}, {0, 2}));
  EXPECT_FALSE(crosses({0, 1}, {2, 3}));
  EXPECT_FALSE(crosses({0, 3}, {1, 2}));
  EXPECT_THROW(crosses({0, 2}, {2, 3}), PreconditionError);
}

TEST(Chord, RejectsNonMatchings) {
  EXPECT_THROW(ChordDiagram({{0, 1}, {1, 2}}), PreconditionError);
  EXPECT_THROW(ChordDiagram({{0, 3}}), PreconditionError);
}

TEST(Chord, ExpandExample) {
  const ChordDiagram e({{0, 2}, {1, 3}});
  const auto [first, second] = expand(e, {{0, 2}, {1, 3}});
  EXPECT_EQ(first, ChordDiagram({{0, 1}, {2, 3}}));
  EXPECT_EQ(second, ChordDiagram({{0, 3}, {1, 2}}));
  EXPECT_THROW(expand(e, {{0, 2}, {0, 2}}), PreconditionError);
}

TEST(Ncd, NonintersectingIsItsOwnExpansion) {
  const ChordDiagram e({{0, 5}, {1, 2}, {3, 4}});
  const auto m = ncd(e);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m.at(e), 1);
}

TEST(Ncd, TwoCrossing) {
  const auto m = ncd(ChordDiagram({{0, 2}, {1, 3}}));
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(leaf_total(m), 2);
}

TEST(Ncd, AgreesWithUnmemoizedExpansion) {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& e : all_chord_diagrams(m)) {
      const auto want = oracle(e);
      EXPECT_EQ(flatten(ncd(e, CrossingStrategy::First)), want) << e.to_string();
      EXPECT_EQ(flatten(ncd(e, CrossingStrategy::Last)), want) << e.to_string();
    }
  }
}

TEST(Ncd, LeavesAreNonintersecting) {
  for (const auto& e : all_chord_diagrams(4)) {
    for (const auto& kv : ncd(e)) EXPECT_TRUE(kv.first.nonintersecting());
  }
}

TEST(Ncd, RespectsCap) { EXPECT_THROW(ncd(a_diagram(5, 0), CrossingStrategy::First, 5), CapExceeded); }

TEST(Ncd, MultiplicitiesMatchFullExpansion) {
  const auto e = a_diagram(4, 2);
  const auto full = ncd(e);
  std::vector<ChordDiagram> targets;
  for (const auto& kv : full) targets.push_back(kv.first);
  const auto got = multiplicities(e, targets);
  for (std::size_t i = 0; i < targets.size(); ++i) EXPECT_EQ(got[i], full.at(targets[i]));
}

TEST(AllChordDiagrams, CountsAreDoubleFactorials) {
  EXPECT_EQ(all_chord_diagrams(1).size(), 1u);
  EXPECT_EQ(all_chord_diagrams(3).size(), 15u);
  EXPECT_EQ(all_chord_diagrams(5).size(), 945u);
}

TEST(ADiagram, Shape) {
  for (int n = 1; n <= 6; ++n) {
    // k = n: the extra chord is one more crossing chord.
    EXPECT_EQ(a_diagram(n, n).crossing_count(), n * (n + 1) / 2) << "n=" << n;
    // k = 0: the extra chord is isolated.
    EXPECT_EQ(a_diagram(n, 0).crossing_count(), n * (n - 1) / 2) << "n=" << n;
    for (int k = 0; k <= n; ++k) {
      const auto a = a_diagram(n, k);
      EXPECT_EQ(a.chord_count(), n + 1);
      EXPECT_EQ(a.crossing_count(), n * (n - 1) / 2 + k);
    }
  }
  EXPECT_THROW(a_diagram(3, 4), PreconditionError);
}

TEST(Necklace, ExactlyTwoPerSize) {
  for (int m = 1; m <= 5; ++m) {
    int count = 0;
    for (const auto& d : all_chord_diagrams(m)) count += is_necklace(d) ? 1 : 0;
    EXPECT_EQ(count, m == 1 ? 1 : 2) << "m=" << m;
    EXPECT_TRUE(is_necklace(necklace(m, 0)));
    EXPECT_TRUE(is_necklace(necklace(m, 1)));
  }
  EXPECT_NE(necklace(3, 0), necklace(3, 1));
  EXPECT_TRUE(is_necklace(ChordDiagram({{0, 5}, {1, 2}, {3, 4}})));
  EXPECT_FALSE(is_necklace(ChordDiagram({{0, 3}, {1, 2}, {4, 5}})));
}

TEST(BPlusMinus, SeidelValues) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BigInt want = (n % 2 == 1) ? seidel(n + 1, (n + 1) / 2 - k / 2) : seidel(n + 1, k / 2 + 1);
      EXPECT_EQ(b_plus(n, k), want) << "n=" << n << " k=" << k;
    }
  }
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(b_plus(3, k), seidel(4, 2 - k / 2));
}

TEST(BPlusMinus, MinusIsShiftedPlus) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) EXPECT_EQ(b_minus(n, k), b_plus(n, k - 1)) << "n=" << n << " k=" << k;
  }
}

TEST(BPlusMinus, PairMatchesSingles) {
  const auto [plus, minus] = b_plus_minus(5, 3);
  EXPECT_EQ(plus, b_plus(5, 3));
  EXPECT_EQ(minus, b_minus(5, 3));
}
