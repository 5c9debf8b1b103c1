#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "webperm/errors.hpp"
#include "webperm/permutation.hpp"

using namespace webperm;

namespace {

// Euler zigzag numbers E_0..E_9 (OEIS A000111).
const std::vector<int> kEuler = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};

// Andre by the textbook recursion on the position of the minimum, written
// independently of the library: w = u m v with m = min(w) is Andre iff u and
// v are, and max(u) < max(v) whenever u is nonempty.
bool andre_oracle(const Word& w) {
  if (w.size() <= 1) return true;
  const auto m = std::min_element(w.begin(), w.end());
  const Word u(w.begin(), m);
  const Word v(m + 1, w.end());
  if (!u.empty()) {
    if (v.empty()) return false;
    if (*std::max_element(u.begin(), u.end()) > *std::max_element(v.begin(), v.end())) return false;
  }
  return andre_oracle(u) && andre_oracle(v);
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation(Word{1, 1}), PreconditionError);
  EXPECT_THROW(Permutation(Word{0, 1}), PreconditionError);
  EXPECT_THROW(Permutation(Word{2, 3}), PreconditionError);
  EXPECT_NO_THROW(Permutation(Word{}));
}

TEST(Permutation, ParseAcceptsCompactAndSpacedForms) {
  EXPECT_EQ(Permutation::parse("1324").word(), (Word{1, 3, 2, 4}));
  EXPECT_EQ(Permutation::parse("3 4 8 5 7 10 1 6 2 9").size(), 10);
  EXPECT_EQ(Permutation::parse("2,1,3").word(), (Word{2, 1, 3}));
  EXPECT_EQ(Permutation::parse("3 4 8 5 7 10 1 6 2 9").to_string(), "3 4 8 5 7 10 1 6 2 9");
}

TEST(Permutation, CyclesAreCanonical) {
  const auto p = Permutation::parse("312");
  ASSERT_EQ(p.cycles().size(), 1u);
  EXPECT_EQ(p.cycles()[0], (Cycle{1, 3, 2}));
  EXPECT_EQ(Permutation::from_cycles(3, {{2, 1, 3}}), Permutation::parse("312"));
  EXPECT_EQ(Permutation::from_cycles(6, {{2, 3, 5, 6, 1, 4}}).cycles()[0], (Cycle{1, 4, 2, 3, 5, 6}));
}

TEST(Permutation, ComposeAndInverse) {
  for_each_permutation(4, [](const Permutation& p) {
    EXPECT_EQ(p.compose(p.inverse()), Permutation::identity(4));
    EXPECT_EQ(p.inverse().inverse(), p);
  });
}

TEST(Statistics, WorkedValues) {
  const auto s = statistics(Permutation::parse("1324"));
  EXPECT_EQ(s.des, 1);
  EXPECT_EQ(s.drop, 1);
  EXPECT_EQ(s.fix, 2);
  EXPECT_EQ(s.cyc, 3);

  const auto id = statistics(Permutation::identity(6));
  EXPECT_EQ(id.des, 0);
  EXPECT_EQ(id.drop, 0);
  EXPECT_EQ(id.fix, 6);
  EXPECT_EQ(id.cyc, 6);
  EXPECT_EQ(id.lmi, 1);
  EXPECT_EQ(id.rmi, 6);
}

TEST(Statistics, MinimaMatchBlockCountsOfTheDecompositionExample) {
  // Blocks 3 4 8 5 7 10 | 1 | 6 2 | 9: left-to-right minima 3, 1 and
  // right-to-left minima 9, 2, 1.
  const auto s = statistics(Permutation::parse("3 4 8 5 7 10 1 6 2 9"));
  EXPECT_EQ(s.lmi, 2);
  EXPECT_EQ(s.rmi, 3);
  EXPECT_EQ(s.lrmi(), 3);
}

TEST(Statistics, BoundaryLettersCountAsInfinity) {
  const Word w{3, 4, 8, 5, 7, 10, 1, 6, 2, 9};
  EXPECT_EQ(valleys(w), (Word{3, 5, 1, 2}));
  EXPECT_EQ(double_ascents(w), (Word{4, 7, 9}));
  EXPECT_TRUE(double_descents(w).empty());
  EXPECT_EQ(double_descents(Word{3, 2, 1}), (Word{3, 2}));
}

TEST(Statistics, DescentsAndDropsEquidistributed) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> des(static_cast<std::size_t>(n)), drop(static_cast<std::size_t>(n));
    for_each_permutation(n, [&](const Permutation& p) {
      const auto s = statistics(p);
      ++des[static_cast<std::size_t>(s.des)];
      ++drop[static_cast<std::size_t>(s.drop)];
    });
    EXPECT_EQ(des, drop) << "n=" << n;
  }
}

TEST(UpDown, Examples) {
  EXPECT_TRUE(is_up_down(Word{1, 3, 2}));
  EXPECT_FALSE(is_up_down(Word{1, 2, 3}));
  EXPECT_TRUE(is_up_down(Word{2, 6, 1, 4}));
  EXPECT_TRUE(is_up_down(Word{}));
  EXPECT_TRUE(is_up_down(Word{7}));
}

TEST(Andre, Examples) {
  EXPECT_TRUE(is_andre(Word{3, 1, 2, 4, 5}));
  EXPECT_FALSE(is_andre(Word{1, 3, 2}));
  EXPECT_TRUE(is_andre(Word{}));
  EXPECT_TRUE(is_andre_xfact(Word{3, 1, 2, 4, 5}));
  EXPECT_FALSE(is_andre_xfact(Word{1, 3, 2}));
}

TEST(Andre, ThreeDefinitionsAgreeExhaustively) {
  for (int n = 0; n <= 7; ++n) {
    int count = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      const bool a = is_andre(p.word());
      ASSERT_EQ(a, is_andre_xfact(p.word())) << p.to_string();
      ASSERT_EQ(a, andre_oracle(p.word())) << p.to_string();
      count += a ? 1 : 0;
    });
    EXPECT_EQ(count, kEuler[static_cast<std::size_t>(n)]) << "n=" << n;
  }
}

TEST(AndreCycle, Examples) {
  EXPECT_TRUE(is_andre_cycle(Cycle{2, 3, 5, 6, 1, 4}));
  EXPECT_TRUE(is_andre_cycle(Cycle{4}));
  EXPECT_FALSE(is_andre_cycle(Cycle{1, 3, 2}));
}

TEST(Web, SizeThree) {
  for (const char* w : {"123", "132", "213", "231", "321"}) EXPECT_TRUE(is_web(Permutation::parse(w))) << w;
  EXPECT_FALSE(is_web(Permutation::parse("312")));
  EXPECT_TRUE(is_web(Permutation::identity(7)));
}

TEST(Web, CountsAreShiftedEulerNumbers) {
  for (int n = 0; n <= 8; ++n) {
    int web = 0;
    int delta = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      web += is_web(p) ? 1 : 0;
      delta += is_cycle_up_down(p) ? 1 : 0;
    });
    EXPECT_EQ(web, kEuler[static_cast<std::size_t>(n + 1)]) << "n=" << n;
    EXPECT_EQ(delta, web) << "n=" << n;
  }
}

TEST(CycleUpDown, SizeThree) {
  EXPECT_TRUE(is_cycle_up_down(Permutation::identity(3)));
  // 231 is the cycle (1 2 3), whose word 123 is not up-down.
  EXPECT_FALSE(is_cycle_up_down(Permutation::parse("231")));
  EXPECT_TRUE(is_cycle_up_down(Permutation::parse("312")));
  EXPECT_TRUE(is_cycle_up_down(Permutation::parse("321")));
}

TEST(Mix, Examples) {
  EXPECT_EQ(mix(Word{5, 8, 2, 6, 4, 7, 1, 3}), 2);
  EXPECT_EQ(mix(Word{4}), 0);
  EXPECT_EQ(mix(Word{}), 0);
  EXPECT_EQ(mix(Word{5, 6, 2, 3, 1, 4}), 2);
}

TEST(DropHat, AgreesWithDropOnWebPermutations) {
  EXPECT_EQ(drop_hat(Permutation::identity(5)), 0);
  for (int n = 1; n <= 8; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      if (is_web(p)) {
        ASSERT_EQ(drop_hat(p), statistics(p).drop) << p.to_string();
      }
    });
  }
}

TEST(Enumerate, CountsAndOrder) {
  EXPECT_EQ(enumerate(0).size(), 1u);
  EXPECT_TRUE(enumerate(0)[0].empty());
  EXPECT_EQ(enumerate(3).size(), 6u);
  const auto all = enumerate(8);
  EXPECT_EQ(all.size(), 40320u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_THROW(enumerate(10), CapExceeded);
  EXPECT_THROW(enumerate(5, 4), CapExceeded);
}
