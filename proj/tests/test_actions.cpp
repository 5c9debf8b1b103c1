#include <gtest/gtest.h>

#include <set>

#include "webperm/actions.hpp"
#include "webperm/errors.hpp"

using namespace webperm;

namespace {

const Permutation kSigma = Permutation::parse("3 4 8 5 7 10 1 6 2 9");

Permutation p(const char* s) { return Permutation::parse(s); }

std::vector<Permutation> no_double_descents(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& q) {
    if (has_no_double_descents(q)) out.push_back(q);
  });
  return out;
}

}  // namespace

TEST(XFactorization, Example) {
  const auto f = x_factorization(kSigma.word(), 5);
  EXPECT_EQ(f.w1, (Word{3, 4}));
  EXPECT_EQ(f.w2, (Word{8}));
  EXPECT_EQ(f.w3, (Word{7, 10}));
  EXPECT_EQ(f.w4, (Word{1, 6, 2, 9}));
  EXPECT_EQ(f.concat(), kSigma.word());
  EXPECT_THROW(x_factorization(kSigma.word(), 11), PreconditionError);
}

TEST(FoataStrehl, Examples) {
  EXPECT_EQ(fs_phi(kSigma.word(), 5), p("3 4 7 10 5 8 1 6 2 9").word());
  EXPECT_EQ(fs_phi(kSigma.word(), 4), p("3 8 5 7 10 4 1 6 2 9").word());
}

TEST(FoataStrehl, InvolutionsThatCommute) {
  for_each_permutation(5, [](const Permutation& q) {
    const Word& w = q.word();
    for (Letter x = 1; x <= 5; ++x) {
      ASSERT_EQ(fs_phi(fs_phi(w, x), x), w);
      for (Letter y = 1; y <= 5; ++y) ASSERT_EQ(fs_phi(fs_phi(w, x), y), fs_phi(fs_phi(w, y), x));
    }
  });
}

TEST(BiBasic, Example) {
  const auto d = bi_basic(kSigma);
  EXPECT_EQ(d.alpha_blocks, (std::vector<Word>{{3, 4, 8, 5, 7, 10}}));
  EXPECT_EQ(d.beta_blocks, (std::vector<Word>{{6, 2}, {9}}));
  EXPECT_EQ(d.concat(), kSigma.word());
}

TEST(BiBasic, BlockCountsAreMinimaCounts) {
  for_each_permutation(6, [](const Permutation& q) {
    const auto d = bi_basic(q);
    const auto s = statistics(q);
    ASSERT_EQ(static_cast<int>(d.alpha_blocks.size()), s.lmi - 1);
    ASSERT_EQ(static_cast<int>(d.beta_blocks.size()), s.rmi - 1);
    ASSERT_EQ(d.concat(), q.word());
  });
  EXPECT_TRUE(bi_basic(Permutation::identity(4)).alpha_blocks.empty());
  EXPECT_EQ(bi_basic(Permutation::identity(4)).beta_blocks.size(), 3u);
  EXPECT_EQ(bi_basic(p("4321")).alpha_blocks.size(), 3u);
  EXPECT_TRUE(bi_basic(p("4321")).beta_blocks.empty());
}

TEST(Bfs, WorkedExamples) {
  EXPECT_EQ(bfs_valleys(kSigma), (Word{3, 5, 2}));
  EXPECT_EQ(bfs_psi(kSigma, 2), p("3 4 8 5 7 10 2 6 1 9"));
  EXPECT_EQ(bfs_psi(kSigma, 3), p("1 6 2 4 7 10 5 8 3 9"));
  EXPECT_EQ(bfs_psi(kSigma, 5), p("3 4 7 10 5 8 1 6 2 9"));
  EXPECT_EQ(bfs_psi_set(kSigma, {2, 3}), p("2 6 1 4 7 10 5 8 3 9"));
  EXPECT_EQ(bfs_psi_set(kSigma, {2, 5}), p("3 4 7 10 5 8 2 6 1 9"));
  EXPECT_EQ(bfs_psi_set(kSigma, {3, 5}), p("1 6 2 4 8 5 7 10 3 9"));
  EXPECT_EQ(bfs_psi_set(kSigma, {2, 3, 5}), p("2 6 1 4 8 5 7 10 3 9"));
  EXPECT_EQ(bfs_psi(kSigma, 1), kSigma);
  EXPECT_EQ(bfs_psi(kSigma, 4), kSigma);
}

TEST(Bfs, RejectsDoubleDescents) { EXPECT_THROW(bfs_psi(p("321"), 2), PreconditionError); }

TEST(Bfs, InvolutionsThatCommute) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : no_double_descents(n)) {
      for (Letter x = 1; x <= n; ++x) {
        const auto qx = bfs_psi(q, x);
        ASSERT_TRUE(has_no_double_descents(qx)) << q.to_string() << " x=" << x;
        ASSERT_EQ(bfs_psi(qx, x), q) << q.to_string() << " x=" << x;
        for (Letter y = x + 1; y <= n; ++y) {
          ASSERT_EQ(bfs_psi(qx, y), bfs_psi(bfs_psi(q, y), x)) << q.to_string() << " " << x << "," << y;
        }
      }
    }
  }
}

TEST(Bfs, MovesPreserveLrmiRmidaDes) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& q : no_double_descents(n)) {
      const auto s = statistics(q);
      for (Letter x : bfs_valleys(q)) {
        const auto t = statistics(bfs_psi(q, x));
        ASSERT_EQ(t.lrmi(), s.lrmi()) << q.to_string() << " x=" << x;
        ASSERT_EQ(t.rmida, s.rmida) << q.to_string() << " x=" << x;
        ASSERT_EQ(t.des, s.des) << q.to_string() << " x=" << x;
      }
    }
  }
}

TEST(Bfs, FixedExactlyOffTheValleys) {
  for (const auto& q : no_double_descents(6)) {
    const auto v = bfs_valleys(q);
    const std::set<Letter> vs(v.begin(), v.end());
    for (Letter x = 1; x <= 6; ++x) ASSERT_EQ(bfs_psi(q, x) == q, vs.count(x) == 0) << q.to_string();
  }
}

TEST(Orbits, SizeAndUniqueRepresentative) {
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> seen;
    std::size_t covered = 0;
    for (const auto& q : no_double_descents(n)) {
      if (seen.count(q)) continue;
      const auto orbit = bfs_orbit(q);
      ASSERT_EQ(orbit.size(), std::size_t{1} << bfs_valleys(q).size()) << q.to_string();
      int reps = 0;
      for (const auto& r : orbit) {
        seen.insert(r);
        reps += is_orbit_representative(r) ? 1 : 0;
      }
      ASSERT_EQ(reps, 1) << q.to_string();
      const auto rep = orbit_representative(q);
      ASSERT_TRUE(is_orbit_representative(rep));
      ASSERT_EQ(static_cast<int>(bfs_valleys(rep).size()), statistics(rep).des);
      covered += orbit.size();
    }
    EXPECT_EQ(covered, seen.size());
  }
}

TEST(CMap, RepresentativesGoToWebPermutations) {
  for (int n = 2; n <= 7; ++n) {
    std::set<Permutation> images;
    int web = 0;
    for_each_permutation(n - 1, [&](const Permutation& q) { web += is_web(q) ? 1 : 0; });
    for (const auto& q : no_double_descents(n)) {
      if (!is_orbit_representative(q)) continue;
      const auto tau = c_map(bi_basic(q));
      const auto s = statistics(q);
      const auto st = statistics(tau);
      ASSERT_TRUE(is_web(tau)) << q.to_string();
      ASSERT_EQ(st.drop, s.des) << q.to_string();
      ASSERT_EQ(st.fix, s.rmida) << q.to_string();
      ASSERT_EQ(st.cyc, s.rmi - 1) << q.to_string();
      images.insert(tau);
    }
    EXPECT_EQ(static_cast<int>(images.size()), web) << "n=" << n;
  }
  EXPECT_EQ(c_map(bi_basic(p("1 3 2 4"))), p("213"));
}
