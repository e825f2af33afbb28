#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wachs/bruhat.hpp"

using namespace wachs;

TEST(Bruhat, ExamplesA) {
  EXPECT_TRUE(bruhat_leq_A(Permutation({2, 1, 4, 3}), Permutation({3, 4, 1, 2})));
  EXPECT_TRUE(bruhat_leq_A(Permutation({2, 3, 1}), Permutation({2, 3, 1})));
  EXPECT_FALSE(bruhat_leq_A(Permutation({2, 1, 4, 3, 6, 5}), Permutation({1, 2, 5, 6, 3, 4})));
  EXPECT_THROW(bruhat_leq_A(Permutation({1}), Permutation({1, 2})), std::invalid_argument);
}

TEST(Bruhat, ExamplesB) {
  EXPECT_TRUE(bruhat_leq_B(SignedPermutation({1, 2, 3}), SignedPermutation({-1, -2, -3})));
  EXPECT_TRUE(bruhat_leq_B(SignedPermutation({2, 1, -3}), SignedPermutation({-2, -1, -3})));
  EXPECT_FALSE(bruhat_leq_B(SignedPermutation({2, 1, -3}), SignedPermutation({-3, -1, -2})));
  EXPECT_FALSE(bruhat_leq_B(SignedPermutation({3, -1, -2}), SignedPermutation({-3, 2, 1})));
  EXPECT_FALSE(bruhat_leq_B(SignedPermutation({-3, 2, 1}), SignedPermutation({3, -1, -2})));
}

TEST(Bruhat, TableauMatchesReflectionClosureA) {
  for (int n = 1; n <= 6; ++n) {
    auto above = oracle::bruhat_closure_A(n);
    for (const auto& [u, ups] : above)
      for (const auto& [v, unused] : above)
        ASSERT_EQ(bruhat_leq_A(u, v), ups.count(v) == 1) << format(u) << " " << format(v);
  }
}

TEST(Bruhat, EmbeddingMatchesReflectionClosureB) {
  for (int n = 1; n <= 4; ++n) {
    auto above = oracle::bruhat_closure_B(n);
    for (const auto& [u, ups] : above)
      for (const auto& [v, unused] : above)
        ASSERT_EQ(bruhat_leq_B(u, v), ups.count(v) == 1) << format(u) << " " << format(v);
  }
}

TEST(Bruhat, CoversA) {
  EXPECT_EQ(covers_A(Permutation({2, 1, 4, 3})),
            (std::vector<Permutation>{Permutation({1, 2, 4, 3}), Permutation({2, 1, 3, 4})}));
  EXPECT_TRUE(covers_A(Permutation::identity(4)).empty());
  for (int n = 1; n <= 5; ++n) {
    std::vector<Permutation> g;
    for_each_permutation(n, [&](const Permutation& p) { g.push_back(p); });
    for (const auto& v : g) {
      std::vector<Permutation> brute;
      for (const auto& u : g)
        if (length_A(u) + 1 == length_A(v) && bruhat_leq_A(u, v)) brute.push_back(u);
      ASSERT_EQ(covers_A(v), brute) << format(v);
    }
  }
}

TEST(Bruhat, CoversB) {
  EXPECT_EQ(covers_B(SignedPermutation({2, 1})),
            std::vector<SignedPermutation>{SignedPermutation({1, 2})});
  EXPECT_TRUE(covers_B(SignedPermutation::identity(3)).empty());
  EXPECT_EQ(covers_B(SignedPermutation({-1, 2})),
            std::vector<SignedPermutation>{SignedPermutation({1, 2})});
  for (int n = 1; n <= 4; ++n) {
    std::vector<SignedPermutation> g;
    for_each_signed_permutation(n, [&](const SignedPermutation& p) { g.push_back(p); });
    std::sort(g.begin(), g.end());
    for (const auto& v : g) {
      std::vector<SignedPermutation> brute;
      for (const auto& u : g)
        if (length_B(u) + 1 == length_B(v) && bruhat_leq_B(u, v)) brute.push_back(u);
      ASSERT_EQ(covers_B(v), brute) << format(v);
    }
  }
}

TEST(Bruhat, LiftingProperty) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<Permutation> g;
    for_each_permutation(n, [&](const Permutation& p) { g.push_back(p); });
    for (const auto& v : g)
      for (const auto& w : g) {
        if (v == w || !bruhat_leq_A(v, w)) continue;
        auto dw = descent_set_A(w), dv = descent_set_A(v);
        for (int s : dw) {
          if (std::find(dv.begin(), dv.end(), s) != dv.end()) continue;
          ASSERT_TRUE(bruhat_leq_A(v, w.swap_positions(s, s + 1)));
          ASSERT_TRUE(bruhat_leq_A(v.swap_positions(s, s + 1), w));
        }
      }
  }
}

TEST(Bruhat, ProjectionToQuotientIsMonotone) {
  // J = {s_1}: the minimal coset representative sorts the first two entries
  auto project = [](const Permutation& p) {
    return p(1) > p(2) ? p.swap_positions(1, 2) : p;
  };
  for (int n = 2; n <= 5; ++n) {
    std::vector<Permutation> g;
    for_each_permutation(n, [&](const Permutation& p) { g.push_back(p); });
    for (const auto& u : g)
      for (const auto& v : g)
        if (bruhat_leq_A(u, v)) {
          ASSERT_TRUE(bruhat_leq_A(project(u), project(v)));
        }
  }
}
