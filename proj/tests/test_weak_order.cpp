#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wachs/weak_order.hpp"

using namespace wachs;

namespace {

/// Canonical key of a reflection given as a signed permutation.
std::size_t key_of(const SignedPermutation& t) {
  for (int a = 1; a <= t.size(); ++a) {
    if (t(a) == a) continue;
    if (t(a) == -a) return reflection_key_B(a, -a);
    return reflection_key_B(a, t(a));
  }
  throw std::logic_error("identity is not a reflection");
}

std::size_t key_of(const Permutation& t) {
  for (int a = 1; a <= t.size(); ++a)
    if (t(a) != a) return reflection_key_A(a, t(a));
  throw std::logic_error("identity is not a reflection");
}

template <typename P>
ReflectionSet as_set(const std::set<P>& refl) {
  ReflectionSet s;
  for (const auto& t : refl) s.set(key_of(t));
  return s;
}

}  // namespace

TEST(WeakOrder, LeftInversionsMatchDefinition) {
  for (int n = 1; n <= 5; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      ASSERT_EQ(TL_set(w), as_set(oracle::left_inversions_A(w))) << format(w);
    });
  for (int n = 1; n <= 4; ++n)
    for_each_signed_permutation(n, [](const SignedPermutation& w) {
      ASSERT_EQ(TL_set(w), as_set(oracle::left_inversions_B(w))) << format(w);
    });
}

TEST(WeakOrder, InversionCountIsLength) {
  for_each_permutation(6, [](const Permutation& w) {
    ASSERT_EQ(static_cast<int>(TL_set(w).count()), length_A(w));
  });
  for_each_signed_permutation(4, [](const SignedPermutation& w) {
    ASSERT_EQ(static_cast<int>(TL_set(w).count()), length_B(w));
  });
}

TEST(WeakOrder, Formatting) {
  EXPECT_EQ(format_reflections(TL_set(Permutation({2, 1, 3})), Kind::A), "(1,2)");
  EXPECT_EQ(format_reflections(TL_set(SignedPermutation({-1, 2})), Kind::B), "(1,-1)");
  EXPECT_EQ(format_reflections(TL_set(Permutation::identity(3)), Kind::A), "");
}

TEST(WeakOrder, Examples) {
  Permutation e = Permutation::identity(3), s1({2, 1, 3}), w0({3, 2, 1}), x({2, 3, 1});
  EXPECT_TRUE(weak_leq(e, w0, Side::Right));
  EXPECT_TRUE(weak_leq(s1, x, Side::Right));   // 231 = 213 * s2
  EXPECT_FALSE(weak_leq(s1, x, Side::Left));   // 231 != s * 213 for any chain
  EXPECT_TRUE(weak_leq(Permutation({1, 3, 2}), x, Side::Left));
  EXPECT_THROW(weak_leq(e, Permutation::identity(4), Side::Right), std::invalid_argument);
}

TEST(WeakOrder, CoversAreSimpleReflections) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Permutation> g;
    for_each_permutation(n, [&](const Permutation& p) { g.push_back(p); });
    for (auto side : {Side::Right, Side::Left}) {
      auto p = weak_poset(g, side);
      std::set<std::pair<std::size_t, std::size_t>> expected;
      for (std::size_t k = 0; k < g.size(); ++k)
        for (int i = 1; i < n; ++i) {
          auto s = Permutation::identity(n).swap_positions(i, i + 1);
          auto up = side == Side::Right ? g[k] * s : s * g[k];
          if (length_A(up) > length_A(g[k])) expected.emplace(k, *p.index_of(format(up)));
        }
      auto edges = p.cover_edges();
      std::set<std::pair<std::size_t, std::size_t>> got(edges.begin(), edges.end());
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(WeakOrder, RefinesBruhat) {
  std::vector<SignedPermutation> g;
  for_each_signed_permutation(3, [&](const SignedPermutation& p) { g.push_back(p); });
  for (const auto& u : g)
    for (const auto& v : g)
      for (auto side : {Side::Right, Side::Left}) {
        if (weak_leq(u, v, side)) {
          ASSERT_TRUE(bruhat_leq_B(u, v));
        }
      }
}

TEST(WeakOrder, LeftIsRightOnInverses) {
  auto w = enumerate_wachs_A(5);
  for (const auto& u : w)
    for (const auto& v : w)
      ASSERT_EQ(weak_leq(u, v, Side::Left), weak_leq(u.inverse(), v.inverse(), Side::Right));
}

TEST(WeakOrder, LeftOrdersOnWachsAreNotGraded) {
  auto a = grade(weak_poset(enumerate_wachs_A(5), Side::Left));
  EXPECT_FALSE(a.graded);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_NE(a.witness->long_chain.size(), a.witness->short_chain.size());
  auto b = grade(weak_poset(enumerate_wachs_B(3), Side::Left));
  EXPECT_FALSE(b.graded);
  ASSERT_TRUE(b.witness.has_value());
  // the right weak orders are graded
  EXPECT_TRUE(grade(weak_poset(enumerate_wachs_A(5), Side::Right)).graded);
  EXPECT_TRUE(grade(weak_poset(enumerate_wachs_B(3), Side::Right)).graded);
}

TEST(WeakOrder, ProductDecomposition) {
  for (int n = 1; n <= 6; ++n) {
    auto r = weak_product_iso(Kind::A, n);
    EXPECT_TRUE(r.holds) << n << " " << r.failure;
    EXPECT_TRUE(r.is_lattice) << n;
    EXPECT_TRUE(r.is_complemented) << n;
    EXPECT_EQ(r.elements, wachs_count(Kind::A, n));
    EXPECT_EQ(r.witness_map.size(), r.elements);
  }
  for (int n = 1; n <= 4; ++n) {
    auto r = weak_product_iso(Kind::B, n);
    EXPECT_TRUE(r.holds) << n << " " << r.failure;
    EXPECT_TRUE(r.is_lattice) << n;
    EXPECT_TRUE(r.is_complemented) << n;
  }
  auto r = weak_product_iso(Kind::A, 4);
  // 2143 = (12, {1,2}) sits over the identity with the full subset
  auto it = std::find_if(r.witness_map.begin(), r.witness_map.end(),
                         [](const auto& e) { return e.first == "2143"; });
  ASSERT_NE(it, r.witness_map.end());
  EXPECT_EQ(it->second, "(12,{1,2})");
}
