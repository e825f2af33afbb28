#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wachs/poset.hpp"

using namespace wachs;

namespace {

/// Two minima below two maxima, with a top and bottom added.
FinitePoset bowtie() {
  // 0 bottom, 1 2 middle-low, 3 4 middle-high, 5 top
  std::vector<std::vector<bool>> m(6, std::vector<bool>(6, false));
  for (int i = 0; i < 6; ++i) m[i][i] = true;
  for (int j = 1; j < 6; ++j) m[0][j] = true;
  for (int a : {1, 2})
    for (int b : {3, 4, 5}) m[a][b] = true;
  m[3][5] = m[4][5] = true;
  return build_poset(std::vector<std::string>{"0", "a", "b", "c", "d", "1"},
                     [&](std::size_t i, std::size_t j) { return m[i][j]; });
}

std::vector<std::vector<bool>> leq_matrix(const FinitePoset& p) {
  std::vector<std::vector<bool>> m(p.size(), std::vector<bool>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) m[i][j] = p.leq(i, j);
  return m;
}

/// Divisibility on [1..n], a poset with no maximum in general.
FinitePoset divisors(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return build_poset(std::move(labels),
                     [](std::size_t i, std::size_t j) { return (j + 1) % (i + 1) == 0; });
}

}  // namespace

TEST(Poset, BuildAndCovers) {
  auto c = chain_poset(1);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(c.cover_count(), 0u);
  auto b3 = boolean_algebra(3);
  EXPECT_EQ(b3.size(), 8u);
  EXPECT_EQ(b3.cover_count(), 12u);
  EXPECT_EQ(b3.minimum(), std::optional<std::size_t>(0));
  EXPECT_EQ(b3.maximum(), std::optional<std::size_t>(7));
  EXPECT_EQ(b3.index_of("{1,3}"), std::optional<std::size_t>(5));
}

TEST(Poset, RejectsNonOrders) {
  try {
    build_poset(std::vector<std::string>{"x", "y"}, [](std::size_t, std::size_t) { return true; });
    FAIL();
  } catch (const PosetError& e) {
    EXPECT_EQ(e.witness().size(), 2u);
  }
  // 0 <= 1 <= 2 but not 0 <= 2
  try {
    build_poset(std::vector<std::string>{"x", "y", "z"}, [](std::size_t i, std::size_t j) {
      return i == j || (i == 0 && j == 1) || (i == 1 && j == 2);
    });
    FAIL();
  } catch (const PosetError& e) {
    EXPECT_EQ(e.witness(), (std::vector<std::size_t>{0, 1, 2}));
  }
  EXPECT_THROW(build_poset(std::vector<std::string>{"x"}, [](auto, auto) { return false; }),
               PosetError);
}

TEST(Poset, TransitiveReductionRoundTrip) {
  for (const auto& p : {boolean_algebra(4), divisors(30), bowtie(), chain_poset(5)}) {
    // reachability closure of covers
    const std::size_t n = p.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x)
          if (reach[a][x])
            for (auto b : p.upper_covers(x))
              if (!reach[a][b]) reach[a][b] = changed = true;
    }
    EXPECT_EQ(reach, leq_matrix(p));
    auto brute = oracle::covers_matrix(leq_matrix(p));
    auto edges = p.cover_edges();
    std::set<std::pair<std::size_t, std::size_t>> got(edges.begin(), edges.end());
    EXPECT_EQ(got, brute);
  }
}

TEST(Poset, Grade) {
  auto g = grade(chain_poset(2));
  EXPECT_TRUE(g.graded);
  EXPECT_EQ(g.poset_rank, 1);
  EXPECT_EQ(grade(boolean_algebra(3)).poset_rank, 3);
  EXPECT_THROW(grade(divisors(6)), std::invalid_argument);

  // a pentagon: 0 < a < b < 1 and 0 < c < 1
  auto pent = build_poset(std::vector<std::string>{"0", "a", "b", "c", "1"},
                          [](std::size_t i, std::size_t j) {
                            return i == j || i == 0 || j == 4 || (i == 1 && j == 2);
                          });
  auto r = grade(pent);
  ASSERT_FALSE(r.graded);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->long_chain.size(), r.witness->short_chain.size());
  EXPECT_EQ(r.witness->long_chain.front(), r.witness->short_chain.front());
  EXPECT_EQ(r.witness->long_chain.back(), r.witness->short_chain.back());
  EXPECT_FALSE(pent.rank().has_value());
}

TEST(Poset, MobiusMatchesRecursion) {
  for (const auto& p : {boolean_algebra(3), divisors(24), bowtie(), chain_poset(4)}) {
    auto expected = oracle::mobius_matrix(leq_matrix(p));
    MobiusTable mu(p);
    for (std::size_t u = 0; u < p.size(); ++u)
      for (std::size_t v = 0; v < p.size(); ++v) ASSERT_EQ(mu(u, v), expected[u][v]);
  }
  auto b2 = boolean_algebra(2);
  EXPECT_EQ(mobius(b2)(0, 3), 1);
  auto d = divisors(30);
  // mu(1, 30) is the number-theoretic Möbius value of 30
  EXPECT_EQ(mobius(d)(0, 29), -1);
  EXPECT_EQ(mobius(d)(0, 3), 0);
}

TEST(Poset, Polynomials) {
  EXPECT_EQ(characteristic_polynomial(chain_poset(1)), IntPolynomial{1});
  EXPECT_EQ(characteristic_polynomial(boolean_algebra(3)), IntPolynomial({-1, 1}).pow(3));
  EXPECT_EQ(rank_generating_polynomial(chain_poset(3)), (IntPolynomial{1, 1, 1}));
  EXPECT_EQ(rank_generating_polynomial(boolean_algebra(3)), (IntPolynomial{1, 3, 3, 1}));
  EXPECT_THROW(characteristic_polynomial(divisors(6)), std::invalid_argument);
  auto pent = build_poset(std::vector<std::string>{"0", "a", "b", "c", "1"},
                          [](std::size_t i, std::size_t j) {
                            return i == j || i == 0 || j == 4 || (i == 1 && j == 2);
                          });
  EXPECT_THROW(characteristic_polynomial(pent), std::domain_error);
}

TEST(Poset, Lattices) {
  auto b3 = lattice_checks(boolean_algebra(3));
  EXPECT_TRUE(b3.is_lattice);
  EXPECT_TRUE(b3.is_complemented);
  auto bt = lattice_checks(bowtie());
  EXPECT_FALSE(bt.is_lattice);
  ASSERT_TRUE(bt.witness.has_value());
  auto c3 = lattice_checks(chain_poset(3));
  EXPECT_TRUE(c3.is_lattice);
  EXPECT_FALSE(c3.is_complemented);
  EXPECT_THROW(lattice_checks(divisors(6)), std::invalid_argument);
}

TEST(Poset, Isomorphism) {
  EXPECT_FALSE(poset_isomorphic(chain_poset(3), antichain_poset(3)));
  auto sq = cartesian_product(chain_poset(2), chain_poset(2));
  auto map = poset_isomorphism(sq, boolean_algebra(2));
  ASSERT_TRUE(map.has_value());
  EXPECT_TRUE(is_order_isomorphism(sq, boolean_algebra(2), *map));
  EXPECT_TRUE(poset_isomorphic(cartesian_product(boolean_algebra(2), boolean_algebra(2)),
                               boolean_algebra(4)));
  EXPECT_FALSE(poset_isomorphic(chain_poset(4), boolean_algebra(2)));
  EXPECT_FALSE(poset_isomorphic(bowtie(), boolean_algebra(2)));

  // a shuffled copy of divisors(36) is isomorphic to the original
  auto d = divisors(36);
  std::vector<std::size_t> perm(d.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(3));
  std::vector<std::string> labels(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) labels[perm[i]] = d.label(i);
  std::vector<std::size_t> inv(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) inv[perm[i]] = i;
  auto shuffled = build_poset(labels, [&](std::size_t i, std::size_t j) {
    return d.leq(inv[i], inv[j]);
  });
  auto f = poset_isomorphism(d, shuffled);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_order_isomorphism(d, shuffled, *f));
}

TEST(Poset, Products) {
  auto ord = ordinal_product(chain_poset(2), chain_poset(2));
  EXPECT_TRUE(poset_isomorphic(ord, chain_poset(4)));
  auto b2 = boolean_algebra(2);
  EXPECT_TRUE(poset_isomorphic(ordinal_product(b2, chain_poset(1)), b2));
  EXPECT_EQ(cartesian_product(chain_poset(3), chain_poset(2)).cover_count(), 7u);

  // rank of an ordinal product of graded posets: rho_Q(1) rho_P(x) + rho_Q(y)
  for (const auto& [p, q] : {std::pair{chain_poset(3), boolean_algebra(2)},
                             std::pair{boolean_algebra(2), chain_poset(2)}}) {
    auto prod = ordinal_product(p, q);
    auto g = grade(prod);
    if (!g.graded) continue;  // ordinal products of non-chains need not be graded
    auto gp = grade(p), gq = grade(q);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < q.size(); ++y)
        EXPECT_EQ(g.rank[x * q.size() + y], (gq.poset_rank + 1) * gp.rank[x] + gq.rank[y]);
  }
}

TEST(Poset, Duality) {
  auto b3 = boolean_algebra(3);
  std::vector<std::size_t> complement(8);
  for (std::size_t i = 0; i < 8; ++i) complement[i] = 7 - i;
  EXPECT_TRUE(dual_check(b3, complement));
  std::vector<std::size_t> id{0, 1};
  EXPECT_FALSE(dual_check(chain_poset(2), id));
  EXPECT_THROW(dual_check(chain_poset(2), std::vector<std::size_t>{0, 0}), std::invalid_argument);
}

TEST(Poset, Export) {
  auto c = chain_poset(2);
  EXPECT_EQ(to_dot(c),
            "digraph {\n  rankdir=BT;\n  { rank=same; \"0\"; }\n  { rank=same; \"1\"; }\n"
            "  \"0\" -> \"1\";\n}\n");
  auto j = to_json(c);
  EXPECT_EQ(j.dump(), R"({"covers":[[0,1]],"elements":["0","1"],"rank":[0,1]})");
  EXPECT_TRUE(to_json(divisors(4))["rank"].is_null());
}

TEST(Poset, Interval) {
  auto b3 = boolean_algebra(3);
  auto iv = interval(b3, 1, 7);
  EXPECT_EQ(iv.size(), 4u);
  EXPECT_TRUE(poset_isomorphic(iv, boolean_algebra(2)));
}
