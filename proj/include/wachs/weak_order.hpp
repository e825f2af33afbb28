#pragma once

// Left inversion sets, right and left weak orders, and the product
// decomposition of the right weak order on Wachs elements.

#include <bitset>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wachs/perm.hpp"
#include "wachs/poset.hpp"
#include "wachs/wachs.hpp"

namespace wachs {

/// A set of reflections, one bit per canonical key (see reflection_key).
using ReflectionSet = std::bitset<512>;

/// Key of the transposition (a,b), 1 <= a < b <= n, of S_n.
inline constexpr std::size_t reflection_key_A(int a, int b) noexcept {
  return static_cast<std::size_t>((a - 1) * kMaxSizeA + (b - 1));
}

/// Key of (a,b)_B with 1 <= a < |b|, or of (a,-a) when b = -a.
inline constexpr std::size_t reflection_key_B(int a, int b) noexcept {
  return static_cast<std::size_t>((a - 1) * (2 * kMaxSizeB + 1) + (b + kMaxSizeB));
}

/// T_L(w): value pairs a < b with b to the left of a.
inline ReflectionSet TL_set(const Permutation& w) {
  ReflectionSet s;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) s.set(reflection_key_A(w(j), w(i)));
  return s;
}

/// T_L(w) by position rules on the complete notation: (a,b)(-a,-b) belongs iff
/// b > 0 lies left of a, or b < 0 lies right of a; (a,-a) belongs iff a lies
/// left of -a.
inline ReflectionSet TL_set(const SignedPermutation& w) {
  ReflectionSet s;
  const int n = w.size();
  for (int a = 1; a <= n; ++a) {
    const int pa = w.position_of(a);
    if (pa < 0) s.set(reflection_key_B(a, -a));
    for (int b = a + 1; b <= n; ++b) {
      if (w.position_of(b) < pa) s.set(reflection_key_B(a, b));
      if (w.position_of(-b) > pa) s.set(reflection_key_B(a, -b));
    }
  }
  return s;
}

/// "(1,2),(3,-3)" style rendering of a reflection set.
inline std::string format_reflections(const ReflectionSet& s, Kind kind) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!s.test(k)) continue;
    int a = 0, b = 0;
    if (kind == Kind::A) {
      a = static_cast<int>(k / kMaxSizeA) + 1;
      b = static_cast<int>(k % kMaxSizeA) + 1;
    } else {
      a = static_cast<int>(k / (2 * kMaxSizeB + 1)) + 1;
      b = static_cast<int>(k % (2 * kMaxSizeB + 1)) - kMaxSizeB;
    }
    if (!out.empty()) out += ',';
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out;
}

enum class Side { Left, Right };

inline bool is_subset(const ReflectionSet& a, const ReflectionSet& b) { return (a & ~b).none(); }

/// Right: T_L(u) ⊆ T_L(v). Left: the same for the inverses.
template <typename P>
bool weak_leq(const P& u, const P& v, Side side) {
  if (u.size() != v.size()) throw std::invalid_argument("size mismatch in weak comparison");
  if (side == Side::Left) return is_subset(TL_set(u.inverse()), TL_set(v.inverse()));
  return is_subset(TL_set(u), TL_set(v));
}

/// Builds (elements, <=_side), labelled by canonical text.
template <typename P>
FinitePoset weak_poset(const std::vector<P>& elements, Side side) {
  std::vector<ReflectionSet> keys;
  std::vector<std::string> labels;
  keys.reserve(elements.size());
  for (const auto& e : elements) {
    keys.push_back(TL_set(side == Side::Left ? e.inverse() : e));
    labels.push_back(format(e));
  }
  return build_poset(std::move(labels),
                     [&](std::size_t i, std::size_t j) { return is_subset(keys[i], keys[j]); });
}

// ---------------------------------------------------------------------------
// Product decomposition

struct WeakIsoReport {
  bool holds = false;
  bool is_lattice = false;
  bool is_complemented = false;
  std::size_t elements = 0;
  /// Wachs label -> product label, in Wachs enumeration order.
  std::vector<std::pair<std::string, std::string>> witness_map;
  std::string failure;
};

namespace detail {

/// tau completed by m+1 (signed like i) at position |i|; tau itself for even n.
inline Permutation bar_completion(const WachsCodeA& c) {
  if (!c.odd()) return c.tau;
  std::vector<int> w = c.tau.word();
  w.insert(w.begin() + (c.i - 1), c.m() + 1);
  return Permutation(w);
}
inline SignedPermutation bar_completion(const WachsCodeB& c) {
  if (!c.odd()) return c.tau;
  std::vector<int> w = c.tau.window();
  w.insert(w.begin() + (std::abs(c.i) - 1), c.i > 0 ? c.m() + 1 : -(c.m() + 1));
  return SignedPermutation(w);
}

/// {|tau(k)| : k in T}
template <typename Code>
Subset value_subset(const Code& c) {
  Subset s = 0;
  for (int k : members(c.T)) s |= singleton(std::abs(c.tau(k)));
  return s;
}

template <typename P, typename Code, typename Group>
WeakIsoReport weak_product_iso_impl(const std::vector<P>& wachs_elems, const Group& group, int m) {
  WeakIsoReport r;
  r.elements = wachs_elems.size();
  auto wachs_side = weak_poset(wachs_elems, Side::Right);

  // (G_{ceil(n/2)}, <=_R) x P([m]); element index g * 2^m + S.
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<ReflectionSet> gkeys;
  for (const auto& g : group) gkeys.push_back(TL_set(g));
  std::vector<std::string> labels;
  std::map<P, std::size_t> gindex;
  for (std::size_t g = 0; g < group.size(); ++g) {
    gindex[group[g]] = g;
    for (Subset s = 0; s < subsets; ++s)
      labels.push_back("(" + format(group[g]) + "," + format_subset(s) + ")");
  }
  auto product = build_poset(std::move(labels), [&](std::size_t x, std::size_t y) {
    return is_subset(gkeys[x / subsets], gkeys[y / subsets]) &&
           is_subset(static_cast<Subset>(x % subsets), static_cast<Subset>(y % subsets));
  });

  std::vector<std::size_t> map(wachs_elems.size());
  std::vector<bool> hit(product.size(), false);
  for (std::size_t k = 0; k < wachs_elems.size(); ++k) {
    Code c = encode(wachs_elems[k]);
    std::size_t target = gindex.at(bar_completion(c)) * subsets + value_subset(c);
    if (hit[target]) {
      r.failure = "map is not injective at " + format(wachs_elems[k]);
      return r;
    }
    hit[target] = true;
    map[k] = target;
    r.witness_map.emplace_back(wachs_side.label(k), product.label(target));
  }
  if (product.size() != wachs_side.size()) {
    r.failure = "sizes differ";
    return r;
  }
  r.holds = is_order_isomorphism(wachs_side, product, map);
  if (!r.holds) r.failure = "map is a bijection but not an order isomorphism";
  auto lat = lattice_checks(wachs_side);
  r.is_lattice = lat.is_lattice;
  r.is_complemented = lat.is_complemented;
  return r;
}

}  // namespace detail

/// Checks (W(G_n), <=_R) against (G_{ceil(n/2)}, <=_R) x P([floor(n/2)]) through
/// (i, tau, T) -> (tau completed, {|tau(k)| : k in T}).
inline WeakIsoReport weak_product_iso(Kind kind, int n) {
  const int m = n / 2, half = n - m;
  if (kind == Kind::A) {
    std::vector<Permutation> group;
    for_each_permutation(half, [&](const Permutation& p) { group.push_back(p); });
    return detail::weak_product_iso_impl<Permutation, WachsCodeA>(enumerate_wachs_A(n), group, m);
  }
  std::vector<SignedPermutation> group;
  for_each_signed_permutation(half, [&](const SignedPermutation& p) { group.push_back(p); });
  std::sort(group.begin(), group.end());
  return detail::weak_product_iso_impl<SignedPermutation, WachsCodeB>(enumerate_wachs_B(n), group,
                                                                      m);
}

}  // namespace wachs
