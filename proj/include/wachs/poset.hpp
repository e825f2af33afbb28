#pragma once

// Finite posets: construction from an order oracle, transitive reduction,
// gradedness, Möbius function, characteristic and rank-generating
// polynomials, lattice tests, isomorphism, products and exporters.
//
// Element keys are opaque strings; nothing here inspects them.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wachs/qpoly.hpp"

namespace wachs {

/// Fixed-length bit row used for up/down sets.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  bool is_subset_of(const BitRow& o) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  BitRow& operator&=(const BitRow& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  BitRow& operator|=(const BitRow& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend BitRow operator&(BitRow a, const BitRow& b) noexcept { return a &= b; }
  friend bool operator==(const BitRow&, const BitRow&) = default;

  /// Index of the highest set bit, if any.
  std::optional<std::size_t> highest() const noexcept {
    for (std::size_t k = words_.size(); k-- > 0;)
      if (words_[k]) return k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
    return std::nullopt;
  }
  std::optional<std::size_t> lowest() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return std::nullopt;
  }

  /// |this & o| without materializing the intersection.
  std::size_t intersect_count(const BitRow& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
      c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
    return c;
  }

  /// Calls f on every index set in both rows.
  template <typename F>
  void for_each_common(const BitRow& o, F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k] & o.words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Raised when an oracle does not define a partial order; carries a witness.
class PosetError : public std::invalid_argument {
 public:
  PosetError(const std::string& what, std::vector<std::size_t> witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

class FinitePoset {
 public:
  using Index = std::size_t;

  FinitePoset() = default;

  /// up[i] must be {j : i <= j}. Use build_poset for validated construction.
  FinitePoset(std::vector<std::string> labels, std::vector<BitRow> up)
      : labels_(std::move(labels)), up_(std::move(up)) {
    const Index n = labels_.size();
    down_.assign(n, BitRow(n));
    for (Index i = 0; i < n; ++i) up_[i].for_each([&](Index j) { down_[j].set(i); });

    // Sorting by down-set size yields a linear extension.
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Index{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Index a, Index b) { return down_[a].count() < down_[b].count(); });

    upper_.assign(n, {});
    lower_.assign(n, {});
    for (Index a = 0; a < n; ++a) {
      up_[a].for_each([&](Index b) {
        if (b == a) return;
        if (up_[a].intersect_count(down_[b]) == 2) {
          upper_[a].push_back(b);
          lower_[b].push_back(a);
        }
      });
    }
    for (auto& v : lower_) std::sort(v.begin(), v.end());

    for (Index i = 0; i < n; ++i) {
      if (up_[i].count() == n) minimum_ = i;
      if (down_[i].count() == n) maximum_ = i;
    }
    compute_rank();
  }

  Index size() const noexcept { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<Index> index_of(const std::string& key) const {
    auto it = std::find(labels_.begin(), labels_.end(), key);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
  }

  bool leq(Index a, Index b) const noexcept { return up_[a].test(b); }
  bool less(Index a, Index b) const noexcept { return a != b && up_[a].test(b); }

  const BitRow& up_set(Index i) const noexcept { return up_[i]; }
  const BitRow& down_set(Index i) const noexcept { return down_[i]; }
  const std::vector<Index>& upper_covers(Index i) const noexcept { return upper_[i]; }
  const std::vector<Index>& lower_covers(Index i) const noexcept { return lower_[i]; }

  /// A linear extension of the order.
  const std::vector<Index>& linear_extension() const noexcept { return order_; }

  /// Cover pairs (lower, upper), sorted.
  std::vector<std::pair<Index, Index>> cover_edges() const {
    std::vector<std::pair<Index, Index>> e;
    for (Index a = 0; a < size(); ++a)
      for (Index b : upper_[a]) e.emplace_back(a, b);
    return e;
  }
  std::size_t cover_count() const noexcept {
    std::size_t c = 0;
    for (const auto& v : upper_) c += v.size();
    return c;
  }

  std::optional<Index> minimum() const noexcept { return minimum_; }
  std::optional<Index> maximum() const noexcept { return maximum_; }

  /// Longest-chain height of each element above the minimal elements.
  const std::vector<int>& height() const noexcept { return height_; }

  /// Rank labelling; present iff the poset is bounded and graded.
  const std::optional<std::vector<int>>& rank() const noexcept { return rank_; }

 private:
  void compute_rank() {
    height_.assign(size(), 0);
    for (Index x : order_)
      for (Index a : lower_[x]) height_[x] = std::max(height_[x], height_[a] + 1);
    if (!minimum_ || !maximum_) return;
    for (Index a = 0; a < size(); ++a)
      for (Index b : upper_[a])
        if (height_[b] != height_[a] + 1) return;
    rank_ = height_;
  }

  std::vector<std::string> labels_;
  std::vector<BitRow> up_, down_;
  std::vector<Index> order_;
  std::vector<std::vector<Index>> upper_, lower_;
  std::optional<Index> minimum_, maximum_;
  std::vector<int> height_;
  std::optional<std::vector<int>> rank_;
};

/// Builds a poset from labels and an index oracle leq(i, j).
///
/// Order axioms are verified for up to 5000 elements; a violation raises
/// PosetError with a witness pair or triple.
template <typename Leq>
FinitePoset build_poset(std::vector<std::string> labels, Leq&& leq) {
  const std::size_t n = labels.size();
  std::vector<BitRow> up(n, BitRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(i, j)) up[i].set(j);
  if (n <= 5000) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!up[i].test(i)) throw PosetError("reflexivity fails at " + labels[i], {i});
      std::optional<std::size_t> bad;
      up[i].for_each([&](std::size_t j) {
        if (!bad && j != i && up[j].test(i)) bad = j;
      });
      if (bad)
        throw PosetError("antisymmetry fails for " + labels[i] + ", " + labels[*bad], {i, *bad});
      up[i].for_each([&](std::size_t j) {
        if (bad || up[j].is_subset_of(up[i])) return;
        bad = j;
      });
      if (bad) {
        BitRow missing = up[*bad];
        std::size_t k = 0;
        missing.for_each([&](std::size_t c) {
          if (!up[i].test(c)) k = c;
        });
        throw PosetError("transitivity fails for " + labels[i] + " <= " + labels[*bad] +
                             " <= " + labels[k],
                         {i, *bad, k});
      }
    }
  }
  return FinitePoset(std::move(labels), std::move(up));
}

/// Builds a poset over a list of values, labelled by `label`, ordered by `leq`.
template <typename T, typename Leq, typename Label>
FinitePoset build_poset(const std::vector<T>& elements, Leq&& leq, Label&& label) {
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const auto& e : elements) labels.push_back(label(e));
  return build_poset(std::move(labels),
                     [&](std::size_t i, std::size_t j) { return leq(elements[i], elements[j]); });
}

/// The subposet induced on `keep` (in the given order).
inline FinitePoset induced_subposet(const FinitePoset& p, const std::vector<std::size_t>& keep) {
  std::vector<std::string> labels;
  for (auto i : keep) labels.push_back(p.label(i));
  const std::size_t n = keep.size();
  std::vector<BitRow> up(n, BitRow(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq(keep[a], keep[b])) up[a].set(b);
  return FinitePoset(std::move(labels), std::move(up));
}

/// The closed interval [a, b].
inline FinitePoset interval(const FinitePoset& p, std::size_t a, std::size_t b) {
  std::vector<std::size_t> keep;
  (p.up_set(a) & p.down_set(b)).for_each([&](std::size_t i) { keep.push_back(i); });
  return induced_subposet(p, keep);
}

// ---------------------------------------------------------------------------
// Gradedness

/// Two maximal chains of [bottom, top] with different lengths.
struct NonGradedWitness {
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::vector<std::size_t> long_chain;
  std::vector<std::size_t> short_chain;
};

struct GradeResult {
  bool graded = false;
  std::vector<int> rank;  ///< valid when graded
  int poset_rank = 0;     ///< rank of the maximum when graded
  std::optional<NonGradedWitness> witness;
};

inline GradeResult grade(const FinitePoset& p) {
  if (!p.minimum()) throw std::invalid_argument("poset has no minimum");
  if (!p.maximum()) throw std::invalid_argument("poset has no maximum");
  GradeResult r;
  const auto& h = p.height();
  // A longest chain from the minimum to x, built by walking back along covers.
  auto longest_chain_to = [&](std::size_t x) {
    std::vector<std::size_t> chain{x};
    while (x != *p.minimum()) {
      for (auto a : p.lower_covers(x))
        if (h[a] + 1 == h[x]) {
          x = a;
          break;
        }
      chain.push_back(x);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
  };
  for (auto [a, b] : p.cover_edges()) {
    if (h[b] == h[a] + 1) continue;
    NonGradedWitness w;
    w.bottom = *p.minimum();
    w.top = b;
    w.long_chain = longest_chain_to(b);
    w.short_chain = longest_chain_to(a);
    w.short_chain.push_back(b);
    r.witness = std::move(w);
    return r;
  }
  r.graded = true;
  r.rank = h;
  r.poset_rank = h[*p.maximum()];
  return r;
}

// ---------------------------------------------------------------------------
// Möbius function

/// Möbius values mu(u, v), with rows materialized on first use.
///
/// Row materialization mutates the table; share a table across threads only
/// after materialize_all(), or give each worker its own table.
class MobiusTable {
 public:
  explicit MobiusTable(const FinitePoset& p) : poset_(&p), rows_(p.size()) {}

  /// mu(u, v); zero when u is not <= v.
  int operator()(std::size_t u, std::size_t v) const { return row(u)[v]; }

  const std::vector<int>& row(std::size_t u) const {
    if (!rows_[u]) rows_[u] = compute_row(u);
    return *rows_[u];
  }

  void materialize_all() const {
    for (std::size_t u = 0; u < rows_.size(); ++u) row(u);
  }

 private:
  std::vector<int> compute_row(std::size_t u) const {
    const auto& p = *poset_;
    std::vector<int> mu(p.size(), 0);
    mu[u] = 1;
    const BitRow& above = p.up_set(u);
    for (auto v : p.linear_extension()) {
      if (v == u || !above.test(v)) continue;
      int s = 0;
      above.for_each_common(p.down_set(v), [&](std::size_t z) {
        if (z != v) s += mu[z];
      });
      mu[v] = -s;
    }
    return mu;
  }

  const FinitePoset* poset_;
  mutable std::vector<std::optional<std::vector<int>>> rows_;
};

inline MobiusTable mobius(const FinitePoset& p) { return MobiusTable(p); }

/// sum over z of mu(0, z) x^{rho(1) - rho(z)}
inline IntPolynomial characteristic_polynomial(const FinitePoset& p) {
  auto g = grade(p);
  if (!g.graded) throw std::domain_error("characteristic polynomial needs a graded poset");
  MobiusTable mu(p);
  IntPolynomial c;
  const auto& row = mu.row(*p.minimum());
  for (std::size_t z = 0; z < p.size(); ++z)
    if (row[z] != 0) c.add_term(g.poset_rank - g.rank[z], row[z]);
  return c;
}

/// sum over v of x^{rho(v)}
inline IntPolynomial rank_generating_polynomial(const FinitePoset& p) {
  auto g = grade(p);
  if (!g.graded) throw std::domain_error("rank-generating polynomial needs a graded poset");
  IntPolynomial r;
  for (int k : g.rank) r.add_term(k, 1);
  return r;
}

// ---------------------------------------------------------------------------
// Lattices

struct LatticeReport {
  bool is_lattice = false;
  bool is_complemented = false;
  /// A pair without a meet or join, or an element without a complement.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

namespace detail {

/// Up/down sets re-indexed along a linear extension, so that the greatest
/// candidate of a lower-bound set is its highest bit.
struct ExtensionIndex {
  std::vector<std::size_t> order, where;
  std::vector<BitRow> up, down;

  explicit ExtensionIndex(const FinitePoset& p)
      : order(p.linear_extension()), where(p.size()), up(p.size()), down(p.size()) {
    const std::size_t n = p.size();
    for (std::size_t k = 0; k < n; ++k) where[order[k]] = k;
    for (std::size_t k = 0; k < n; ++k) {
      up[k] = BitRow(n);
      down[k] = BitRow(n);
      p.up_set(order[k]).for_each([&](std::size_t j) { up[k].set(where[j]); });
      p.down_set(order[k]).for_each([&](std::size_t j) { down[k].set(where[j]); });
    }
  }

  /// Meet in extension coordinates.
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const {
    BitRow lower = down[a] & down[b];
    auto top = lower.highest();
    if (!top || !(down[*top] == lower)) return std::nullopt;
    return top;
  }
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const {
    BitRow upper = up[a] & up[b];
    auto bottom = upper.lowest();
    if (!bottom || !(up[*bottom] == upper)) return std::nullopt;
    return bottom;
  }
};

}  // namespace detail

/// Lattice and complementation tests on a bounded poset.
inline LatticeReport lattice_checks(const FinitePoset& p, bool check_complements = true) {
  if (!p.minimum() || !p.maximum()) throw std::invalid_argument("lattice test needs a bounded poset");
  LatticeReport r;
  detail::ExtensionIndex ext(p);
  const std::size_t n = p.size();
  // Bounded + all pairwise meets exist => lattice.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!ext.meet(a, b)) {
        r.witness = std::make_pair(ext.order[a], ext.order[b]);
        return r;
      }
  r.is_lattice = true;
  if (!check_complements) return r;
  const std::size_t bottom = ext.where[*p.minimum()], top = ext.where[*p.maximum()];
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      found = ext.meet(a, b) == bottom && ext.join(a, b) == top;
    if (!found) {
      r.witness = std::make_pair(ext.order[a], ext.order[a]);
      return r;
    }
  }
  r.is_complemented = true;
  return r;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace detail {

/// Joint colour refinement of two posets over their cover graphs.
inline std::pair<std::vector<int>, std::vector<int>> refine_colours(const FinitePoset& p,
                                                                    const FinitePoset& q) {
  auto initial = [](const FinitePoset& x) {
    std::vector<std::vector<long>> sig(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      sig[i] = {static_cast<long>(x.down_set(i).count()), static_cast<long>(x.up_set(i).count()),
                static_cast<long>(x.lower_covers(i).size()),
                static_cast<long>(x.upper_covers(i).size()), static_cast<long>(x.height()[i])};
    return sig;
  };
  auto sp = initial(p), sq = initial(q);
  std::vector<int> cp(p.size()), cq(q.size());
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<long>, int> ids;
    for (auto& s : sp) ids.emplace(s, 0);
    for (auto& s : sq) ids.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (std::size_t i = 0; i < p.size(); ++i) cp[i] = ids[sp[i]];
    for (std::size_t i = 0; i < q.size(); ++i) cq[i] = ids[sq[i]];
    if (ids.size() == classes) break;
    classes = ids.size();
    auto step = [](const FinitePoset& x, const std::vector<int>& c) {
      std::vector<std::vector<long>> sig(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<long> lo, hi;
        for (auto a : x.lower_covers(i)) lo.push_back(c[a]);
        for (auto b : x.upper_covers(i)) hi.push_back(c[b]);
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
        sig[i] = {c[i], -1};
        sig[i].insert(sig[i].end(), lo.begin(), lo.end());
        sig[i].push_back(-2);
        sig[i].insert(sig[i].end(), hi.begin(), hi.end());
      }
      return sig;
    };
    sp = step(p, cp);
    sq = step(q, cq);
  }
  return {cp, cq};
}

}  // namespace detail

/// An isomorphism p -> q as an index map, or nullopt if none exists.
inline std::optional<std::vector<std::size_t>> poset_isomorphism(const FinitePoset& p,
                                                                 const FinitePoset& q) {
  const std::size_t n = p.size();
  if (n != q.size() || p.cover_count() != q.cover_count()) return std::nullopt;
  auto [cp, cq] = detail::refine_colours(p, q);
  {
    auto hp = cp, hq = cq;
    std::sort(hp.begin(), hp.end());
    std::sort(hq.begin(), hq.end());
    if (hp != hq) return std::nullopt;
  }
  const auto& order = p.linear_extension();  // lower covers are placed first
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> f(n, kUnset);
  std::vector<bool> used(n, false);

  auto candidates = [&](std::size_t x) {
    std::vector<std::size_t> c;
    const auto& lo = p.lower_covers(x);
    if (lo.empty()) {
      for (std::size_t y = 0; y < n; ++y)
        if (!used[y] && cq[y] == cp[x]) c.push_back(y);
      return c;
    }
    for (auto y : q.upper_covers(f[lo.front()])) {
      if (used[y] || cq[y] != cp[x]) continue;
      bool ok = true;
      for (auto a : lo) {
        const auto& qlo = q.lower_covers(y);
        if (!std::binary_search(qlo.begin(), qlo.end(), f[a])) {
          ok = false;
          break;
        }
      }
      if (ok) c.push_back(y);
    }
    return c;
  };

  // Iterative backtracking over the linear extension.
  std::vector<std::vector<std::size_t>> stack_candidates(n);
  std::vector<std::size_t> stack_pos(n, 0);
  std::size_t depth = 0;
  stack_candidates[0] = candidates(order[0]);
  while (true) {
    const std::size_t x = order[depth];
    if (f[x] != kUnset) {
      used[f[x]] = false;
      f[x] = kUnset;
    }
    if (stack_pos[depth] >= stack_candidates[depth].size()) {
      if (depth == 0) return std::nullopt;
      stack_pos[depth] = 0;
      --depth;
      continue;
    }
    std::size_t y = stack_candidates[depth][stack_pos[depth]++];
    f[x] = y;
    used[y] = true;
    if (depth + 1 == n) return f;
    ++depth;
    stack_candidates[depth] = candidates(order[depth]);
    stack_pos[depth] = 0;
  }
}

inline bool poset_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  return poset_isomorphism(p, q).has_value();
}

/// True iff `map` is an order isomorphism p -> q (both directions).
inline bool is_order_isomorphism(const FinitePoset& p, const FinitePoset& q,
                                 const std::vector<std::size_t>& map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (auto y : map) {
    if (y >= q.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) != q.leq(map[a], map[b])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Products, duality, standard posets

/// (x,y) <= (x',y') iff x < x', or x = x' and y <= y'.
inline FinitePoset ordinal_product(const FinitePoset& p, const FinitePoset& q) {
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b)
      labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  const std::size_t m = q.size();
  return build_poset(std::move(labels), [&](std::size_t i, std::size_t j) {
    std::size_t a = i / m, b = i % m, c = j / m, d = j % m;
    return p.less(a, c) || (a == c && q.leq(b, d));
  });
}

/// Componentwise order on p x q.
inline FinitePoset cartesian_product(const FinitePoset& p, const FinitePoset& q) {
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b)
      labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  const std::size_t m = q.size();
  return build_poset(std::move(labels), [&](std::size_t i, std::size_t j) {
    return p.leq(i / m, j / m) && q.leq(i % m, j % m);
  });
}

/// True iff `map` is an antiautomorphism: u <= v <=> map(v) <= map(u).
inline bool dual_check(const FinitePoset& p, const std::vector<std::size_t>& map) {
  if (map.size() != p.size()) throw std::invalid_argument("map size differs from poset size");
  std::vector<bool> hit(p.size(), false);
  for (auto y : map) {
    if (y >= p.size() || hit[y]) throw std::invalid_argument("map is not a bijection");
    hit[y] = true;
  }
  for (std::size_t u = 0; u < p.size(); ++u)
    for (std::size_t v = 0; v < p.size(); ++v)
      if (p.leq(u, v) != p.leq(map[v], map[u])) return false;
  return true;
}

/// 0 < 1 < ... < k-1
inline FinitePoset chain_poset(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return build_poset(std::move(labels), [](std::size_t i, std::size_t j) { return i <= j; });
}

inline FinitePoset antichain_poset(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return build_poset(std::move(labels), [](std::size_t i, std::size_t j) { return i == j; });
}

/// Subsets of [k] under inclusion; element i is the subset with bitmask i.
inline FinitePoset boolean_algebra(int k) {
  std::vector<std::string> labels;
  for (std::uint32_t s = 0; s < (1U << k); ++s) {
    std::string l = "{";
    for (int b = 0; b < k; ++b)
      if ((s >> b) & 1U) l += (l.size() > 1 ? "," : "") + std::to_string(b + 1);
    labels.push_back(l + "}");
  }
  return build_poset(std::move(labels),
                     [](std::size_t i, std::size_t j) { return (i & ~j) == 0; });
}

// ---------------------------------------------------------------------------
// Export

/// Graphviz text: one edge per cover (lower -> upper), same-rank groups when graded.
inline std::string to_dot(const FinitePoset& p) {
  std::ostringstream os;
  os << "digraph {\n  rankdir=BT;\n";
  if (const auto& rank = p.rank()) {
    int top = rank->empty() ? -1 : *std::max_element(rank->begin(), rank->end());
    for (int k = 0; k <= top; ++k) {
      os << "  { rank=same;";
      for (std::size_t i = 0; i < p.size(); ++i)
        if ((*rank)[i] == k) os << " \"" << p.label(i) << "\";";
      os << " }\n";
    }
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) os << "  \"" << p.label(i) << "\";\n";
  }
  for (auto [a, b] : p.cover_edges())
    os << "  \"" << p.label(a) << "\" -> \"" << p.label(b) << "\";\n";
  os << "}\n";
  return os.str();
}

/// {"elements": [...], "covers": [[i,j],...], "rank": [...] or null}
inline nlohmann::json to_json(const FinitePoset& p) {
  nlohmann::json j;
  j["elements"] = p.labels();
  auto covers = nlohmann::json::array();
  for (auto [a, b] : p.cover_edges()) covers.push_back({a, b});
  j["covers"] = std::move(covers);
  if (p.rank())
    j["rank"] = *p.rank();
  else
    j["rank"] = nullptr;
  return j;
}

}  // namespace wachs
