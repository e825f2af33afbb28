#pragma once

// Wachs permutations in S_n and signed Wachs permutations in B_n: membership,
// enumeration, the code bijections, l_W, and the closed-form order, cover and
// Möbius descriptions.
//
// Codes. Write n = 2m or 2m + 1. A Wachs element is encoded as (i, tau, T)
// where tau lies in S_m (resp. B_m), T is a subset of [m] and i is the
// position coordinate: i in [m+1] for type A and i in [±(m+1)] for type B.
// For even n the position coordinate is fixed at m+1, which makes every
// odd-case formula specialise to its even-case counterpart.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "wachs/bruhat.hpp"
#include "wachs/perm.hpp"
#include "wachs/qpoly.hpp"

namespace wachs {

enum class Kind { A, B };

inline std::string to_string(Kind k) { return k == Kind::A ? "A" : "B"; }

struct WachsCodeA {
  int n = 0;
  int i = 1;  ///< position coordinate in [m+1]; m+1 when n is even
  Permutation tau;
  Subset T = 0;

  int m() const noexcept { return n / 2; }
  bool odd() const noexcept { return n % 2 == 1; }
  friend bool operator==(const WachsCodeA&, const WachsCodeA&) = default;
};

struct WachsCodeB {
  int n = 0;
  int i = 1;  ///< position coordinate in [±(m+1)]; m+1 when n is even
  SignedPermutation tau;
  Subset T = 0;

  int m() const noexcept { return n / 2; }
  bool odd() const noexcept { return n % 2 == 1; }
  friend bool operator==(const WachsCodeB&, const WachsCodeB&) = default;
};

/// "(tau,T)" for even n, "(i,tau,T)" for odd n.
inline std::string format(const WachsCodeA& c) {
  std::string body = format(c.tau) + "," + format_subset(c.T);
  return "(" + (c.odd() ? std::to_string(c.i) + "," : std::string()) + body + ")";
}
inline std::string format(const WachsCodeB& c) {
  std::string body = format(c.tau) + "," + format_subset(c.T);
  return "(" + (c.odd() ? std::to_string(c.i) + "," : std::string()) + body + ")";
}

// ---------------------------------------------------------------------------
// Membership

/// The partner i* of i in [n-1]: odd i pairs with i+1, even i with i-1.
inline constexpr int star(int i) noexcept { return i % 2 == 0 ? i - 1 : i + 1; }

inline bool is_wachs(const Permutation& v) {
  for (int i = 1; i < v.size(); ++i)
    if (std::abs(v.position_of(i) - v.position_of(star(i))) > 1) return false;
  return true;
}

/// Positions are signed, so a pair split across the origin is never adjacent.
inline bool is_wachs(const SignedPermutation& v) {
  for (int i = 1; i < v.size(); ++i)
    if (std::abs(v.position_of(i) - v.position_of(star(i))) > 1) return false;
  return true;
}

namespace detail {

template <typename P>
void require_wachs(const P& v) {
  if (!is_wachs(v)) throw std::invalid_argument("not a Wachs permutation: " + format(v));
}

inline void require_subset(Subset T, int m) {
  if (!is_subset(T, full_subset(m)))
    throw std::invalid_argument("code subset " + format_subset(T) + " is not inside [" +
                                std::to_string(m) + "]");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Codes, type A

inline WachsCodeA encode(const Permutation& v) {
  detail::require_wachs(v);
  const int n = v.size(), m = n / 2;
  WachsCodeA c;
  c.n = n;
  c.i = m + 1;
  std::vector<int> w = v.word();
  if (n % 2 == 1) {
    int p = v.position_of(n);
    c.i = (p + 1) / 2;
    w.erase(w.begin() + (p - 1));
  }
  std::vector<int> tau(m);
  for (int k = 1; k <= m; ++k) {
    int a = w[2 * k - 2], b = w[2 * k - 1];
    tau[k - 1] = std::max(a, b) / 2;
    if (a > b) c.T |= singleton(k);
  }
  c.tau = Permutation(tau);
  return c;
}

inline Permutation decode(const WachsCodeA& c) {
  const int m = c.m();
  if (c.n < 1) throw std::invalid_argument("code size must be positive");
  if (c.tau.size() != m) throw std::invalid_argument("code permutation has the wrong size");
  detail::require_subset(c.T, m);
  if (c.odd() ? (c.i < 1 || c.i > m + 1) : c.i != m + 1)
    throw std::invalid_argument("code position " + std::to_string(c.i) + " out of range");
  std::vector<int> w;
  w.reserve(c.n);
  for (int k = 1; k <= m; ++k) {
    int hi = 2 * c.tau(k);
    if (contains(c.T, k)) {
      w.push_back(hi);
      w.push_back(hi - 1);
    } else {
      w.push_back(hi - 1);
      w.push_back(hi);
    }
  }
  if (c.odd()) w.insert(w.begin() + (2 * c.i - 2), c.n);
  return Permutation(w);
}

// ---------------------------------------------------------------------------
// Codes, type B

inline WachsCodeB encode(const SignedPermutation& v) {
  detail::require_wachs(v);
  const int n = v.size(), m = n / 2;
  WachsCodeB c;
  c.n = n;
  c.i = m + 1;
  std::vector<int> w = v.window();
  if (n % 2 == 1) {
    int j = v.position_of(n);
    c.i = (j + (j > 0 ? 1 : -1)) / 2;
    w.erase(w.begin() + (std::abs(j) - 1));
  }
  std::vector<int> tau(m);
  for (int k = 1; k <= m; ++k) {
    int a = w[2 * k - 2], b = w[2 * k - 1];
    // the entry of even absolute value is 2 tau(k)
    tau[k - 1] = (a % 2 == 0 ? a : b) / 2;
    if (a > b) c.T |= singleton(k);
  }
  c.tau = SignedPermutation(tau);
  return c;
}

inline SignedPermutation decode(const WachsCodeB& c) {
  const int m = c.m();
  if (c.n < 1) throw std::invalid_argument("code size must be positive");
  if (c.tau.size() != m) throw std::invalid_argument("code permutation has the wrong size");
  detail::require_subset(c.T, m);
  if (c.odd() ? (c.i == 0 || std::abs(c.i) > m + 1) : c.i != m + 1)
    throw std::invalid_argument("code position " + std::to_string(c.i) + " out of range");
  std::vector<int> w;
  w.reserve(c.n);
  for (int k = 1; k <= m; ++k) {
    int s = c.tau(k);
    int lo = 2 * s - (s > 0 ? 1 : 0), hi = 2 * s + (s < 0 ? 1 : 0);
    if (contains(c.T, k)) std::swap(lo, hi);
    w.push_back(lo);
    w.push_back(hi);
  }
  if (c.odd()) w.insert(w.begin() + (2 * std::abs(c.i) - 2), c.i > 0 ? c.n : -c.n);
  return SignedPermutation(w);
}

// ---------------------------------------------------------------------------
// Enumeration

/// Calls f on every code of size n (unsorted).
template <typename F>
void for_each_code_A(int n, F&& f) {
  const int m = n / 2;
  const int lo = n % 2 ? 1 : m + 1;
  for_each_permutation(m, [&](const Permutation& tau) {
    for (Subset T = 0; T <= full_subset(m); ++T)
      for (int i = lo; i <= m + 1; ++i) f(WachsCodeA{n, i, tau, T});
  });
}

template <typename F>
void for_each_code_B(int n, F&& f) {
  const int m = n / 2;
  for_each_signed_permutation(m, [&](const SignedPermutation& tau) {
    for (Subset T = 0; T <= full_subset(m); ++T) {
      if (n % 2 == 0) {
        f(WachsCodeB{n, m + 1, tau, T});
        continue;
      }
      for (int i = -(m + 1); i <= m + 1; ++i)
        if (i != 0) f(WachsCodeB{n, i, tau, T});
    }
  });
}

/// W(S_n), sorted lexicographically.
inline std::vector<Permutation> enumerate_wachs_A(int n) {
  if (n < 1 || n > kMaxSizeA)
    throw std::out_of_range("type A size must lie in [1," + std::to_string(kMaxSizeA) + "]");
  std::vector<Permutation> out;
  for_each_code_A(n, [&](const WachsCodeA& c) { out.push_back(decode(c)); });
  std::sort(out.begin(), out.end());
  return out;
}

/// W(B_n), sorted lexicographically on the window.
inline std::vector<SignedPermutation> enumerate_wachs_B(int n) {
  if (n < 1 || n > kMaxSizeB)
    throw std::out_of_range("type B size must lie in [1," + std::to_string(kMaxSizeB) + "]");
  std::vector<SignedPermutation> out;
  for_each_code_B(n, [&](const WachsCodeB& c) { out.push_back(decode(c)); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t factorial(int k) {
  std::size_t r = 1;
  for (int i = 2; i <= k; ++i) r *= static_cast<std::size_t>(i);
  return r;
}

/// |W(S_n)| or |W(B_n)| from the code bijections.
inline std::size_t wachs_count(Kind kind, int n) {
  const int m = n / 2;
  std::size_t base = factorial(m) << m;  // |S_m| 2^m
  if (kind == Kind::B) base <<= m;       // |B_m| 2^m
  if (n % 2 == 0) return base;
  return base * static_cast<std::size_t>(m + 1) * (kind == Kind::B ? 2 : 1);
}

// ---------------------------------------------------------------------------
// Projections and l_W

/// Deletes the value n from the one-line word.
inline Permutation chi_map(const Permutation& v) {
  detail::require_wachs(v);
  if (v.size() < 2) throw std::invalid_argument("chi_map needs n > 1");
  std::vector<int> w = v.word();
  w.erase(w.begin() + (v.position_of(v.size()) - 1));
  return Permutation(w);
}

inline Permutation f_map(const Permutation& v) { return encode(v).tau; }
inline SignedPermutation f_map(const SignedPermutation& v) { return encode(v).tau; }

/// l_W from its definition, l(v) - l(tau).
inline int rank_lW(const Permutation& v) { return length_A(v) - length_A(f_map(v)); }
inline int rank_lW(const SignedPermutation& v) { return length_B(v) - length_B(f_map(v)); }

/// l_W from the code.
inline int rank_lW(const WachsCodeA& c) {
  return 3 * length_A(c.tau) + cardinality(c.T) + 2 * (c.m() - c.i + 1);
}
inline int rank_lW(const WachsCodeB& c) {
  auto parts = length_B_parts(c.tau);
  return 3 * parts.total() + cardinality(c.T) - parts.neg + 2 * (c.m() - c.i + 1) -
         (c.i < 0 ? 3 : 0);
}

/// Rank of the induced Bruhat poset.
inline int wachs_rank(Kind kind, int n) {
  const int m = n / 2;
  if (kind == Kind::A) return n * (n - 1) / 2 - m * (m - 1) / 2;
  return n * n - m * m;
}

// ---------------------------------------------------------------------------
// Order and covers

namespace detail {

inline void require_same_shape(int a, int b) {
  if (a != b) throw std::invalid_argument("codes of different sizes");
}

/// {k in [m] : p(k) = q(k)}
template <typename P>
Subset agreement(const P& p, const P& q) {
  Subset f = 0;
  for (int k = 1; k <= p.size(); ++k)
    if (p(k) == q(k)) f |= singleton(k);
  return f;
}

/// Common fixed points k of p and q (p(k) = q(k)) that also see the same
/// number of larger entries to their left. For signed permutations the left
/// part of the complete notation, -p(1), ..., -p(n), is counted as well.
template <typename P>
Subset aligned_fixed_points(const P& p, const P& q) {
  constexpr bool is_signed = std::is_same_v<P, SignedPermutation>;
  auto larger_left = [](const P& w, int k) {
    int c = 0;
    for (int l = 1; l < k; ++l) c += w(l) > w(k);
    if constexpr (is_signed)
      for (int l = 1; l <= w.size(); ++l) c += -w(l) > w(k);
    return c;
  };
  Subset f = 0;
  for (int k = 1; k <= p.size(); ++k)
    if (p(k) == q(k) && larger_left(p, k) == larger_left(q, k)) f |= singleton(k);
  return f;
}

/// [lo-1] ∪ [hi, m]
inline Subset window_set(int lo, int hi, int m) {
  Subset below = lo >= 1 ? full_subset(lo - 1) : 0;
  Subset above = hi <= m ? full_subset(m) & ~full_subset(std::max(hi - 1, 0)) : 0;
  return below | above;
}

}  // namespace detail

/// u <= v for u = (i, sigma, S), v = (j, tau, T) in W(S_n): j <= i,
/// sigma <= tau, and S ∩ X ∩ F ⊆ T with X = [j-1] ∪ [i, m] and F the aligned
/// fixed points of sigma and tau.
inline bool wachs_leq(const WachsCodeA& u, const WachsCodeA& v) {
  detail::require_same_shape(u.n, v.n);
  if (v.i > u.i) return false;
  if (!bruhat_leq_A(u.tau, v.tau)) return false;
  Subset x = detail::window_set(v.i, u.i, u.m());
  return is_subset(u.T & x & detail::aligned_fixed_points(u.tau, v.tau), v.T);
}

/// u <= v in W(B_n). The window is [min(|i|,|j|)-1] ∪ [max(|i|,|j|), m], and
/// loses its lower part when i and j have opposite signs.
inline bool wachs_leq(const WachsCodeB& u, const WachsCodeB& v) {
  detail::require_same_shape(u.n, v.n);
  if (v.i > u.i) return false;
  if (!bruhat_leq_B(u.tau, v.tau)) return false;
  int a = std::abs(u.i), b = std::abs(v.i);
  int lo = (u.i > 0) == (v.i > 0) ? std::min(a, b) : 1;
  Subset x = detail::window_set(lo, std::max(a, b), u.m());
  return is_subset(u.T & x & detail::aligned_fixed_points(u.tau, v.tau), v.T);
}

inline bool wachs_leq(const Permutation& u, const Permutation& v) {
  return wachs_leq(encode(u), encode(v));
}
inline bool wachs_leq(const SignedPermutation& u, const SignedPermutation& v) {
  return wachs_leq(encode(u), encode(v));
}

namespace detail {

template <typename Code, typename CoversFn>
std::vector<Code> covers_common(const Code& v, CoversFn&& tau_covers) {
  std::vector<Code> out;
  for (int k : members(v.T)) out.push_back(Code{v.n, v.i, v.tau, v.T & ~singleton(k)});
  for (const auto& sigma : tau_covers(v.tau)) {
    Subset d = ~agreement(sigma, v.tau) & full_subset(v.m());
    if (d & v.T) continue;
    out.push_back(Code{v.n, v.i, sigma, v.T | d});
  }
  return out;
}

}  // namespace detail

/// Codes of the elements covered by v in (W(S_n), <=).
inline std::vector<WachsCodeA> wachs_covers(const WachsCodeA& v) {
  auto out = detail::covers_common(v, [](const Permutation& t) { return covers_A(t); });
  const int j = v.i;
  if (v.odd() && j <= v.m() && !contains(v.T, j))
    out.push_back(WachsCodeA{v.n, j + 1, v.tau, v.T | singleton(j)});
  return out;
}

/// Codes of the elements covered by v in (W(B_n), <=).
inline std::vector<WachsCodeB> wachs_covers(const WachsCodeB& v) {
  auto out = detail::covers_common(v, [](const SignedPermutation& t) { return covers_B(t); });
  const int j = v.i;
  if (v.odd() && j != v.m() + 1) {
    if (j == -1) {
      out.push_back(WachsCodeB{v.n, 1, v.tau, v.T});
    } else {
      int k = std::abs(j + (j < 0 ? 1 : 0));
      if (!contains(v.T, k)) out.push_back(WachsCodeB{v.n, j + 1, v.tau, v.T | singleton(k)});
    }
  }
  return out;
}

/// Elements covered by v, sorted.
inline std::vector<Permutation> wachs_covers(const Permutation& v) {
  std::vector<Permutation> out;
  for (const auto& c : wachs_covers(encode(v))) out.push_back(decode(c));
  std::sort(out.begin(), out.end());
  return out;
}
inline std::vector<SignedPermutation> wachs_covers(const SignedPermutation& v) {
  std::vector<SignedPermutation> out;
  for (const auto& c : wachs_covers(encode(v))) out.push_back(decode(c));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Involutions

/// (i, tau (a,b), T + {a,b}) for 1 <= a < b <= m.
inline WachsCodeA involution_wA(const WachsCodeA& v, int a, int b) {
  if (a < 1 || a >= b || b > v.m())
    throw std::invalid_argument("involution needs 1 <= i < j <= m");
  return WachsCodeA{v.n, v.i, v.tau.swap_positions(a, b), v.T ^ singleton(a) ^ singleton(b)};
}

/// (i, tau (a,b)_B, T + {a,|b|}) for a in [m], b in [±m], a != b.
inline WachsCodeB involution_wB(const WachsCodeB& v, int a, int b) {
  const int m = v.m();
  if (a < 1 || a > m || b == 0 || std::abs(b) > m || a == b)
    throw std::invalid_argument("involution needs i in [m], j in [±m], i != j");
  SignedPermutation t = std::abs(b) == a ? v.tau.negate_position(a) : v.tau.swap_positions(a, b);
  Subset flip = std::abs(b) == a ? singleton(a) : singleton(a) ^ singleton(std::abs(b));
  return WachsCodeB{v.n, v.i, t, v.T ^ flip};
}

inline Permutation involution_wA(const Permutation& v, int a, int b) {
  return decode(involution_wA(encode(v), a, b));
}
inline SignedPermutation involution_wB(const SignedPermutation& v, int a, int b) {
  return decode(involution_wB(encode(v), a, b));
}

// ---------------------------------------------------------------------------
// Coatom map, Möbius values, closed polynomials

/// The coatom c(v) of v in W(B_{2m+1}) that moves 2m+1. Undefined (nullopt)
/// when 2m+1 is fixed in the last position.
inline std::optional<SignedPermutation> coatom_c(const SignedPermutation& v) {
  if (v.size() % 2 == 0) throw std::invalid_argument("coatom_c needs odd n");
  detail::require_wachs(v);
  const int n = v.size();
  const int j = v.position_of(n);
  if (j == n) return std::nullopt;
  if (j == -1) return v.negate_position(1);
  if (v(j + 1) > v(j + 2)) return v.swap_positions(j + 1, j + 2);
  return v.swap_positions(j, j + 2);
}

/// (-1)^{|T|} when tau = e and i = m+1, else 0.
template <typename Code>
int mobius_closed(const Code& c) {
  if (!c.tau.is_identity() || c.i != c.m() + 1) return 0;
  return cardinality(c.T) % 2 == 0 ? 1 : -1;
}

struct ClosedPolys {
  IntPolynomial rank_gen;
  IntPolynomial charpoly;
  int rank = 0;
};

/// Closed-form rank-generating and characteristic polynomials and the rank.
inline ClosedPolys closed_polys(Kind kind, int n) {
  if (n < 1) throw std::invalid_argument("closed_polys needs n >= 1");
  const int m = n / 2;
  const IntPolynomial one_plus_x{1, 1};
  IntPolynomial g = one_plus_x.pow(m) * substitute_power(q_factorial(m), 3);
  if (kind == Kind::B)
    for (int i = 1; i <= m; ++i) g *= IntPolynomial{1} + IntPolynomial::monomial(3 * i - 1);
  if (n % 2 == 1) {
    g *= substitute_power(q_int(m + 1), 2);
    if (kind == Kind::B) g *= IntPolynomial{1} + IntPolynomial::monomial(2 * m + 1);
  }
  ClosedPolys r;
  r.rank_gen = std::move(g);
  r.rank = wachs_rank(kind, n);
  int shift = kind == Kind::A ? n * (n - 1) / 2 - m * (m + 1) / 2 : n * n - m * m - m;
  r.charpoly = IntPolynomial{-1, 1}.pow(m) * IntPolynomial::monomial(shift);
  return r;
}

// ---------------------------------------------------------------------------
// Statistics and subgroups

/// Compares the distributions of l_W and 3 emaj + odes over W(S_n), n even.
inline bool stats_distribution_check(int n) {
  if (n % 2 != 0) throw std::invalid_argument("stats_distribution_check needs even n");
  IntPolynomial lhs, rhs;
  for (const auto& v : enumerate_wachs_A(n)) {
    lhs.add_term(rank_lW(v), 1);
    auto s = stats_A(v);
    rhs.add_term(3 * s.emaj + s.odes, 1);
  }
  return lhs == rhs;
}

/// {w in S_n : w I w^{-1} = I} for I the odd simple transpositions, sorted.
inline std::vector<Permutation> stabilizer_GI(int n) {
  if (n % 2 != 0) throw std::invalid_argument("stabilizer_GI needs even n");
  std::vector<Permutation> gens;
  for (int k = 1; k < n; k += 2) gens.push_back(Permutation::identity(n).swap_positions(k, k + 1));
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) {
    const Permutation wi = w.inverse();
    for (const auto& s : gens)
      if (std::find(gens.begin(), gens.end(), w * s * wi) == gens.end()) return;
    out.push_back(w);
  });
  return out;
}

/// S_n^J = {sigma : sigma(i) < sigma(i+1) for all i in J}, J a subset of [n-1].
inline std::vector<Permutation> descent_class(int n, Subset J) {
  if (!is_subset(J, full_subset(std::max(n - 1, 0))))
    throw std::invalid_argument("J must be a subset of [n-1]");
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    for (int i : members(J))
      if (p(i) > p(i + 1)) return;
    out.push_back(p);
  });
  return out;
}

}  // namespace wachs
