#pragma once

// Bruhat order on S_n and B_n.

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "wachs/perm.hpp"

namespace wachs {

/// p <= q in the Bruhat order of S_n.
///
/// Tableau criterion restricted to the descents of p: for every k in D(p)
/// the increasing rearrangement of p(1..k) is componentwise <= that of q(1..k).
inline bool bruhat_leq_A(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("size mismatch in Bruhat comparison");
  const int n = p.size();
  std::array<int, Permutation::kCapacity> ps{}, qs{};
  for (int k = 1; k < n; ++k) {
    // insertion into the sorted prefix buffers
    int a = p(k), b = q(k);
    int i = k - 1;
    while (i > 0 && ps[i - 1] > a) {
      ps[i] = ps[i - 1];
      --i;
    }
    ps[i] = a;
    i = k - 1;
    while (i > 0 && qs[i - 1] > b) {
      qs[i] = qs[i - 1];
      --i;
    }
    qs[i] = b;
    if (p(k) > p(k + 1)) {
      for (int l = 0; l < k; ++l)
        if (ps[l] > qs[l]) return false;
    }
  }
  return true;
}

/// u <= v in the Bruhat order of B_n, decided in S_{2n} through embed_tilde.
inline bool bruhat_leq_B(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("size mismatch in Bruhat comparison");
  return bruhat_leq_A(embed_tilde(u), embed_tilde(v));
}

inline bool bruhat_leq(const Permutation& u, const Permutation& v) { return bruhat_leq_A(u, v); }
inline bool bruhat_leq(const SignedPermutation& u, const SignedPermutation& v) {
  return bruhat_leq_B(u, v);
}

/// All q with q covered by p, in lexicographic order.
inline std::vector<Permutation> covers_A(const Permutation& p) {
  std::vector<Permutation> out;
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (p(i) < p(j)) continue;
      bool free = true;
      for (int k = i + 1; k < j && free; ++k)
        if (p(j) < p(k) && p(k) < p(i)) free = false;
      if (free) out.push_back(p.swap_positions(i, j));
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// (i,j) with i < j in [±n] is a rise of u with no u(k), i<k<j, strictly between.
inline bool is_free_rise(const SignedPermutation& u, int i, int j) {
  if (u(i) >= u(j)) return false;
  for (int k = i + 1; k < j; ++k) {
    if (k == 0) continue;
    if (u(i) < u(k) && u(k) < u(j)) return false;
  }
  return true;
}

}  // namespace detail

/// All u covered by v in the Bruhat order of B_n, in lexicographic order.
///
/// u is covered by v iff v = u(i,j)(-i,-j) for a non-central free rise (i,j)
/// of u, or v = u(-j,j) for a (necessarily central) symmetric free rise.
inline std::vector<SignedPermutation> covers_B(const SignedPermutation& v) {
  std::set<SignedPermutation> found;
  const int n = v.size();
  for (int i = -n; i <= n; ++i) {
    if (i == 0) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (j == 0) continue;
      if (i == -j) {
        SignedPermutation u = v.negate_position(j);
        if (detail::is_free_rise(u, i, j)) found.insert(u);
        continue;
      }
      SignedPermutation u = v.swap_positions(i, j);
      if (!detail::is_free_rise(u, i, j)) continue;
      const bool central = i < 0 && j > 0 && u(i) < 0 && u(j) > 0;
      if (!central) found.insert(u);
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace wachs
