#pragma once

// Permutations of [n] and signed permutations of [±n].
//
// Storage is 0-indexed; every public accessor is 1-indexed, so p(k) is the
// value in position k of the one-line (or window) notation.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wachs {

/// Largest n accepted for type A input.
inline constexpr int kMaxSizeA = 16;
/// Largest n accepted for type B input.
inline constexpr int kMaxSizeB = 12;

/// A subset of [m] stored as a bitmask: bit k-1 is set iff k is a member.
using Subset = std::uint32_t;

inline constexpr bool contains(Subset s, int k) noexcept { return (s >> (k - 1)) & 1U; }
inline constexpr Subset singleton(int k) noexcept { return Subset{1} << (k - 1); }
inline constexpr Subset full_subset(int m) noexcept {
  return m >= 32 ? ~Subset{0} : (Subset{1} << m) - 1;
}
inline int cardinality(Subset s) noexcept { return __builtin_popcount(s); }
inline constexpr bool is_subset(Subset a, Subset b) noexcept { return (a & ~b) == 0; }

/// Ascending member list, for printing.
inline std::vector<int> members(Subset s) {
  std::vector<int> out;
  for (int k = 1; s != 0; ++k, s >>= 1)
    if (s & 1U) out.push_back(k);
  return out;
}

/// "{1,3}" style rendering.
inline std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int k : members(s)) {
    if (!first) out += ',';
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

/// An element of S_n in one-line notation.
///
/// The capacity (32) exceeds kMaxSizeA so that the image of the B_n -> S_{2n}
/// embedding fits; user-facing parsing enforces kMaxSizeA.
class Permutation {
 public:
  static constexpr int kCapacity = 32;

  Permutation() = default;

  explicit Permutation(std::span<const int> word) : n_(static_cast<std::uint8_t>(word.size())) {
    if (word.size() > static_cast<std::size_t>(kCapacity))
      throw std::invalid_argument("permutation too large: " + std::to_string(word.size()));
    std::array<bool, kCapacity + 1> seen{};
    for (std::size_t k = 0; k < word.size(); ++k) {
      int v = word[k];
      if (v < 1 || v > static_cast<int>(word.size()))
        throw std::invalid_argument("value " + std::to_string(v) + " out of range [1," +
                                    std::to_string(word.size()) + "]");
      if (seen[v]) throw std::invalid_argument("duplicate value " + std::to_string(v));
      seen[v] = true;
      data_[k] = static_cast<std::int8_t>(v);
    }
  }

  Permutation(std::initializer_list<int> word)
      : Permutation(std::span<const int>(word.begin(), word.size())) {}

  static Permutation identity(int n) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = k + 1;
    return Permutation(w);
  }

  /// n ... 3 2 1
  static Permutation longest(int n) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = n - k;
    return Permutation(w);
  }

  int size() const noexcept { return n_; }

  /// Value at position k, 1 <= k <= n.
  int operator()(int k) const noexcept { return data_[k - 1]; }

  /// Position of value v (the inverse map).
  int position_of(int v) const noexcept {
    for (int k = 0; k < n_; ++k)
      if (data_[k] == v) return k + 1;
    return 0;
  }

  std::vector<int> word() const { return {data_.begin(), data_.begin() + n_}; }

  bool is_identity() const noexcept {
    for (int k = 0; k < n_; ++k)
      if (data_[k] != k + 1) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r = *this;
    for (int k = 0; k < n_; ++k) r.data_[data_[k] - 1] = static_cast<std::int8_t>(k + 1);
    return r;
  }

  /// p * q is the composition p∘q, i.e. (p∘q)(k) = p(q(k)).
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.n_ != q.n_) throw std::invalid_argument("size mismatch in composition");
    Permutation r = p;
    for (int k = 0; k < p.n_; ++k) r.data_[k] = p.data_[q.data_[k] - 1];
    return r;
  }

  /// Right multiplication by the transposition (i,j): swaps positions i and j.
  Permutation swap_positions(int i, int j) const {
    Permutation r = *this;
    std::swap(r.data_[i - 1], r.data_[j - 1]);
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (int k = 0; k < a.n_; ++k)
      if (auto c = a.data_[k] <=> b.data_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::int8_t, kCapacity> data_{};
  std::uint8_t n_ = 0;
};

/// An element of B_n in window notation [w(1),...,w(n)]; w(-k) = -w(k).
class SignedPermutation {
 public:
  static constexpr int kCapacity = 16;

  SignedPermutation() = default;

  explicit SignedPermutation(std::span<const int> window)
      : n_(static_cast<std::uint8_t>(window.size())) {
    if (window.size() > static_cast<std::size_t>(kCapacity))
      throw std::invalid_argument("signed permutation too large: " +
                                  std::to_string(window.size()));
    std::array<bool, kCapacity + 1> seen{};
    for (std::size_t k = 0; k < window.size(); ++k) {
      int v = window[k];
      int a = std::abs(v);
      if (a < 1 || a > static_cast<int>(window.size()))
        throw std::invalid_argument("value " + std::to_string(v) + " out of range [±" +
                                    std::to_string(window.size()) + "]");
      if (seen[a]) throw std::invalid_argument("duplicate absolute value " + std::to_string(a));
      seen[a] = true;
      data_[k] = static_cast<std::int8_t>(v);
    }
  }

  SignedPermutation(std::initializer_list<int> window)
      : SignedPermutation(std::span<const int>(window.begin(), window.size())) {}

  static SignedPermutation identity(int n) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = k + 1;
    return SignedPermutation(w);
  }

  /// [-1,-2,...,-n]
  static SignedPermutation longest(int n) {
    std::vector<int> w(n);
    for (int k = 0; k < n; ++k) w[k] = -(k + 1);
    return SignedPermutation(w);
  }

  int size() const noexcept { return n_; }

  /// w(k) for k in [±n]; w(0) = 0.
  int operator()(int k) const noexcept {
    if (k > 0) return data_[k - 1];
    if (k < 0) return -data_[-k - 1];
    return 0;
  }

  /// The signed position k with w(k) = v, for v in [±n].
  int position_of(int v) const noexcept {
    for (int k = 0; k < n_; ++k) {
      if (data_[k] == v) return k + 1;
      if (data_[k] == -v) return -(k + 1);
    }
    return 0;
  }

  std::vector<int> window() const { return {data_.begin(), data_.begin() + n_}; }

  bool is_identity() const noexcept {
    for (int k = 0; k < n_; ++k)
      if (data_[k] != k + 1) return false;
    return true;
  }

  SignedPermutation inverse() const {
    SignedPermutation r = *this;
    for (int k = 0; k < n_; ++k) {
      int v = data_[k];
      r.data_[std::abs(v) - 1] = static_cast<std::int8_t>(v > 0 ? k + 1 : -(k + 1));
    }
    return r;
  }

  friend SignedPermutation operator*(const SignedPermutation& p, const SignedPermutation& q) {
    if (p.n_ != q.n_) throw std::invalid_argument("size mismatch in composition");
    SignedPermutation r = p;
    for (int k = 0; k < p.n_; ++k) r.data_[k] = static_cast<std::int8_t>(p(q.data_[k]));
    return r;
  }

  /// Right multiplication by (a,b)(-a,-b) for a, b in [±n], |a| != |b|:
  /// exchanges the entries at signed positions a and b.
  SignedPermutation swap_positions(int a, int b) const {
    SignedPermutation r = *this;
    int va = (*this)(a), vb = (*this)(b);
    r.set(a, vb);
    r.set(b, va);
    return r;
  }

  /// Right multiplication by (a,-a): negates the entry at position |a|.
  SignedPermutation negate_position(int a) const {
    SignedPermutation r = *this;
    int k = std::abs(a);
    r.data_[k - 1] = static_cast<std::int8_t>(-data_[k - 1]);
    return r;
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend std::strong_ordering operator<=>(const SignedPermutation& a,
                                          const SignedPermutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (int k = 0; k < a.n_; ++k)
      if (auto c = a.data_[k] <=> b.data_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  void set(int k, int v) {
    if (k > 0)
      data_[k - 1] = static_cast<std::int8_t>(v);
    else
      data_[-k - 1] = static_cast<std::int8_t>(-v);
  }

  std::array<std::int8_t, kCapacity> data_{};
  std::uint8_t n_ = 0;
};

// ---------------------------------------------------------------------------
// Type A statistics

inline int length_A(const Permutation& p) noexcept {
  int inv = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) ++inv;
  return inv;
}

/// D(p) = {i in [n-1] : p(i) > p(i+1)}, ascending.
inline std::vector<int> descent_set_A(const Permutation& p) {
  std::vector<int> d;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) d.push_back(i);
  return d;
}

struct StatRecord {
  int des = 0;
  int maj = 0;
  int odes = 0;   ///< number of odd descents
  int emaj = 0;   ///< sum of i/2 over even descents i
  int pos = 0;    ///< position of the value n

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

inline StatRecord stats_A(const Permutation& p) {
  StatRecord s;
  for (int i : descent_set_A(p)) {
    ++s.des;
    s.maj += i;
    if (i % 2 == 1)
      ++s.odes;
    else
      s.emaj += i / 2;
  }
  s.pos = p.position_of(p.size());
  return s;
}

// ---------------------------------------------------------------------------
// Type B statistics

struct LengthB {
  int inv = 0;
  int neg = 0;
  int nsp = 0;
  int total() const noexcept { return inv + neg + nsp; }
  friend bool operator==(const LengthB&, const LengthB&) = default;
};

inline LengthB length_B_parts(const SignedPermutation& w) noexcept {
  LengthB r;
  const int n = w.size();
  for (int i = 1; i <= n; ++i) {
    if (w(i) < 0) ++r.neg;
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) ++r.inv;
      if (w(i) + w(j) < 0) ++r.nsp;
    }
  }
  return r;
}

inline int length_B(const SignedPermutation& w) noexcept { return length_B_parts(w).total(); }

inline int neg(const SignedPermutation& w) noexcept { return length_B_parts(w).neg; }

/// D(w) = {i in [0,n-1] : w(i) > w(i+1)} with w(0) = 0.
inline std::vector<int> descent_set_B(const SignedPermutation& w) {
  std::vector<int> d;
  for (int i = 0; i < w.size(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

/// Order-isomorphic relabeling of [±n] onto [2n]: -n..-1 -> 1..n, 1..n -> n+1..2n.
inline constexpr int embed_index(int k, int n) noexcept { return k < 0 ? k + n + 1 : k + n; }

/// The image of w under B_n -> S_{±n}, relabeled onto S_{2n} by embed_index.
inline Permutation embed_tilde(const SignedPermutation& w) {
  const int n = w.size();
  std::vector<int> word(2 * n);
  for (int k = -n; k <= n; ++k) {
    if (k == 0) continue;
    word[embed_index(k, n) - 1] = embed_index(w(k), n);
  }
  return Permutation(word);
}

/// The reflection (i,j)_B of B_n: (i,j)(-i,-j) if i != |j|, else (i,-i).
inline SignedPermutation signed_reflection(int i, int j, int n) {
  if (i < 1 || i > n || j == 0 || std::abs(j) > n)
    throw std::invalid_argument("reflection indices out of range");
  if (i == j) throw std::invalid_argument("reflection requires i != j");
  auto e = SignedPermutation::identity(n);
  if (std::abs(j) == i) return e.negate_position(i);
  return e.swap_positions(i, j);
}

// ---------------------------------------------------------------------------
// Text forms

/// Compact digits for n <= 9 ("3412"), comma separated otherwise ("3,4,1,2,...").
inline std::string format(const Permutation& p) {
  std::string out;
  const bool compact = p.size() <= 9;
  for (int k = 1; k <= p.size(); ++k) {
    if (!compact && k > 1) out += ',';
    out += std::to_string(p(k));
  }
  return out;
}

/// Bracketed window, e.g. "[-2,1,4,3]".
inline std::string format(const SignedPermutation& w) {
  std::string out = "[";
  for (int k = 1; k <= w.size(); ++k) {
    if (k > 1) out += ',';
    out += std::to_string(w(k));
  }
  return out + "]";
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  while (true) {
    auto comma = s.find(',');
    auto tok = trim(s.substr(0, comma));
    if (tok.empty()) throw std::invalid_argument("empty entry in permutation text");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(std::string(tok), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + std::string(tok) + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("not an integer: '" + std::string(tok) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Parses "3412" or "3,4,1,2". Rejects non-bijections, naming the duplicate.
inline Permutation parse_permutation(std::string_view text) {
  auto s = detail::trim(text);
  if (s.empty()) throw std::invalid_argument("empty permutation text");
  std::vector<int> word;
  if (s.find(',') != std::string_view::npos) {
    word = detail::parse_int_list(s);
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw std::invalid_argument(std::string("unexpected character '") + c +
                                    "' in permutation text");
      word.push_back(c - '0');
    }
  }
  if (static_cast<int>(word.size()) > kMaxSizeA)
    throw std::invalid_argument("n = " + std::to_string(word.size()) + " exceeds type A cap " +
                                std::to_string(kMaxSizeA));
  return Permutation(word);
}

/// Parses "[-2,1,4,3]". Rejects repeated absolute values, naming the duplicate.
inline SignedPermutation parse_signed(std::string_view text) {
  auto s = detail::trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("signed permutation must be bracketed: '" + std::string(s) + "'");
  s = s.substr(1, s.size() - 2);
  auto window = detail::parse_int_list(s);
  if (static_cast<int>(window.size()) > kMaxSizeB)
    throw std::invalid_argument("n = " + std::to_string(window.size()) + " exceeds type B cap " +
                                std::to_string(kMaxSizeB));
  return SignedPermutation(window);
}

// ---------------------------------------------------------------------------
// Exhaustive iteration

/// Calls f(p) for every p in S_n, lexicographically.
template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = k + 1;
  do {
    f(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

/// Calls f(w) for every w in B_n (unsorted).
template <typename F>
void for_each_signed_permutation(int n, F&& f) {
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = k + 1;
  do {
    for (std::uint32_t signs = 0; signs < (1U << n); ++signs) {
      std::vector<int> s = w;
      for (int k = 0; k < n; ++k)
        if ((signs >> k) & 1U) s[k] = -s[k];
      f(SignedPermutation(s));
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace wachs
