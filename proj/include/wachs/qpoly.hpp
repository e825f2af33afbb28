#pragma once

// Dense integer polynomials with arbitrary-precision coefficients, and the
// q-integers / q-factorials the rank-generating functions are built from.

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wachs {

using BigInt = boost::multiprecision::cpp_int;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static IntPolynomial constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }
  /// c * x^k
  static IntPolynomial monomial(int k, const BigInt& c = 1) {
    std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int k) const { return k >= 0 && k <= degree() ? coeffs_[k] : BigInt(0); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  /// Adds c to the coefficient of x^k.
  void add_term(int k, const BigInt& c) {
    if (k > degree()) coeffs_.resize(static_cast<std::size_t>(k) + 1);
    coeffs_[k] += c;
    normalize();
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r[k] += b.coeffs_[k];
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<BigInt> r = a.coeffs_;
    for (auto& c : r) c = -c;
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(r));
  }
  IntPolynomial& operator+=(const IntPolynomial& b) { return *this = *this + b; }
  IntPolynomial& operator*=(const IntPolynomial& b) { return *this = *this * b; }

  IntPolynomial pow(int e) const {
    IntPolynomial r{1};
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  BigInt evaluate(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// [n]_q = 1 + q + ... + q^{n-1}
inline IntPolynomial q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int requires n >= 0");
  return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

/// [n]_q! = [1]_q [2]_q ... [n]_q
inline IntPolynomial q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial requires n >= 0");
  IntPolynomial r{1};
  for (int i = 1; i <= n; ++i) r *= q_int(i);
  return r;
}

/// Maps sum a_i q^i to sum a_i q^{k i}.
inline IntPolynomial substitute_power(const IntPolynomial& p, int k) {
  if (k < 1) throw std::invalid_argument("substitute_power requires k >= 1");
  if (p.is_zero()) return p;
  std::vector<BigInt> r(static_cast<std::size_t>(p.degree()) * k + 1);
  for (int i = 0; i <= p.degree(); ++i) r[static_cast<std::size_t>(i) * k] = p.coeff(i);
  return IntPolynomial(std::move(r));
}

/// Palindromic coefficients: x^deg p(1/x) = p(x).
inline bool reciprocal_check(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

/// Ascending display form, e.g. "1 + 2*x + x^3", "-1 + x", "0".
inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    BigInt c = p.coeff(k);
    if (c == 0) continue;
    bool negative = c < 0;
    BigInt a = negative ? BigInt(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0) {
      out += a.str();
      continue;
    }
    if (a != 1) out += a.str() + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
  return os << to_string(p);
}

/// Inverse of to_string; also accepts unordered terms and repeated degrees.
inline IntPolynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  IntPolynomial r;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      fail("expected '+' or '-'");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    BigInt coeff = 1;
    bool has_coeff = i > start;
    if (has_coeff) coeff = BigInt(s.substr(start, i - start));
    int degree = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'x')) {
      if (s[i] == '*') {
        if (!has_coeff) fail("'*' without coefficient");
        ++i;
      }
      if (i >= s.size() || s[i] != 'x') fail("expected 'x'");
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es) fail("missing exponent");
        degree = std::stoi(s.substr(es, i - es));
      }
    } else if (!has_coeff) {
      fail("empty term");
    }
    r.add_term(degree, negative ? BigInt(-coeff) : coeff);
  }
  return r;
}

}  // namespace wachs
