#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "refl/exact/scalar.hpp"

namespace refl {

template <class S>
class Poly;
template <class S>
bool is_zero(const Poly<S>& p);

/// Dense univariate polynomial with coefficients in S, lowest degree first.
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and equality is structural.
template <class S>
class Poly {
 public:
  Poly() = default;
  Poly(S c) { if (!refl::is_zero(c)) c_.push_back(std::move(c)); }  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Poly(T c) : Poly(S(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  /// c * x^k.
  static Poly monomial(S c, int k) {
    if (refl::is_zero(c)) return {};
    std::vector<S> v(static_cast<std::size_t>(k) + 1, S(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(S(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : S(0);
  }
  const S& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  /// Order of vanishing at 0; throws for the zero polynomial.
  int valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!refl::is_zero(c_[k])) return static_cast<int>(k);
    throw std::domain_error("valuation of zero polynomial");
  }

  S eval(const S& at) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// p(x^k).
  Poly compose_power(int k) const {
    if (k < 1) throw std::invalid_argument("compose_power needs k >= 1");
    if (c_.empty()) return {};
    std::vector<S> v(static_cast<std::size_t>(degree() * k) + 1, S(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(k)] = c_[i];
    return Poly(std::move(v));
  }

  /// x^deg * p(1/x) with deg = degree().
  Poly reversed() const {
    std::vector<S> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
  }

  /// Truncation to terms of degree < k.
  Poly truncated(int k) const {
    if (k <= 0) return {};
    std::vector<S> v(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(k, static_cast<std::ptrdiff_t>(c_.size())));
    return Poly(std::move(v));
  }

  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Poly<T>(std::move(v));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<S> v(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (refl::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        if (!refl::is_zero(b.c_[j])) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const S& s, Poly p) {
    if (refl::is_zero(s)) return {};
    for (auto& c : p.c_) c = s * c;
    p.trim();
    return p;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Quotient and remainder. Every leading-coefficient division must be exact
  /// in S; over a field this is ordinary long division.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly r = a;
    if (r.degree() < b.degree()) return {Poly{}, r};
    std::vector<S> q(static_cast<std::size_t>(r.degree() - b.degree()) + 1, S(0));
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
      const int shift = r.degree() - db;
      const S f = exact_quotient(r.leading(), b.leading());
      q[static_cast<std::size_t>(shift)] = f;
      for (int j = 0; j <= db; ++j) {
        const auto& bj = b.c_[static_cast<std::size_t>(j)];
        if (!refl::is_zero(bj)) r.c_[static_cast<std::size_t>(j + shift)] -= f * bj;
      }
      r.trim();
    }
    return {Poly(std::move(q)), std::move(r)};
  }

  /// a / b, throwing std::domain_error unless b divides a.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
  }

  /// Monic greatest common divisor (coefficients in a field).
  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    const S inv = exact_quotient(S(1), leading());
    return inv * *this;
  }

  std::string to_string(const std::string& var = "x") const {
    std::vector<detail::Term> terms;
    for (int k = degree(); k >= 0; --k) {
      const auto& c = c_[static_cast<std::size_t>(k)];
      if (!refl::is_zero(c)) detail::collect_terms(c, {}, 0, detail::power_text(var, k), terms);
    }
    return detail::render_terms(terms);
  }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!c_.empty() && refl::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

template <class S>
bool is_zero(const Poly<S>& p) { return p.is_zero(); }

/// (x^d - 1) / (x - 1) = 1 + x + ... + x^(d-1).
template <class S>
Poly<S> q_integer(int d) {
  return Poly<S>(std::vector<S>(static_cast<std::size_t>(d), S(1)));
}

}  // namespace refl
