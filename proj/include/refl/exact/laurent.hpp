#pragma once

#include <concepts>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "refl/exact/poly.hpp"
#include "refl/exact/scalar.hpp"

namespace refl {

template <class S>
class LaurentPoly;
template <class S>
bool is_zero(const LaurentPoly<S>& p);

/// Laurent polynomial sum c_k x^k, k in Z, stored sparsely without zero
/// coefficients. S may itself be a LaurentPoly, giving several variables;
/// the outermost level is the first variable name when printing.
template <class S>
class LaurentPoly {
 public:
  using Map = std::map<int, S>;

  LaurentPoly() = default;
  LaurentPoly(S c) { add_term(0, std::move(c)); }  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  LaurentPoly(T c) : LaurentPoly(S(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(S c, int k) {
    LaurentPoly p;
    p.add_term(k, std::move(c));
    return p;
  }
  static LaurentPoly var(int k = 1) { return monomial(S(1), k); }

  static LaurentPoly from_poly(const Poly<S>& p) {
    LaurentPoly r;
    for (int k = 0; k <= p.degree(); ++k) r.add_term(k, p.coeff(k));
    return r;
  }

  bool is_zero() const { return t_.empty(); }
  const Map& terms() const { return t_; }
  S coeff(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? S(0) : it->second;
  }
  int min_exp() const {
    if (t_.empty()) throw std::domain_error("exponent range of zero Laurent polynomial");
    return t_.begin()->first;
  }
  int max_exp() const {
    if (t_.empty()) throw std::domain_error("exponent range of zero Laurent polynomial");
    return t_.rbegin()->first;
  }

  void add_term(int k, S c) {
    if (refl::is_zero(c)) return;
    auto [it, inserted] = t_.try_emplace(k, std::move(c));
    if (!inserted) {
      it->second += c;
      if (refl::is_zero(it->second)) t_.erase(it);
    }
  }

  /// Multiplication by x^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e + k, c);
    return r;
  }

  /// Coefficients as an ordinary polynomial; all exponents must be >= 0.
  Poly<S> to_poly() const {
    if (t_.empty()) return {};
    if (min_exp() < 0) throw std::domain_error("Laurent polynomial has negative exponents");
    std::vector<S> v(static_cast<std::size_t>(max_exp()) + 1, S(0));
    for (const auto& [e, c] : t_) v[static_cast<std::size_t>(e)] = c;
    return Poly<S>(std::move(v));
  }

  /// x -> x^k for nonzero k.
  LaurentPoly compose_power(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.add_term(e * k, c);
    return r;
  }

  /// True if every exponent is divisible by k.
  bool exponents_divisible_by(int k) const {
    for (const auto& [e, c] : t_)
      if (e % k != 0) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    LaurentPoly<T> r;
    for (const auto& [e, c] : t_) r.add_term(e, f(c));
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  friend LaurentPoly pow(const LaurentPoly& a, unsigned k) {
    LaurentPoly r(S(1));
    for (unsigned i = 0; i < k; ++i) r *= a;
    return r;
  }

  /// a / b, throwing std::domain_error unless the quotient is a Laurent
  /// polynomial.
  friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("Laurent division by zero");
    if (a.is_zero()) return {};
    const int sa = a.min_exp();
    const int sb = b.min_exp();
    Poly<S> q = exact_div(a.shifted(-sa).to_poly(), b.shifted(-sb).to_poly());
    return from_poly(q).shifted(sa - sb);
  }

  std::string to_string(const std::vector<std::string>& vars) const {
    std::vector<detail::Term> terms;
    collect_terms(*this, vars, 0, "", terms);
    return detail::render_terms(terms);
  }
  /// Nested levels below the first are printed as y, z, w.
  std::string to_string(const char* var = "x") const { return to_string(std::vector<std::string>{var, "y", "z", "w"}); }
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

 private:
  Map t_;
};

template <class S>
bool is_zero(const LaurentPoly<S>& p) { return p.is_zero(); }

template <class S>
void collect_terms(const LaurentPoly<S>& p, const std::vector<std::string>& vars, std::size_t level,
                   const std::string& suffix, std::vector<detail::Term>& out) {
  if (level >= vars.size()) throw std::invalid_argument("missing variable name for Laurent polynomial");
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const std::string mono = detail::power_text(vars[level], it->first) + suffix;
    if constexpr (requires { it->second.terms(); }) {
      collect_terms(it->second, vars, level + 1, mono, out);
    } else {
      out.push_back({to_string(it->second), mono});
    }
  }
}

}  // namespace refl
