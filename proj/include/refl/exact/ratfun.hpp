#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "refl/exact/poly.hpp"

namespace refl {

/// Quotient num / den of polynomials over a field S, kept in lowest terms
/// with a monic denominator.
template <class S>
class RationalFunction {
 public:
  RationalFunction() : den_(S(1)) {}
  RationalFunction(Poly<S> num) : num_(std::move(num)), den_(S(1)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly<S> num, Poly<S> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const Poly<S>& num() const { return num_; }
  const Poly<S>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const { return from_reduced(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }

  /// Reduced forms are unique, so this agrees with cross-multiplication.
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// Power-series coefficients of degree < k; requires den(0) != 0.
  Poly<S> series(int k) const {
    const S d0 = den_.coeff(0);
    if (refl::is_zero(d0)) throw std::domain_error("rational function has a pole at 0");
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(std::max(k, 0)));
    for (int i = 0; i < k; ++i) {
      S acc = num_.coeff(i);
      for (int j = 1; j <= std::min(i, den_.degree()); ++j)
        acc -= den_.coeff(j) * out[static_cast<std::size_t>(i - j)];
      out.push_back(acc / d0);
    }
    return Poly<S>(std::move(out));
  }

  std::string to_string(const std::string& var = "x") const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

  /// Wraps an already coprime pair with monic denominator.
  static RationalFunction from_reduced(Poly<S> num, Poly<S> den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<S>(S(1));
      return;
    }
    const Poly<S> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    const S lead = den_.leading();
    if (!(lead == S(1))) {
      const S inv = S(1) / lead;
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Poly<S> num_;
  Poly<S> den_;
};

}  // namespace refl
