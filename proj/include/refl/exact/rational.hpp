#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>

#include "refl/exact/integer.hpp"

namespace refl {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() : q_(0) {}
  template <std::integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n.mpz()) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num.mpz(), den.mpz());
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& mpq() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Integer numerator() const { return Integer(mpz_class(q_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(q_.get_den())); }
  double to_double() const { return q_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  std::string to_string() const { return q_.get_str(10); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

  std::size_t hash() const {
    return numerator().hash() * 1000003u ^ denominator().hash();
  }

 private:
  mpq_class q_;
};

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline bool is_zero(const Integer& a) { return a.is_zero(); }

}  // namespace refl

template <>
struct std::hash<refl::Rational> {
  std::size_t operator()(const refl::Rational& a) const noexcept { return a.hash(); }
};
