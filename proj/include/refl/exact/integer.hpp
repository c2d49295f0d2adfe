#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace refl {

/// Arbitrary-precision integer.
class Integer {
 public:
  Integer() : z_(0) {}
  template <std::integral T>
  Integer(T v) : z_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class z) : z_(std::move(z)) {}
  explicit Integer(std::string_view text) : z_(std::string(text), 10) {}

  const mpz_class& mpz() const { return z_; }

  bool is_zero() const { return sgn(z_) == 0; }
  bool is_one() const { return z_ == 1; }
  int sign() const { return sgn(z_); }
  bool fits_long() const { return z_.fits_slong_p(); }
  long to_long() const { return z_.get_si(); }

  Integer operator-() const { return Integer(mpz_class(-z_)); }
  Integer& operator+=(const Integer& o) { z_ += o.z_; return *this; }
  Integer& operator-=(const Integer& o) { z_ -= o.z_; return *this; }
  Integer& operator*=(const Integer& o) { z_ *= o.z_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.z_ == b.z_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.z_, b.z_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Exact quotient; the caller guarantees divisibility.
  friend Integer divexact(const Integer& a, const Integer& b) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
    return Integer(std::move(q));
  }
  friend bool divides(const Integer& d, const Integer& a) {
    return mpz_divisible_p(a.z_.get_mpz_t(), d.z_.get_mpz_t()) != 0;
  }
  friend Integer gcd(const Integer& a, const Integer& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.z_.get_mpz_t(), b.z_.get_mpz_t());
    return Integer(std::move(g));
  }

  std::string to_string() const { return z_.get_str(10); }
  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.to_string(); }

  std::size_t hash() const {
    std::size_t h = std::hash<long>{}(mpz_get_si(z_.get_mpz_t()));
    return h ^ (static_cast<std::size_t>(mpz_size(z_.get_mpz_t())) * 0x9e3779b97f4a7c15ULL);
  }

 private:
  mpz_class z_;
};

inline Integer factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Integer(std::move(f));
}

inline Integer pow(const Integer& base, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), e);
  return Integer(std::move(r));
}

}  // namespace refl

template <>
struct std::hash<refl::Integer> {
  std::size_t operator()(const refl::Integer& a) const noexcept { return a.hash(); }
};
