#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "refl/exact/rational.hpp"

namespace refl {

/// Exact element of a cyclotomic field Q(zeta_n).
///
/// The value is stored in the power basis 1, z, ..., z^(phi(n)-1) of
/// Q[z]/(Phi_n(z)), where Phi_n is the n-th cyclotomic polynomial. After every
/// operation the conductor n is reduced to the smallest m such that the value
/// lies in Q(zeta_m), and n is never congruent to 2 mod 4. Equal values
/// therefore have identical stored form, so equality is structural.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  template <std::integral T>
  Cyclotomic(T v) : n_(1), c_{Rational(v)} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational r) : n_(1), c_{std::move(r)} {}  // NOLINT(google-explicit-constructor)

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static Cyclotomic zeta(int n, long long k = 1);

  /// Element of Q(zeta_n) given by coefficients of 1, z, z^2, ... (any
  /// length; reduced modulo Phi_n).
  static Cyclotomic from_power_coeffs(int n, std::span<const Rational> coeffs);

  /// 2 cos(2 pi k / n) = zeta_n^k + zeta_n^-k.
  static Cyclotomic two_cos(int n, long long k = 1);

  int conductor() const { return n_; }
  std::span<const Rational> coeffs() const { return c_; }

  bool is_zero() const { return n_ == 1 && c_[0].is_zero(); }
  bool is_one() const { return n_ == 1 && c_[0].is_one(); }
  bool is_rational() const { return n_ == 1; }
  /// Throws std::domain_error unless the value is rational.
  const Rational& to_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  /// A total order on stored forms (not related to any ordering of C).
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic inverse() const;
  /// Image under the Galois automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
  Cyclotomic galois(long long k) const;
  /// Complex conjugate.
  Cyclotomic conj() const { return galois(-1); }
  bool is_real() const { return *this == conj(); }

  /// Value of the element when embedded in C via zeta_n = exp(2 pi i/n).
  double real_approx() const;
  double imag_approx() const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) {
    return os << a.to_string();
  }

  std::size_t hash() const;

 private:
  Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

  Cyclotomic lifted(int m) const;
  void normalize();

  int n_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& a) { return a.is_zero(); }
inline Cyclotomic conj(const Cyclotomic& a) { return a.conj(); }
inline Rational conj(const Rational& a) { return a; }

/// Sign (-1, 0, 1) of a real cyclotomic number, decided exactly: zero is
/// detected structurally and nonzero values are enclosed by intervals of
/// increasing precision until the enclosure excludes zero.
/// Throws std::domain_error if the value is not real.
int real_sign(const Cyclotomic& a);

/// Euler's totient.
int euler_phi(int n);

/// Coefficients (lowest degree first) of the n-th cyclotomic polynomial.
const std::vector<long long>& cyclotomic_polynomial(int n);

}  // namespace refl

template <>
struct std::hash<refl::Cyclotomic> {
  std::size_t operator()(const refl::Cyclotomic& a) const noexcept { return a.hash(); }
};
