#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "refl/exact/matrix.hpp"

namespace refl {

/// Symmetric matrix of orders m_st of products of generators. Entries are
/// 1 on the diagonal and in {2, 3, ...} or infinity off it.
class CoxeterMatrix {
 public:
  /// Stored and accepted value for an infinite order.
  static constexpr int kInfinity = 0;

  CoxeterMatrix() = default;
  /// Validates the entries; throws std::invalid_argument on asymmetry, a
  /// diagonal entry other than 1 or an off-diagonal entry below 2.
  explicit CoxeterMatrix(std::vector<std::vector<int>> m);

  /// One row per line, entries separated by blanks, "inf" for infinity.
  static CoxeterMatrix parse(std::string_view text);
  /// Standard matrix of a named finite type: A3, B4, D5, E6, F4, G2, H3,
  /// H4, I2(5). Products of types are written with 'x', e.g. "A1xA1".
  static CoxeterMatrix of_type(std::string_view name);

  int rank() const { return static_cast<int>(m_.size()); }
  int operator()(int s, int t) const { return m_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }
  bool has_infinity() const;
  const std::vector<std::vector<int>>& rows() const { return m_; }

  std::string to_string() const;
  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::vector<int>> m_;
};

/// c_st = -2cos(pi/m_st) as an exact real cyclotomic. Throws
/// std::invalid_argument if some m_st is infinite.
CMatrix standard_cartan(const CoxeterMatrix& m);

/// Checks c_ss = 2, c_st <= 0, c_st = 0 iff c_ts = 0 and
/// c_st c_ts = 4cos^2(pi/m_st) for every finite m_st.
void validate_cartan(const CoxeterMatrix& m, const CMatrix& c);

/// Positive definiteness of (-cos(pi/m_st)), decided exactly through the
/// leading principal minors; an infinite entry contributes -1.
bool is_finite(const CoxeterMatrix& m);

/// Generator matrices of the reflection representation on the basis of
/// simple roots: generator s sends alpha_t to alpha_t - c_st alpha_s.
std::vector<CMatrix> reflection_rep(const CMatrix& cartan);

struct TypeComponent {
  char series = 'A';  // A, B, D, E, F, H or I
  int rank = 0;
  int m = 0;                // the bond label for I2(m)
  std::vector<int> nodes;   // generator indices in the input matrix

  std::string name() const;
  friend bool operator==(const TypeComponent& a, const TypeComponent& b) {
    return a.series == b.series && a.rank == b.rank && a.m == b.m;
  }
};

/// Decomposes the Coxeter graph into connected components and matches each
/// against the finite types by graph shape alone. Throws
/// std::invalid_argument for a component that is not of finite type.
std::vector<TypeComponent> classify_finite_type(const CoxeterMatrix& m);

struct PrimeData {
  std::vector<int> bad;
  std::vector<int> torsion;
};

/// Integer Cartan matrix of a crystallographic type (A, B, C, D, E, F, G).
/// In B_n the short simple root is node 0, in C_n the long one is.
Matrix<Rational> integer_cartan(char series, int rank);

/// Bad primes (dividing a coefficient of the highest root) and torsion
/// primes (dividing a coefficient of its coroot in the dual basis),
/// computed from the root system of integer_cartan(series, rank).
/// Throws std::invalid_argument for non-crystallographic types.
PrimeData bad_and_torsion_primes(char series, int rank);

}  // namespace refl
