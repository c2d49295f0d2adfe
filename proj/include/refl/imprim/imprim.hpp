#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "refl/exact/integer.hpp"
#include "refl/group/finite_group.hpp"

namespace refl {

/// Parameters of the monomial group G(de, e, n).
struct ImprimParams {
  int d = 1;
  int e = 1;
  int n = 1;

  ImprimParams() = default;
  /// Throws std::invalid_argument unless d, e, n >= 1.
  ImprimParams(int d_, int e_, int n_);

  int de() const { return d * e; }
  /// G(2,2,2) is the reducible Klein four-group.
  bool is_degenerate() const { return d == 1 && e == 2 && n == 2; }
  /// G(1,1,n) is S_n on its reducible permutation representation.
  bool is_natural_symmetric() const { return d == 1 && e == 1; }
  bool is_irreducible() const { return !is_degenerate() && !is_natural_symmetric() && !(n == 1 && d == 1); }
  std::string name() const;
  friend bool operator==(const ImprimParams&, const ImprimParams&) = default;
};

/// Monomial matrix sending basis vector b_j to zeta_{de}^{exps[j]} b_{perm[j]}.
struct MonomialElement {
  std::vector<int> perm;  // 0-based images
  std::vector<int> exps;  // residues mod de

  int size() const { return static_cast<int>(perm.size()); }
  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
};

struct MonomialHash {
  std::size_t operator()(const MonomialElement& m) const noexcept;
};

MonomialElement monomial_identity(int n);
/// Product g h (apply h first), exponents reduced mod de.
MonomialElement monomial_multiply(const MonomialElement& g, const MonomialElement& h, int de);
MonomialElement monomial_inverse(const MonomialElement& g, int de);
CMatrix monomial_matrix(const MonomialElement& g, int de);
/// Number of cycles whose exponent sum is 0 mod de, which is the
/// dimension of the fixed space.
int monomial_fixed_dim(const MonomialElement& g, int de);

/// Cycle notation (1-based) and exponent list, e.g. "(1 2);[1,0]".
std::string format_monomial(const MonomialElement& g);
/// Inverse of format_monomial for an n-dimensional element; exponents are
/// checked against de.
MonomialElement parse_monomial(std::string_view text, int n, int de);

/// Generators t_1^e, t_1^{-1} t_2 t_1, t_2, ..., t_n, where t_1 =
/// diag(zeta_de, 1, ..., 1) and t_i swaps coordinates i-1 and i. Redundant
/// or trivial members are dropped: t_1^e when d = 1, and for e = 1 the set
/// is t_1, ..., t_n.
std::vector<MonomialElement> imprim_generators(const ImprimParams& p);

/// d^n e^(n-1) n!.
Integer imprim_order(const ImprimParams& p);

/// Whether m lies in G(de, e, n): the exponent sum is divisible by e.
/// Throws std::invalid_argument for malformed input.
bool imprim_contains(const MonomialElement& m, const ImprimParams& p);

class ImprimGroup : public FiniteGroup<MonomialElement, MonomialHash> {
 public:
  ImprimGroup(const ImprimParams& p, std::size_t budget = kDefaultOrderBudget);
  const ImprimParams& params() const { return p_; }
  int dimension() const override { return p_.n; }
  CMatrix matrix(std::size_t i) const override { return monomial_matrix(element(i), p_.de()); }
  std::string label(std::size_t i) const override { return format_monomial(element(i)); }
  int fixed_space_dim(std::size_t i) const override { return monomial_fixed_dim(element(i), p_.de()); }
  Cyclotomic det(std::size_t i) const override;

 private:
  ImprimParams p_;
};

}  // namespace refl
