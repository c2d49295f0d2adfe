#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "refl/exact/integer.hpp"
#include "refl/exact/poly.hpp"
#include "refl/exact/rational.hpp"
#include "refl/exact/ratfun.hpp"
#include "refl/group/reflections.hpp"
#include "refl/imprim/imprim.hpp"
#include "refl/invariants/spectra.hpp"

namespace refl {

struct DegreeData {
  std::vector<int> degrees;    // ascending
  std::vector<int> codegrees;  // ascending; empty when unknown

  int rank() const { return static_cast<int>(degrees.size()); }
  std::vector<int> exponents() const;    // d_i - 1
  std::vector<int> coexponents() const;  // d_i* + 1
  long long num_reflections() const;     // N
  long long num_hyperplanes() const;     // N*
  Integer group_order() const;
  /// d_i + d*_{n-i+1} = d_n for all i.
  bool duality_holds() const;
  friend bool operator==(const DegreeData&, const DegreeData&) = default;
};

/// (1/|W|) sum of 1/det(1 - x g), summed class by class.
RationalFunction<Rational> molien_series(const GroupSpectra& s);

/// The multiset {d_i} with P = prod 1/(1 - x^{d_i}), read greedily off the
/// power series. Throws std::domain_error when P is not of that form.
std::vector<int> degrees_from_molien(const RationalFunction<Rational>& p, int rank);

/// Degrees and codegrees of G(de,e,n) without enumeration.
DegreeData degrees_closed_form(const ImprimParams& p);

/// Well-generated codegrees d_n - d_{n-i+1}.
std::vector<int> dual_codegrees(const std::vector<int>& degrees);

/// prod (x^{d_i} - 1)/(x - 1).
Poly<Integer> poincare_polynomial(const std::vector<int>& degrees);

struct SolomonReport {
  Poly<Integer> fixed_space_sum;  // sum of x^{k(w)}
  Poly<Integer> signed_sum;       // sum of det(w) x^{k(w)}
  std::vector<int> exponents;     // roots -m_i of the first sum, as m_i
  std::vector<int> coexponents;   // roots m_i* of the second sum
};

/// Evaluates both generating functions, factors them over the integers and
/// compares with the given degree data (codegrees only when present).
/// Throws InvariantViolation on mismatch.
SolomonReport solomon_identities(const GroupSpectra& s, const DegreeData& dd);

/// Fake degree of chi from its definition as a graded multiplicity in the
/// coinvariant algebra. Throws InvariantViolation if the result is not a
/// polynomial with integer coefficients.
Poly<Integer> fake_degree(const GroupSpectra& s, const ClassFunction& chi, const std::vector<int>& degrees);

/// Order of vanishing at 0 and the lowest coefficient. Throws
/// std::domain_error for R = 0.
std::pair<int, Integer> b_invariant_and_gamma(const Poly<Integer>& r);

/// Reflection classes as (class index, number of reflections in it).
std::vector<std::pair<std::size_t, std::size_t>> reflection_classes(const GroupSpectra& s);

struct PalindromeMatch {
  /// partner[i] = psi with R_i(x) = x^{c_i} R_psi(1/x), a permutation.
  std::vector<std::size_t> partner;
  std::vector<int> c;
};

/// Throws std::domain_error for non-integral c, InvariantViolation when no
/// bijective pairing exists.
PalindromeMatch palindrome_search(const GroupSpectra& s, const std::vector<ClassFunction>& chars,
                                  const std::vector<Poly<Integer>>& fake_degrees);

/// Integers d >= 1 dividing as many degrees as codegrees, up to d_n.
std::vector<int> regular_numbers(const DegreeData& dd);
/// Regular degrees that properly divide no other regular number.
std::vector<int> maximal_regular_degrees(const DegreeData& dd);

struct RegularCheck {
  bool regular = false;
  Cyclotomic zeta;
  int eigenspace_dim = 0;
  /// A vector of V(w, zeta) on no reflecting hyperplane, when regular.
  std::optional<CVector> witness;
  /// Eigenvalues equal zeta^{m_i*}; only meaningful when regular.
  bool eigenvalues_match = false;
};

/// Tests whether V(w, zeta), zeta = E(d)^k, contains a regular vector.
/// Candidates are points of the moment curve sum_j t^j b_j over a basis
/// of the eigenspace; a hyperplane not containing the eigenspace meets the
/// curve at most dim - 1 times, so t = 0, ..., H (dim - 1) suffices.
RegularCheck regular_element_check(const EnumeratedGroup& g, const ReflectionData& rd, std::size_t w, int d,
                                   const std::vector<int>& coexponents, long long k = 1);

struct WellGeneratedReport {
  bool duality = false;         // d_i + d*_{n-i+1} = d_n
  bool count_identity = false;  // N + N* = n d_n
  bool codegree_bound = false;  // d_i* < d_n
  bool generated_by_rank = false;

  bool consistent() const {
    return duality == count_identity && count_identity == codegree_bound && codegree_bound == generated_by_rank;
  }
};

/// The last condition is decided by searching for dim(V) reflections that
/// generate W; `budget` bounds the number of subgroup closures.
WellGeneratedReport well_generated_report(const EnumeratedGroup& g, const ReflectionData& rd, const DegreeData& dd,
                                          std::size_t budget = 200000);

}  // namespace refl
