#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "refl/chars/partitions.hpp"
#include "refl/exact/cyclotomic.hpp"
#include "refl/exact/integer.hpp"
#include "refl/exact/poly.hpp"
#include "refl/imprim/imprim.hpp"

namespace refl {

/// Cycle type of a monomial element of G(d,1,n): component t lists the
/// lengths of the cycles whose entry exponents sum to t mod d.
DPartition class_parameter(const MonomialElement& m, int d);

/// Order of the centralizer in G(d,1,n) of an element of cycle type gamma:
/// prod over t, k of (k d)^{m_tk} m_tk!, m_tk = multiplicity of k in gamma_t.
Integer centralizer_order(const DPartition& gamma, int d);

/// Value of chi_alpha on the class gamma of G(d,1,n), alpha and gamma
/// d-partitions of the same weight. Each step removes the largest part of
/// the last nonempty gamma_t and sums over rim hooks of that length,
/// weighted by zeta_d^{st} (-1)^{leg} for a hook in alpha_s.
Cyclotomic mn_value(const DPartition& alpha, const DPartition& gamma);
/// The same recursion removing a uniformly random part at each step.
Cyclotomic mn_value_random_order(const DPartition& alpha, const DPartition& gamma, std::mt19937& rng);

/// Characters of G(d,1,n); rows and columns both follow d_partitions(d, n).
struct CharTable {
  int d = 1;
  int n = 0;
  std::vector<DPartition> labels;
  std::vector<Integer> class_sizes;
  std::vector<std::vector<Cyclotomic>> values;  // values[character][class]

  Integer group_order() const;
  std::size_t size() const { return labels.size(); }
  std::size_t index_of(const DPartition& a) const;
};

/// Throws BudgetExceeded above `max_classes` d-partitions.
CharTable char_table(int d, int n, std::size_t max_classes = 5000);

/// sum |C| chi conj(psi) / |W| over the columns of t.
Cyclotomic inner_product(const CharTable& t, const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b);
bool rows_orthonormal(const CharTable& t);
bool columns_orthogonal(const CharTable& t);

/// Induction from W_{n_1} x ... x W_{n_r} (a Young subgroup when d = 1) of
/// the product of the irreducibles labelled by `factors`, evaluated on the
/// columns of the table of G(d,1,sum n_i).
std::vector<Cyclotomic> induced_character(int d, const std::vector<DPartition>& factors);

/// Multiplicity of each row of t in the class function f.
std::vector<Integer> decompose(const CharTable& t, const std::vector<Cyclotomic>& f);

/// Fake degree of chi_alpha of G(d,1,n) from beta-sets with part counts
/// `part_counts` (default: the number of parts of each component).
Poly<Integer> fake_degree_closed(const DPartition& alpha, int d, std::vector<int> part_counts = {});

/// j-induction from W_{n_1} x ... x W_{n_r} to G(d,1,n) of the product of
/// the irreducibles `factors`. Returns the row index in char_table(d, n).
/// Throws std::domain_error when gamma_psi != 1 and InvariantViolation when
/// the constituent with minimal b-invariant is not unique.
std::size_t j_induce(const CharTable& t, const std::vector<DPartition>& factors);

struct ImprimOrbit {
  DPartition representative;   // first in d_partitions order
  std::size_t orbit_size = 0;  // under the shift by d positions
  int stabilizer = 0;          // s_e
};

struct ImprimIrrCount {
  std::size_t count = 0;
  std::vector<ImprimOrbit> orbits;
};

/// Irreducible characters of G(de,e,n), from de-partitions up to the shift
/// pi^d, each orbit contributing s_e characters.
ImprimIrrCount irr_count_Gdeen(int d, int e, int n);

/// pi^k(alpha) = (alpha_k, ..., alpha_{k-1}).
DPartition cyclic_shift(const DPartition& alpha, int k);

/// Fake degree of each constituent of the restriction of chi_alpha
/// (alpha a de-partition) to G(de,e,n).
Poly<Integer> fake_degree_imprim(const DPartition& alpha, int d, int e);

}  // namespace refl
