#pragma once

#include <cstddef>
#include <vector>

#include "refl/exact/cyclotomic.hpp"
#include "refl/exact/poly.hpp"
#include "refl/group/classes.hpp"
#include "refl/group/finite_group.hpp"

namespace refl {

/// Per-class data of an enumerated group in its defining representation.
struct ClassSpectrum {
  std::size_t representative = 0;
  std::size_t size = 0;
  int order = 1;
  int fixed_dim = 0;
  Cyclotomic det;
  Poly<Cyclotomic> charpoly;       // det(x - g)
  Poly<Cyclotomic> det_one_minus;  // det(1 - x g)
};

struct GroupSpectra {
  std::size_t order = 0;
  int dim = 0;
  std::vector<ClassSpectrum> classes;
  /// Product of Psi_j^{e_j}, where Psi_1 = 1 - x, Psi_j = Phi_j for j > 1 and
  /// e_j is the largest multiplicity of a primitive j-th root of unity as an
  /// eigenvalue of any element. Every det(1 - x g) divides it.
  Poly<Cyclotomic> common_denominator;
};

GroupSpectra group_spectra(const EnumeratedGroup& g, const ClassPartition& cp);

/// Multiplicity of `root` as a root of p.
int root_multiplicity(Poly<Cyclotomic> p, const Cyclotomic& root);

/// A function on conjugacy classes, in the class order of a partition.
struct ClassFunction {
  std::vector<Cyclotomic> values;

  const Cyclotomic& degree() const { return values.front(); }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

ClassFunction conj(const ClassFunction& f);
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);

/// (1/|W|) sum over w of a(w) conj(b(w)).
Cyclotomic inner_product(const GroupSpectra& s, const ClassFunction& a, const ClassFunction& b);

ClassFunction trivial_character(const GroupSpectra& s);
ClassFunction det_character(const GroupSpectra& s);
/// Trace of the defining representation.
ClassFunction reflection_character(const GroupSpectra& s);
/// w -> e_i(eigenvalues of w), the character of the i-th exterior power.
ClassFunction exterior_power_character(const GroupSpectra& s, int i);

}  // namespace refl
