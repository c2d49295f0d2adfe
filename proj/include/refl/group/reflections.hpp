#pragma once

#include <cstddef>
#include <vector>

#include "refl/group/classes.hpp"
#include "refl/group/finite_group.hpp"

namespace refl {

struct ReflectionData {
  /// Element indices of all reflections, increasing.
  std::vector<std::size_t> reflections;
  /// hyperplane_of[k] indexes `hyperplanes` for reflections[k].
  std::vector<std::size_t> hyperplane_of;
  /// Reflecting hyperplanes as linear forms with first nonzero entry 1.
  std::vector<CVector> hyperplanes;

  std::size_t num_reflections() const { return reflections.size(); }
  std::size_t num_hyperplanes() const { return hyperplanes.size(); }
};

/// Reflections are the members of classes whose representative fixes a
/// hyperplane; each hyperplane is keyed by its normalized linear form.
ReflectionData reflections_and_hyperplanes(const EnumeratedGroup& g, const ClassPartition& cp);

/// Elements fixing every vector of `basis`, by testing each element.
std::vector<std::size_t> pointwise_stabilizer(const EnumeratedGroup& g, const std::vector<CVector>& basis);

/// Subgroup generated by the given elements, as sorted indices.
std::vector<std::size_t> subgroup_closure(const EnumeratedGroup& g, const std::vector<std::size_t>& gens);

/// Pointwise stabilizer of span(basis), computed both by brute force and as
/// the subgroup generated by the reflections whose hyperplanes contain the
/// subspace. Throws InvariantViolation if the two differ.
std::vector<std::size_t> parabolic_subgroup(const EnumeratedGroup& g, const ReflectionData& rd,
                                            const std::vector<CVector>& basis);

}  // namespace refl
