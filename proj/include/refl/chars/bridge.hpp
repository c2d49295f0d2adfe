#pragma once

#include <vector>

#include "refl/chars/characters.hpp"
#include "refl/group/finite_group.hpp"
#include "refl/imprim/imprim.hpp"
#include "refl/invariants/spectra.hpp"

namespace refl {

/// Cycle types, as d-partitions for G(d,1,n), of the class representatives
/// of an enumerated G(de,e,n) with de = d.
std::vector<DPartition> class_parameters(const ImprimGroup& g, const GroupSpectra& s, int d);

/// Cycle types of the class representatives of a Coxeter group of type
/// A_{n-1}, generator i acting as the transposition (i+1, i+2).
std::vector<DPartition> class_parameters_symmetric(const EnumeratedGroup& g, const GroupSpectra& s, int n);

/// Row `row` of t evaluated on the given cycle types.
ClassFunction character_on_classes(const CharTable& t, std::size_t row, const std::vector<DPartition>& params);

}  // namespace refl
