#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "refl/group/finite_group.hpp"

namespace refl {

struct ConjClass {
  /// Member of minimal length whose canonical word is shortlex-least.
  std::size_t representative = 0;
  /// Member indices in increasing order.
  std::vector<std::size_t> members;
  /// Minimal word length over the class.
  int l_min = 0;

  std::size_t size() const { return members.size(); }
};

struct ClassPartition {
  std::vector<ConjClass> classes;
  /// class_of[i] = index into classes of the class containing element i.
  std::vector<std::size_t> class_of;

  std::size_t size() const { return classes.size(); }
};

/// Orbits of conjugation by the generators, sorted by (l_min, size,
/// representative).
ClassPartition conjugacy_classes(const EnumeratedGroup& g);

struct DescentStep {
  std::size_t element;  // x before the step
  int generator;        // s, the step being x -> s x s
};

struct DescentPath {
  std::vector<DescentStep> steps;
  std::size_t endpoint = 0;
};

/// Breadth-first search from x over conjugations by generators that do not
/// increase the length, stopping at the first element of minimal length in
/// its class. Throws InvariantViolation if none is reachable.
DescentPath gp_descent(const EnumeratedGroup& g, const ClassPartition& cp, std::size_t x);

/// All elements with x^2 = 1 (the identity included), sorted by length and
/// then by index.
std::vector<std::size_t> involutions(const EnumeratedGroup& g);

/// Involutions (x, y) with x y = w; x is the first hit in `invols`.
/// Throws InvariantViolation when no decomposition exists.
std::pair<std::size_t, std::size_t> carter_decomposition(const EnumeratedGroup& g,
                                                         const std::vector<std::size_t>& invols,
                                                         std::size_t w);

/// Some c with c w c^{-1} = w^{-1}; involutions are tried first, then every
/// element. Throws InvariantViolation when w is not conjugate to w^{-1}.
std::size_t conjugate_to_inverse(const EnumeratedGroup& g, const std::vector<std::size_t>& invols, std::size_t w);

/// Number of connected components of the minimal-length part of class c
/// under the elementary strong conjugations x ~w y (wx = yw with
/// l(wx) = l(w) + l(x), or xw = wy with l(wy) = l(w) + l(y)).
std::size_t strong_conjugacy_components(const EnumeratedGroup& g, const ClassPartition& cp, std::size_t c);

}  // namespace refl
