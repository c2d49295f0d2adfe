#include "refl/chars/bridge.hpp"

#include <numeric>
#include <utility>

namespace refl {

std::vector<DPartition> class_parameters(const ImprimGroup& g, const GroupSpectra& s, int d) {
  std::vector<DPartition> out;
  for (const auto& c : s.classes) out.push_back(class_parameter(g.element(c.representative), d));
  return out;
}

std::vector<DPartition> class_parameters_symmetric(const EnumeratedGroup& g, const GroupSpectra& s, int n) {
  std::vector<DPartition> out;
  for (const auto& c : s.classes) {
    MonomialElement m = monomial_identity(n);
    for (int i : g.word(c.representative)) std::swap(m.perm[static_cast<std::size_t>(i)], m.perm[static_cast<std::size_t>(i) + 1]);
    out.push_back(class_parameter(m, 1));
  }
  return out;
}

ClassFunction character_on_classes(const CharTable& t, std::size_t row, const std::vector<DPartition>& params) {
  ClassFunction f;
  for (const auto& p : params) f.values.push_back(t.values[row][t.index_of(p)]);
  return f;
}

}  // namespace refl
