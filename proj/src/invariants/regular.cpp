#include <algorithm>
#include <functional>
#include <map>

#include "refl/invariants/invariants.hpp"

namespace refl {
namespace {

Cyclotomic apply_form(const CVector& form, const CVector& v) {
  Cyclotomic acc(0);
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (!form(j).is_zero() && !v(j).is_zero()) acc += form(j) * v(j);
  return acc;
}

}  // namespace

std::vector<int> regular_numbers(const DegreeData& dd) {
  if (dd.codegrees.size() != dd.degrees.size()) throw std::invalid_argument("regular numbers need codegrees");
  std::vector<int> out;
  for (int d = 1; d <= dd.degrees.back(); ++d) {
    const auto divisible = [d](int x) { return x % d == 0; };
    if (std::count_if(dd.degrees.begin(), dd.degrees.end(), divisible) ==
        std::count_if(dd.codegrees.begin(), dd.codegrees.end(), divisible))
      out.push_back(d);
  }
  return out;
}

std::vector<int> maximal_regular_degrees(const DegreeData& dd) {
  const std::vector<int> reg = regular_numbers(dd);
  std::vector<int> out;
  for (int d : reg) {
    if (std::find(dd.degrees.begin(), dd.degrees.end(), d) == dd.degrees.end()) continue;
    if (std::any_of(reg.begin(), reg.end(), [d](int r) { return r != d && r % d == 0; })) continue;
    out.push_back(d);
  }
  return out;
}

RegularCheck regular_element_check(const EnumeratedGroup& g, const ReflectionData& rd, std::size_t w, int d,
                                   const std::vector<int>& coexponents, long long k) {
  RegularCheck out;
  out.zeta = Cyclotomic::zeta(d, k);
  const CMatrix m = g.matrix(w);
  const auto basis = eigenspace_basis(m, out.zeta);
  out.eigenspace_dim = static_cast<int>(basis.size());
  if (basis.empty()) return out;
  for (const auto& form : rd.hyperplanes)
    if (std::all_of(basis.begin(), basis.end(), [&](const CVector& b) { return apply_form(form, b).is_zero(); }))
      return out;
  const long long last = static_cast<long long>(rd.hyperplanes.size()) * (out.eigenspace_dim - 1);
  for (long long t = 0; t <= last && !out.witness; ++t) {
    CVector v = CVector::Constant(m.rows(), Cyclotomic(0));
    Cyclotomic power(1);
    for (const auto& b : basis) {
      for (Eigen::Index j = 0; j < v.size(); ++j) v(j) += power * b(j);
      power *= Cyclotomic(t);
    }
    if (std::none_of(rd.hyperplanes.begin(), rd.hyperplanes.end(),
                     [&](const CVector& form) { return apply_form(form, v).is_zero(); }))
      out.witness = std::move(v);
  }
  if (!out.witness) throw InvariantViolation("moment-curve search missed a regular vector");
  out.regular = true;
  Poly<Cyclotomic> expected(Cyclotomic(1));
  for (int c : coexponents) expected *= Poly<Cyclotomic>{-Cyclotomic::zeta(d, k * c), Cyclotomic(1)};
  out.eigenvalues_match = (expected == charpoly(m));
  return out;
}

WellGeneratedReport well_generated_report(const EnumeratedGroup& g, const ReflectionData& rd, const DegreeData& dd,
                                          std::size_t budget) {
  WellGeneratedReport rep;
  const int n = dd.rank();
  const int top = dd.degrees.back();
  rep.duality = dd.duality_holds();
  rep.count_identity = dd.num_reflections() + dd.num_hyperplanes() == static_cast<long long>(n) * top;
  rep.codegree_bound = std::all_of(dd.codegrees.begin(), dd.codegrees.end(), [top](int c) { return c < top; });

  std::size_t closures = 0;
  std::map<std::vector<std::size_t>, int> explored;  // subgroup -> generators still allowed
  std::function<bool(const std::vector<std::size_t>&, const std::vector<std::size_t>&, int)> search =
      [&](const std::vector<std::size_t>& gens, const std::vector<std::size_t>& sub, int left) {
        if (sub.size() == g.order()) return true;
        if (left == 0) return false;
        for (std::size_t r : rd.reflections) {
          if (std::binary_search(sub.begin(), sub.end(), r)) continue;
          if (++closures > budget) throw BudgetExceeded("well-generated search exceeded its closure budget");
          std::vector<std::size_t> next = gens;
          next.push_back(r);
          std::vector<std::size_t> grown = subgroup_closure(g, next);
          auto [it, fresh] = explored.try_emplace(grown, left - 1);
          if (!fresh) {
            if (it->second >= left - 1) continue;
            it->second = left - 1;
          }
          if (search(next, grown, left - 1)) return true;
        }
        return false;
      };
  rep.generated_by_rank = search({}, {0}, n);
  return rep;
}

}  // namespace refl
