#include "refl/group/reflections.hpp"

#include <algorithm>
#include <map>

namespace refl {
namespace {

CVector normal_form(const CMatrix& m) {
  // Rows of r - 1 are proportional for a reflection r; any nonzero one
  // spans the annihilator of the hyperplane.
  CMatrix d = m;
  for (Eigen::Index k = 0; k < d.rows(); ++k) d(k, k) -= Cyclotomic(1);
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    Eigen::Index lead = 0;
    while (lead < d.cols() && d(i, lead).is_zero()) ++lead;
    if (lead == d.cols()) continue;
    const Cyclotomic inv = d(i, lead).inverse();
    CVector v(d.cols());
    for (Eigen::Index j = 0; j < d.cols(); ++j) v(j) = d(i, j) * inv;
    return v;
  }
  throw InvariantViolation("identity has no reflecting hyperplane");
}

bool fixes(const CMatrix& m, const CVector& v) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Cyclotomic acc(0);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v(j).is_zero()) acc += m(i, j) * v(j);
    if (acc != v(i)) return false;
  }
  return true;
}

}  // namespace

ReflectionData reflections_and_hyperplanes(const EnumeratedGroup& g, const ClassPartition& cp) {
  ReflectionData rd;
  for (const auto& c : cp.classes)
    if (g.fixed_space_dim(c.representative) == g.dimension() - 1)
      rd.reflections.insert(rd.reflections.end(), c.members.begin(), c.members.end());
  std::sort(rd.reflections.begin(), rd.reflections.end());
  std::map<std::vector<Cyclotomic>, std::size_t> index;
  for (std::size_t r : rd.reflections) {
    const CVector v = normal_form(g.matrix(r));
    std::vector<Cyclotomic> key(v.data(), v.data() + v.size());
    auto [it, inserted] = index.try_emplace(std::move(key), rd.hyperplanes.size());
    if (inserted) rd.hyperplanes.push_back(v);
    rd.hyperplane_of.push_back(it->second);
  }
  return rd;
}

std::vector<std::size_t> pointwise_stabilizer(const EnumeratedGroup& g, const std::vector<CVector>& basis) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const CMatrix m = g.matrix(i);
    if (std::all_of(basis.begin(), basis.end(), [&](const CVector& v) { return fixes(m, v); })) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> subgroup_closure(const EnumeratedGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> out{0};
  seen[0] = 1;
  for (std::size_t h = 0; h < out.size(); ++h)
    for (std::size_t s : gens) {
      const std::size_t y = g.multiply(out[h], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> parabolic_subgroup(const EnumeratedGroup& g, const ReflectionData& rd,
                                            const std::vector<CVector>& basis) {
  const std::vector<std::size_t> brute = pointwise_stabilizer(g, basis);
  std::vector<std::size_t> gens;
  for (std::size_t k = 0; k < rd.reflections.size(); ++k) {
    const CVector& form = rd.hyperplanes[rd.hyperplane_of[k]];
    const bool contains = std::all_of(basis.begin(), basis.end(), [&](const CVector& v) {
      Cyclotomic acc(0);
      for (Eigen::Index j = 0; j < v.size(); ++j) acc += form(j) * v(j);
      return acc.is_zero();
    });
    if (contains) gens.push_back(rd.reflections[k]);
  }
  std::vector<std::size_t> generated = subgroup_closure(g, gens);
  if (generated != brute)
    throw InvariantViolation("pointwise stabilizer is not generated by the reflections it contains");
  return generated;
}

}  // namespace refl
