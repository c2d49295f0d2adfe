#include "refl/invariants/spectra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace refl {
namespace {

Poly<Cyclotomic> psi(int j) {
  if (j == 1) return Poly<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1)};
  std::vector<Cyclotomic> c;
  for (long long a : cyclotomic_polynomial(j)) c.emplace_back(a);
  return Poly<Cyclotomic>(std::move(c));
}

}  // namespace

int root_multiplicity(Poly<Cyclotomic> p, const Cyclotomic& root) {
  int m = 0;
  const Poly<Cyclotomic> lin{-root, Cyclotomic(1)};
  while (!p.is_zero() && p.eval(root).is_zero()) {
    p = exact_div(p, lin);
    ++m;
  }
  return m;
}

GroupSpectra group_spectra(const EnumeratedGroup& g, const ClassPartition& cp) {
  GroupSpectra s;
  s.order = g.order();
  s.dim = g.dimension();
  std::map<int, int> mult;
  for (const auto& c : cp.classes) {
    ClassSpectrum cs;
    cs.representative = c.representative;
    cs.size = c.size();
    cs.order = g.element_order(c.representative);
    cs.fixed_dim = g.fixed_space_dim(c.representative);
    const CMatrix m = g.matrix(c.representative);
    cs.charpoly = charpoly(m);
    cs.det_one_minus = det_one_minus_x(m);
    cs.det = g.det(c.representative);
    for (int j = 1; j <= cs.order; ++j) {
      if (cs.order % j != 0) continue;
      int& e = mult[j];
      for (int k = 1; k <= j; ++k)
        if (std::gcd(j, k) == 1) e = std::max(e, root_multiplicity(cs.charpoly, Cyclotomic::zeta(j, k)));
    }
    s.classes.push_back(std::move(cs));
  }
  Poly<Cyclotomic> den(Cyclotomic(1));
  for (const auto& [j, e] : mult) {
    const Poly<Cyclotomic> f = psi(j);
    for (int r = 0; r < e; ++r) den *= f;
  }
  s.common_denominator = std::move(den);
  return s;
}

ClassFunction conj(const ClassFunction& f) {
  ClassFunction out;
  for (const auto& v : f.values) out.values.push_back(v.conj());
  return out;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction out;
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] * b.values[i]);
  return out;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  ClassFunction out;
  for (std::size_t i = 0; i < a.values.size(); ++i) out.values.push_back(a.values[i] + b.values[i]);
  return out;
}

Cyclotomic inner_product(const GroupSpectra& s, const ClassFunction& a, const ClassFunction& b) {
  Cyclotomic acc(0);
  for (std::size_t i = 0; i < s.classes.size(); ++i)
    acc += Cyclotomic(static_cast<long>(s.classes[i].size)) * a.values[i] * b.values[i].conj();
  return acc / Cyclotomic(static_cast<long>(s.order));
}

ClassFunction trivial_character(const GroupSpectra& s) {
  return ClassFunction{std::vector<Cyclotomic>(s.classes.size(), Cyclotomic(1))};
}

ClassFunction det_character(const GroupSpectra& s) {
  ClassFunction out;
  for (const auto& c : s.classes) out.values.push_back(c.det);
  return out;
}

ClassFunction reflection_character(const GroupSpectra& s) { return exterior_power_character(s, 1); }

ClassFunction exterior_power_character(const GroupSpectra& s, int i) {
  if (i < 0 || i > s.dim) throw std::invalid_argument("exterior power index out of range");
  // det(x - g) = sum (-1)^i e_i x^{n-i}
  ClassFunction out;
  for (const auto& c : s.classes) {
    Cyclotomic v = c.charpoly.coeff(s.dim - i);
    if (i % 2 == 1) v = -v;
    out.values.push_back(std::move(v));
  }
  return out;
}

}  // namespace refl
