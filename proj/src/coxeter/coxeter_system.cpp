#include "refl/coxeter/coxeter_system.hpp"

#include <algorithm>
#include <limits>

namespace refl {
namespace {

std::vector<Cyclotomic> key_of(const CVector& v) { return std::vector<Cyclotomic>(v.data(), v.data() + v.size()); }

CVector apply_generator(const CMatrix& cartan, int s, const CVector& beta) {
  Cyclotomic f(0);
  for (Eigen::Index t = 0; t < beta.size(); ++t)
    if (!beta(t).is_zero() && !cartan(s, t).is_zero()) f += cartan(s, t) * beta(t);
  CVector out = beta;
  out(s) -= f;
  return out;
}

bool nonnegative(const CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (real_sign(v(i)) < 0) return false;
  return true;
}

}  // namespace

std::size_t RootSystem::find(const CVector& v) const {
  auto it = lookup.find(key_of(v));
  return it == lookup.end() ? roots.size() : it->second;
}

RootSystem generate_roots(const CMatrix& cartan, std::size_t limit) {
  const int n = static_cast<int>(cartan.rows());
  RootSystem rs;
  rs.rank = n;
  std::vector<CVector> positive;
  std::map<std::vector<Cyclotomic>, std::size_t> seen;
  for (int s = 0; s < n; ++s) {
    CVector e = CVector::Zero(n);
    e(s) = Cyclotomic(1);
    seen.emplace(key_of(e), positive.size());
    positive.push_back(std::move(e));
  }
  for (std::size_t h = 0; h < positive.size(); ++h) {
    for (int s = 0; s < n; ++s) {
      if (static_cast<int>(h) == s) continue;
      CVector next = apply_generator(cartan, s, positive[h]);
      if (seen.count(key_of(next))) continue;
      if (!nonnegative(next)) throw InvariantViolation("reflection of a positive root is not positive");
      if (positive.size() >= limit)
        throw BudgetExceeded("root system exceeds " + std::to_string(limit) + " positive roots");
      seen.emplace(key_of(next), positive.size());
      positive.push_back(std::move(next));
    }
  }
  const std::size_t np = positive.size();
  if (2 * np > std::numeric_limits<std::uint16_t>::max()) throw BudgetExceeded("root system too large");
  rs.num_positive = np;
  rs.roots = positive;
  for (std::size_t i = 0; i < np; ++i) rs.roots.push_back(-positive[i]);
  for (std::size_t i = 0; i < rs.roots.size(); ++i) rs.lookup.emplace(key_of(rs.roots[i]), i);
  rs.action.assign(static_cast<std::size_t>(n), std::vector<std::uint16_t>(rs.roots.size()));
  for (int s = 0; s < n; ++s) {
    for (std::size_t r = 0; r < np; ++r) {
      const std::size_t img = rs.find(apply_generator(cartan, s, rs.roots[r]));
      if (img == rs.roots.size()) throw InvariantViolation("root system is not closed under reflections");
      rs.action[static_cast<std::size_t>(s)][r] = static_cast<std::uint16_t>(img);
      rs.action[static_cast<std::size_t>(s)][r + np] = static_cast<std::uint16_t>(rs.negate(img));
    }
  }
  return rs;
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix m, std::size_t root_limit)
    : CoxeterSystem(m, standard_cartan(m), root_limit) {}

CoxeterSystem::CoxeterSystem(CoxeterMatrix m, CMatrix cartan, std::size_t root_limit)
    : matrix_(std::move(m)), cartan_(std::move(cartan)) {
  validate_cartan(matrix_, cartan_);
  gens_ = reflection_rep(cartan_);
  roots_ = generate_roots(cartan_, root_limit);
}

RootPerm CoxeterSystem::identity() const {
  RootPerm p(roots_.size());
  for (std::size_t r = 0; r < p.size(); ++r) p[r] = static_cast<std::uint16_t>(r);
  return p;
}

RootPerm CoxeterSystem::generator(int s) const {
  if (s < 0 || s >= rank()) throw std::invalid_argument("generator index out of range");
  return roots_.action[static_cast<std::size_t>(s)];
}

RootPerm CoxeterSystem::multiply(const RootPerm& a, const RootPerm& b) const {
  RootPerm c(a.size());
  for (std::size_t r = 0; r < c.size(); ++r) c[r] = a[b[r]];
  return c;
}

RootPerm CoxeterSystem::inverse(const RootPerm& a) const {
  RootPerm c(a.size());
  for (std::size_t r = 0; r < c.size(); ++r) c[a[r]] = static_cast<std::uint16_t>(r);
  return c;
}

RootPerm CoxeterSystem::from_word(const Word& w) const {
  RootPerm p = identity();
  for (int s : w) p = multiply(p, generator(s));
  return p;
}

int CoxeterSystem::length(const RootPerm& w) const {
  int l = 0;
  for (std::size_t r = 0; r < roots_.num_positive; ++r)
    if (!roots_.is_positive(w[r])) ++l;
  return l;
}

bool CoxeterSystem::is_left_descent(const RootPerm& w, int s) const {
  // l(sw) < l(w) iff w^{-1}(alpha_s) is negative.
  for (std::size_t r = 0; r < w.size(); ++r)
    if (w[r] == s) return !roots_.is_positive(r);
  throw InvariantViolation("root permutation is not a bijection");
}

bool CoxeterSystem::is_right_descent(const RootPerm& w, int s) const {
  return !roots_.is_positive(w[static_cast<std::size_t>(s)]);
}

Word CoxeterSystem::reduced_word(const RootPerm& w) const {
  Word out;
  RootPerm x = w;
  for (;;) {
    int s = 0;
    while (s < rank() && !is_left_descent(x, s)) ++s;
    if (s == rank()) break;
    out.push_back(s);
    x = multiply(generator(s), x);
  }
  return out;
}

RootPerm CoxeterSystem::longest_element() const {
  RootPerm x = identity();
  for (;;) {
    int s = 0;
    while (s < rank() && is_right_descent(x, s)) ++s;
    if (s == rank()) return x;
    x = multiply(x, generator(s));
  }
}

std::vector<Word> CoxeterSystem::all_reduced_words(const RootPerm& w) const {
  std::vector<Word> out;
  const int l = length(w);
  if (l == 0) return {Word{}};
  for (int s = 0; s < rank(); ++s) {
    if (!is_left_descent(w, s)) continue;
    for (Word tail : all_reduced_words(multiply(generator(s), w))) {
      tail.insert(tail.begin(), s);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

CMatrix CoxeterSystem::matrix(const RootPerm& w) const {
  const int n = rank();
  CMatrix m(n, n);
  for (int s = 0; s < n; ++s) m.col(s) = roots_.roots[w[static_cast<std::size_t>(s)]];
  return m;
}

std::set<RootPerm> CoxeterSystem::subexpressions(const Word& w) const {
  std::vector<std::set<RootPerm>> images;
  for (int s = 0; s < rank(); ++s) images.push_back({identity(), generator(s)});
  return matsumoto_fold(w, std::set<RootPerm>{identity()}, images,
                        [this](const std::set<RootPerm>& acc, const std::set<RootPerm>& f) {
                          std::set<RootPerm> out;
                          for (const auto& a : acc)
                            for (const auto& b : f) out.insert(multiply(a, b));
                          return out;
                        });
}

bool CoxeterSystem::bruhat_leq(const RootPerm& y, const RootPerm& w) const {
  const int ly = length(y);
  const int lw = length(w);
  if (ly > lw) return false;
  if (ly == lw) return y == w;
  return subexpressions(reduced_word(w)).count(y) > 0;
}

std::unique_ptr<CoxeterGroup> CoxeterSystem::enumerate(std::size_t budget) const {
  return std::make_unique<CoxeterGroup>(*this, budget);
}

CoxeterGroup::CoxeterGroup(const CoxeterSystem& sys, std::size_t budget)
    : FiniteGroup<RootPerm, VectorHash>(
          sys.identity(),
          [&sys] {
            std::vector<RootPerm> g;
            for (int s = 0; s < sys.rank(); ++s) g.push_back(sys.generator(s));
            return g;
          }(),
          [&sys](const RootPerm& a, const RootPerm& b) { return sys.multiply(a, b); }, budget),
      sys_(&sys) {}

}  // namespace refl
