#include "refl/invariants/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace refl {
namespace {

Rational rational_part(const Cyclotomic& c, const char* what) {
  if (!c.is_rational()) throw InvariantViolation(std::string(what) + " has an irrational coefficient " + c.to_string());
  return c.to_rational();
}

Integer integer_part(const Rational& q, const char* what) {
  if (!q.is_integer()) throw InvariantViolation(std::string(what) + " has a non-integral coefficient " + q.to_string());
  return q.numerator();
}

Poly<Rational> to_rational_poly(const Poly<Cyclotomic>& p, const char* what) {
  return p.map([&](const Cyclotomic& c) { return rational_part(c, what); });
}

Poly<Integer> to_integer_poly(const Poly<Rational>& p, const char* what) {
  return p.map([&](const Rational& q) { return integer_part(q, what); });
}

Poly<Rational> one_minus_power(int d) {
  return Poly<Rational>(Rational(1)) - Poly<Rational>::monomial(Rational(1), d);
}

// If p = lc * prod (x - sign*m_i) with integers m_i >= 0, the sorted m_i.
std::optional<std::vector<int>> split_integer_roots(Poly<Integer> p, int sign) {
  std::vector<int> roots;
  const int n = p.degree();
  while (p.degree() > 0 && p.coeff(0).is_zero()) {
    roots.push_back(0);
    p = exact_div(p, Poly<Integer>::x());
  }
  Integer bound(1);
  for (int k = 0; k < p.degree(); ++k) {
    const Integer a = p.coeff(k) < Integer(0) ? -p.coeff(k) : p.coeff(k);
    if (a > bound) bound = a;
  }
  for (long m = 1; p.degree() > 0 && Integer(m) <= bound + Integer(1);) {
    const Integer r(sign * m);
    if (p.eval(r).is_zero()) {
      roots.push_back(static_cast<int>(m));
      p = exact_div(p, Poly<Integer>{-r, Integer(1)});
    } else {
      ++m;
    }
  }
  if (static_cast<int>(roots.size()) != n) return std::nullopt;
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

}  // namespace

std::vector<int> DegreeData::exponents() const {
  std::vector<int> out;
  for (int d : degrees) out.push_back(d - 1);
  return out;
}

std::vector<int> DegreeData::coexponents() const {
  std::vector<int> out;
  for (int d : codegrees) out.push_back(d + 1);
  return out;
}

long long DegreeData::num_reflections() const {
  long long n = 0;
  for (int d : degrees) n += d - 1;
  return n;
}

long long DegreeData::num_hyperplanes() const {
  long long n = 0;
  for (int d : codegrees) n += d + 1;
  return n;
}

Integer DegreeData::group_order() const {
  Integer o(1);
  for (int d : degrees) o *= Integer(d);
  return o;
}

bool DegreeData::duality_holds() const {
  if (degrees.empty() || codegrees.size() != degrees.size()) return false;
  return codegrees == dual_codegrees(degrees);
}

std::vector<int> dual_codegrees(const std::vector<int>& degrees) {
  std::vector<int> out;
  for (auto it = degrees.rbegin(); it != degrees.rend(); ++it) out.push_back(degrees.back() - *it);
  return out;
}

RationalFunction<Rational> molien_series(const GroupSpectra& s) {
  const Poly<Cyclotomic>& den = s.common_denominator;
  Poly<Cyclotomic> num;
  for (const auto& c : s.classes)
    num += Cyclotomic(static_cast<long>(c.size)) * exact_div(den, c.det_one_minus);
  const Poly<Rational> q = to_rational_poly(num, "Molien numerator");
  const Rational inv_order = Rational(1) / Rational(static_cast<long>(s.order));
  return RationalFunction<Rational>(inv_order * q, to_rational_poly(den, "Molien denominator"));
}

std::vector<int> degrees_from_molien(const RationalFunction<Rational>& p, int rank) {
  const int k = p.den().degree() + 1;
  Poly<Rational> s = p.series(k + 1);
  std::vector<int> degs;
  for (;;) {
    int low = 1;
    while (low <= k && s.coeff(low).is_zero()) ++low;
    if (low > k) break;
    const Rational c = s.coeff(low);
    if (c.sign() < 0 || !c.is_integer())
      throw std::domain_error("series coefficient " + c.to_string() + " at degree " + std::to_string(low) +
                              " is not a positive integer; not a product of 1/(1 - x^d)");
    degs.push_back(low);
    if (static_cast<int>(degs.size()) > rank)
      throw std::domain_error("more than " + std::to_string(rank) + " factors 1/(1 - x^d) needed");
    s = (s * one_minus_power(low)).truncated(k + 1);
  }
  if (static_cast<int>(degs.size()) != rank)
    throw std::domain_error("found " + std::to_string(degs.size()) + " degrees for rank " + std::to_string(rank));
  Poly<Rational> prod(Rational(1));
  for (int d : degs) prod *= one_minus_power(d);
  if (!(RationalFunction<Rational>(Poly<Rational>(Rational(1)), prod) == p))
    throw std::domain_error("Molien series differs from prod 1/(1 - x^d) for degrees " + join(degs));
  return degs;
}

DegreeData degrees_closed_form(const ImprimParams& p) {
  DegreeData dd;
  const int d = p.d, e = p.e, n = p.n;
  for (int i = 1; i < n; ++i) dd.degrees.push_back(i * e * d);
  dd.degrees.push_back(n * d);
  if (d > 1) {
    for (int i = 0; i < n; ++i) dd.codegrees.push_back(i * e * d);
  } else {
    for (int i = 0; i + 1 < n; ++i) dd.codegrees.push_back(i * e);
    dd.codegrees.push_back((n - 1) * e - n);
  }
  std::sort(dd.degrees.begin(), dd.degrees.end());
  std::sort(dd.codegrees.begin(), dd.codegrees.end());
  return dd;
}

Poly<Integer> poincare_polynomial(const std::vector<int>& degrees) {
  Poly<Integer> out(Integer(1));
  for (int d : degrees) out *= q_integer<Integer>(d);
  return out;
}

SolomonReport solomon_identities(const GroupSpectra& s, const DegreeData& dd) {
  SolomonReport rep;
  Poly<Cyclotomic> signed_sum;
  for (const auto& c : s.classes) {
    rep.fixed_space_sum += Poly<Integer>::monomial(Integer(static_cast<long>(c.size)), c.fixed_dim);
    signed_sum += Poly<Cyclotomic>::monomial(Cyclotomic(static_cast<long>(c.size)) * c.det, c.fixed_dim);
  }
  rep.signed_sum = to_integer_poly(to_rational_poly(signed_sum, "signed fixed-space sum"), "signed fixed-space sum");

  Poly<Integer> rhs(Integer(1));
  for (int m : dd.exponents()) rhs *= Poly<Integer>{Integer(m), Integer(1)};
  if (!(rhs == rep.fixed_space_sum))
    throw InvariantViolation("sum of x^k(w) is " + rep.fixed_space_sum.to_string() + ", expected " + rhs.to_string());
  rep.exponents = dd.exponents();

  auto co = split_integer_roots(rep.signed_sum, 1);
  if (!co) throw InvariantViolation("signed sum " + rep.signed_sum.to_string() + " does not split over Z>=0");
  rep.coexponents = *co;
  if (!dd.codegrees.empty()) {
    std::vector<int> want = dd.coexponents();
    std::sort(want.begin(), want.end());
    if (want != rep.coexponents)
      throw InvariantViolation("coexponents " + join(rep.coexponents) + " differ from expected " + join(want));
  }
  return rep;
}

Poly<Integer> fake_degree(const GroupSpectra& s, const ClassFunction& chi, const std::vector<int>& degrees) {
  const Poly<Cyclotomic>& den = s.common_denominator;
  Poly<Cyclotomic> num;
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    const auto& c = s.classes[i];
    const Poly<Cyclotomic> dbar = c.det_one_minus.map([](const Cyclotomic& a) { return a.conj(); });
    num += (Cyclotomic(static_cast<long>(c.size)) * chi.values[i]) * exact_div(den, dbar);
  }
  Poly<Rational> top = to_rational_poly(num, "fake degree numerator");
  for (int d : degrees) top *= one_minus_power(d);
  const auto [q, r] = divmod(top, to_rational_poly(den, "fake degree denominator"));
  if (!r.is_zero()) throw InvariantViolation("fake degree is not a polynomial");
  const Rational inv_order = Rational(1) / Rational(static_cast<long>(s.order));
  return to_integer_poly(inv_order * q, "fake degree");
}

std::pair<int, Integer> b_invariant_and_gamma(const Poly<Integer>& r) {
  if (r.is_zero()) throw std::domain_error("zero polynomial has no b-invariant");
  const int b = r.valuation();
  return {b, r.coeff(b)};
}

std::vector<std::pair<std::size_t, std::size_t>> reflection_classes(const GroupSpectra& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < s.classes.size(); ++i)
    if (s.classes[i].fixed_dim == s.dim - 1) out.emplace_back(i, s.classes[i].size);
  return out;
}

PalindromeMatch palindrome_search(const GroupSpectra& s, const std::vector<ClassFunction>& chars,
                                  const std::vector<Poly<Integer>>& fake_degrees) {
  const std::size_t k = chars.size();
  const auto refl = reflection_classes(s);
  PalindromeMatch out;
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    Cyclotomic c(0);
    for (const auto& [cls, count] : refl)
      c += Cyclotomic(static_cast<long>(count)) * (Cyclotomic(1) - chars[i].values[cls] / chars[i].degree());
    if (!c.is_rational() || !c.to_rational().is_integer())
      throw std::domain_error("palindromicity exponent c = " + c.to_string() + " is not an integer");
    const long cv = c.to_rational().numerator().to_long();
    out.c.push_back(static_cast<int>(cv));
    const Poly<Integer>& r = fake_degrees[i];
    if (r.degree() > cv) continue;
    std::vector<Integer> t(static_cast<std::size_t>(cv) + 1, Integer(0));
    for (int e = 0; e <= r.degree(); ++e) t[static_cast<std::size_t>(cv - e)] = r.coeff(e);
    const Poly<Integer> target(std::move(t));
    for (std::size_t j = 0; j < k; ++j)
      if (fake_degrees[j] == target) candidates[i].push_back(j);
  }
  // Bipartite matching by augmenting paths.
  std::vector<std::ptrdiff_t> owner(k, -1);
  std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
    for (std::size_t j : candidates[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (owner[j] < 0 || augment(static_cast<std::size_t>(owner[j]), seen)) {
        owner[j] = static_cast<std::ptrdiff_t>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<char> seen(k, 0);
    if (!augment(i, seen))
      throw InvariantViolation("no palindromic partner for character " + std::to_string(i));
  }
  out.partner.assign(k, 0);
  for (std::size_t j = 0; j < k; ++j) out.partner[static_cast<std::size_t>(owner[j])] = j;
  return out;
}

}  // namespace refl
