#include "refl/chars/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "refl/errors.hpp"

namespace refl {
namespace {

using Chooser = std::function<std::pair<int, std::size_t>(const DPartition&)>;

std::pair<int, std::size_t> last_largest(const DPartition& gamma) {
  for (int t = static_cast<int>(gamma.size()) - 1; t >= 0; --t)
    if (!gamma[static_cast<std::size_t>(t)].empty()) return {t, 0};
  throw std::logic_error("empty cycle type");
}

Cyclotomic mn_recursive(const DPartition& alpha, const DPartition& gamma, const Chooser& choose,
                        std::map<std::pair<DPartition, DPartition>, Cyclotomic>* memo) {
  if (weight(gamma) == 0) return Cyclotomic(1);
  if (memo) {
    auto it = memo->find({alpha, gamma});
    if (it != memo->end()) return it->second;
  }
  const int d = static_cast<int>(alpha.size());
  const auto [t, idx] = choose(gamma);
  DPartition rest = gamma;
  auto& comp = rest[static_cast<std::size_t>(t)];
  const int m = comp[idx];
  comp.erase(comp.begin() + static_cast<std::ptrdiff_t>(idx));

  Cyclotomic sum(0);
  for (int s = 0; s < d; ++s) {
    const Partition& p = alpha[static_cast<std::size_t>(s)];
    const std::vector<int> beta = beta_set(p, static_cast<int>(p.size()));
    for (int b : beta) {
      const int nb = b - m;
      if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
      const auto leg = std::count_if(beta.begin(), beta.end(), [&](int c) { return c > nb && c < b; });
      std::vector<int> moved = beta;
      std::replace(moved.begin(), moved.end(), b, nb);
      DPartition smaller = alpha;
      smaller[static_cast<std::size_t>(s)] = from_beta_set(moved);
      Cyclotomic term = mn_recursive(smaller, rest, choose, memo);
      if (term.is_zero()) continue;
      term *= Cyclotomic::zeta(d, static_cast<long long>(s) * t);
      if (leg % 2 == 1) term = -term;
      sum += term;
    }
  }
  if (memo) memo->emplace(std::make_pair(alpha, gamma), sum);
  return sum;
}

void check_weights(const DPartition& alpha, const DPartition& gamma) {
  if (alpha.size() != gamma.size()) throw std::invalid_argument("d-partitions of different lengths");
  if (weight(alpha) != weight(gamma)) throw std::invalid_argument("character and class of different weights");
}

Integer factorial(int k) {
  Integer f(1);
  for (int i = 2; i <= k; ++i) f *= Integer(i);
  return f;
}

Poly<Integer> binomial_power(int k) { return Poly<Integer>::monomial(Integer(1), k) - Poly<Integer>(Integer(1)); }

// Calls f on every tuple of d-partitions (gamma^1, ..., gamma^r) with
// weights `sizes` whose componentwise union is gamma.
void for_each_split(const DPartition& gamma, const std::vector<int>& sizes,
                    const std::function<void(const std::vector<DPartition>&)>& f) {
  const std::size_t d = gamma.size();
  const std::size_t r = sizes.size();
  std::vector<std::tuple<std::size_t, int, int>> kinds;  // (t, length, multiplicity)
  for (std::size_t t = 0; t < d; ++t) {
    const Partition& p = gamma[t];
    for (std::size_t i = 0; i < p.size();) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      kinds.emplace_back(t, p[i], static_cast<int>(j - i));
      i = j;
    }
  }
  std::vector<DPartition> parts(r, DPartition(d));
  std::vector<int> used(r, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == kinds.size()) {
      if (used == sizes) f(parts);
      return;
    }
    const auto [t, len, mult] = kinds[k];
    std::function<void(std::size_t, int)> spread = [&](std::size_t i, int left) {
      if (i + 1 == r) {
        if (used[i] + left * len > sizes[i]) return;
        used[i] += left * len;
        for (int c = 0; c < left; ++c) parts[i][t].push_back(len);
        rec(k + 1);
        for (int c = 0; c < left; ++c) parts[i][t].pop_back();
        used[i] -= left * len;
        return;
      }
      for (int c = 0; c <= left && used[i] + c * len <= sizes[i]; ++c) {
        used[i] += c * len;
        for (int q = 0; q < c; ++q) parts[i][t].push_back(len);
        spread(i + 1, left - c);
        for (int q = 0; q < c; ++q) parts[i][t].pop_back();
        used[i] -= c * len;
      }
    };
    spread(0, mult);
  };
  rec(0);
}

std::pair<int, Integer> low_term(const Poly<Integer>& r) {
  const int b = r.valuation();
  return {b, r.coeff(b)};
}

}  // namespace

DPartition class_parameter(const MonomialElement& m, int d) {
  const int n = m.size();
  DPartition gamma(static_cast<std::size_t>(d));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0, color = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = m.perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
      color += m.exps[static_cast<std::size_t>(j)];
    }
    gamma[static_cast<std::size_t>(((color % d) + d) % d)].push_back(len);
  }
  for (auto& p : gamma) std::sort(p.rbegin(), p.rend());
  return gamma;
}

Integer centralizer_order(const DPartition& gamma, int d) {
  Integer z(1);
  for (const auto& p : gamma)
    for (std::size_t i = 0; i < p.size();) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      const int mult = static_cast<int>(j - i);
      for (int c = 0; c < mult; ++c) z *= Integer(p[i] * d);
      z *= factorial(mult);
      i = j;
    }
  return z;
}

Cyclotomic mn_value(const DPartition& alpha, const DPartition& gamma) {
  check_weights(alpha, gamma);
  std::map<std::pair<DPartition, DPartition>, Cyclotomic> memo;
  return mn_recursive(alpha, gamma, last_largest, &memo);
}

Cyclotomic mn_value_random_order(const DPartition& alpha, const DPartition& gamma, std::mt19937& rng) {
  check_weights(alpha, gamma);
  const Chooser pick = [&rng](const DPartition& g) {
    std::vector<std::pair<int, std::size_t>> all;
    for (std::size_t t = 0; t < g.size(); ++t)
      for (std::size_t i = 0; i < g[t].size(); ++i) all.emplace_back(static_cast<int>(t), i);
    std::uniform_int_distribution<std::size_t> u(0, all.size() - 1);
    return all[u(rng)];
  };
  return mn_recursive(alpha, gamma, pick, nullptr);
}

Integer CharTable::group_order() const {
  Integer o = factorial(n);
  for (int i = 0; i < n; ++i) o *= Integer(d);
  return o;
}

std::size_t CharTable::index_of(const DPartition& a) const {
  auto it = std::find(labels.begin(), labels.end(), a);
  if (it == labels.end()) throw std::invalid_argument("no character labelled " + to_string(a));
  return static_cast<std::size_t>(it - labels.begin());
}

CharTable char_table(int d, int n, std::size_t max_classes) {
  CharTable t;
  t.d = d;
  t.n = n;
  t.labels = d_partitions(d, n);
  if (t.labels.size() > max_classes)
    throw BudgetExceeded(std::to_string(t.labels.size()) + " classes exceed the table budget of " +
                         std::to_string(max_classes));
  const Integer order = t.group_order();
  for (const auto& g : t.labels) t.class_sizes.push_back(divexact(order, centralizer_order(g, d)));
  std::map<std::pair<DPartition, DPartition>, Cyclotomic> memo;
  for (const auto& a : t.labels) {
    std::vector<Cyclotomic> row;
    for (const auto& g : t.labels) row.push_back(mn_recursive(a, g, last_largest, &memo));
    t.values.push_back(std::move(row));
  }
  return t;
}

Cyclotomic inner_product(const CharTable& t, const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  Cyclotomic acc(0);
  for (std::size_t j = 0; j < t.size(); ++j)
    if (!a[j].is_zero() && !b[j].is_zero()) acc += Cyclotomic(Rational(t.class_sizes[j])) * a[j] * b[j].conj();
  return acc / Cyclotomic(Rational(t.group_order()));
}

bool rows_orthonormal(const CharTable& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i; j < t.size(); ++j)
      if (inner_product(t, t.values[i], t.values[j]) != Cyclotomic(i == j ? 1 : 0)) return false;
  return true;
}

bool columns_orthogonal(const CharTable& t) {
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a; b < t.size(); ++b) {
      Cyclotomic acc(0);
      for (std::size_t i = 0; i < t.size(); ++i) acc += t.values[i][a] * t.values[i][b].conj();
      const Cyclotomic want = a == b ? Cyclotomic(Rational(centralizer_order(t.labels[a], t.d))) : Cyclotomic(0);
      if (acc != want) return false;
    }
  return true;
}

std::vector<Cyclotomic> induced_character(int d, const std::vector<DPartition>& factors) {
  std::vector<int> sizes;
  int n = 0;
  for (const auto& f : factors) {
    if (static_cast<int>(f.size()) != d) throw std::invalid_argument("factor is not a d-partition");
    sizes.push_back(weight(f));
    n += sizes.back();
  }
  std::map<std::pair<DPartition, DPartition>, Cyclotomic> memo;
  std::vector<Cyclotomic> out;
  for (const auto& gamma : d_partitions(d, n)) {
    const Rational zg(centralizer_order(gamma, d));
    Cyclotomic acc(0);
    for_each_split(gamma, sizes, [&](const std::vector<DPartition>& split) {
      Cyclotomic term(zg);
      for (std::size_t i = 0; i < split.size() && !term.is_zero(); ++i)
        term *= mn_recursive(factors[i], split[i], last_largest, &memo) /
                Cyclotomic(Rational(centralizer_order(split[i], d)));
      acc += term;
    });
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Integer> decompose(const CharTable& t, const std::vector<Cyclotomic>& f) {
  std::vector<Integer> out;
  for (const auto& row : t.values) {
    const Cyclotomic m = inner_product(t, f, row);
    if (!m.is_rational() || !m.to_rational().is_integer())
      throw InvariantViolation("non-integral multiplicity " + m.to_string());
    out.push_back(m.to_rational().numerator());
  }
  return out;
}

Poly<Integer> fake_degree_closed(const DPartition& alpha, int d, std::vector<int> part_counts) {
  if (static_cast<int>(alpha.size()) != d) throw std::invalid_argument("label is not a d-partition");
  if (part_counts.empty())
    for (const auto& p : alpha) part_counts.push_back(static_cast<int>(p.size()));
  const int n = weight(alpha);
  Poly<Integer> num(Integer(1));
  Poly<Integer> den(Integer(1));
  for (int i = 1; i <= n; ++i) num *= binomial_power(i * d);
  for (int i = 0; i < d; ++i) {
    const Partition& p = alpha[static_cast<std::size_t>(i)];
    const int m = part_counts[static_cast<std::size_t>(i)];
    const std::vector<int> s = beta_set(p, m);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)  // s[b] < s[a]
        num *= Poly<Integer>::monomial(Integer(1), d * s[a]) - Poly<Integer>::monomial(Integer(1), d * s[b]);
    for (int lambda : s)
      for (int h = 1; h <= lambda; ++h) den *= binomial_power(d * h);
    num *= Poly<Integer>::monomial(Integer(1), i * weight(p));
    den *= Poly<Integer>::monomial(Integer(1), d * m * (m - 1) * (m - 2) / 6);
  }
  return exact_div(num, den);
}

std::size_t j_induce(const CharTable& t, const std::vector<DPartition>& factors) {
  int total = 0;
  for (const auto& f : factors) total += weight(f);
  if (total != t.n) throw std::invalid_argument("subgroup factors do not add up to the table's rank");
  Poly<Integer> r_psi(Integer(1));
  for (const auto& f : factors) r_psi *= fake_degree_closed(f, t.d);
  const auto [b_psi, gamma_psi] = low_term(r_psi);
  if (gamma_psi != Integer(1)) throw std::domain_error("j-induction needs gamma = 1, got " + gamma_psi.to_string());
  const std::vector<Integer> mult = decompose(t, induced_character(t.d, factors));
  std::vector<std::size_t> lowest;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (mult[i].is_zero()) continue;
    const auto [b, g] = low_term(fake_degree_closed(t.labels[i], t.d));
    if (b < b_psi) throw InvariantViolation("constituent with b-invariant below that of the induced character");
    if (b == b_psi) {
      if (g != Integer(1) || mult[i] != Integer(1))
        throw InvariantViolation("j-induced constituent has gamma or multiplicity different from 1");
      lowest.push_back(i);
    }
  }
  if (lowest.size() != 1)
    throw InvariantViolation(std::to_string(lowest.size()) + " constituents share the minimal b-invariant");
  return lowest.front();
}

DPartition cyclic_shift(const DPartition& alpha, int k) {
  const int len = static_cast<int>(alpha.size());
  DPartition out;
  for (int i = 0; i < len; ++i) out.push_back(alpha[static_cast<std::size_t>(((i + k) % len + len) % len)]);
  return out;
}

ImprimIrrCount irr_count_Gdeen(int d, int e, int n) {
  const ImprimParams p(d, e, n);
  ImprimIrrCount out;
  std::set<DPartition> done;
  for (const auto& a : d_partitions(p.de(), n)) {
    if (done.count(a)) continue;
    std::set<DPartition> orbit;
    for (int k = 0; k < e; ++k) orbit.insert(cyclic_shift(a, k * d));
    done.insert(orbit.begin(), orbit.end());
    ImprimOrbit o;
    o.representative = a;
    o.orbit_size = orbit.size();
    o.stabilizer = e / static_cast<int>(orbit.size());
    out.count += static_cast<std::size_t>(o.stabilizer);
    out.orbits.push_back(std::move(o));
  }
  return out;
}

Poly<Integer> fake_degree_imprim(const DPartition& alpha, int d, int e) {
  const int de = d * e;
  if (static_cast<int>(alpha.size()) != de) throw std::invalid_argument("label is not a de-partition");
  const int n = weight(alpha);
  if (n == 0) throw std::invalid_argument("G(de,e,0) has no reflection representation");
  std::set<DPartition> orbit;
  for (int k = 0; k < e; ++k) orbit.insert(cyclic_shift(alpha, k * d));
  Poly<Integer> sum;
  for (const auto& b : orbit) sum += fake_degree_closed(b, de);
  return exact_div(sum * binomial_power(n * d), binomial_power(n * de));
}

}  // namespace refl
