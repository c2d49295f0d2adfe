#include "refl/exact/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "refl/errors.hpp"

namespace refl {
namespace {

// Insert-once cache keyed by K. Values are heap-allocated so references stay
// valid after later insertions; readers only take the shared lock.
template <class K, class V>
class OnceCache {
 public:
  template <class Make>
  const V& get(const K& key, Make&& make) {
    {
      std::shared_lock lock(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto fresh = std::make_unique<V>(make());
    std::unique_lock lock(mu_);
    auto [it, inserted] = map_.try_emplace(key, std::move(fresh));
    return *it->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<K, std::unique_ptr<V>> map_;
};

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

int normalized_conductor(int n) { return n % 4 == 2 ? n / 2 : n; }

std::vector<long long> compute_cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& q = cyclotomic_polynomial(d);
    const int dq = static_cast<int>(q.size()) - 1;
    const int dp = static_cast<int>(p.size()) - 1;
    std::vector<long long> quot(static_cast<std::size_t>(dp - dq) + 1, 0);
    for (int i = dp; i >= dq; --i) {
      const long long lead = p[static_cast<std::size_t>(i)];
      quot[static_cast<std::size_t>(i - dq)] = lead;
      if (lead == 0) continue;
      for (int j = 0; j <= dq; ++j) p[static_cast<std::size_t>(i - dq + j)] -= lead * q[static_cast<std::size_t>(j)];
    }
    p = std::move(quot);
  }
  return p;
}

struct FieldData {
  int n = 1;
  int phi = 1;
  // reduce[k] = coordinates of z^k modulo Phi_n, for 0 <= k < 2n.
  std::vector<std::vector<long long>> reduce;
};

FieldData make_field(int n) {
  FieldData f;
  f.n = n;
  const auto& poly = cyclotomic_polynomial(n);
  f.phi = static_cast<int>(poly.size()) - 1;
  const auto phi = static_cast<std::size_t>(f.phi);
  std::vector<long long> cur(phi, 0);
  cur[0] = 1;
  f.reduce.reserve(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < 2 * n; ++k) {
    f.reduce.push_back(cur);
    // multiply by z and reduce with z^phi = -sum poly[i] z^i
    const long long top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * poly[i];
    }
  }
  return f;
}

OnceCache<int, std::vector<long long>>& poly_cache() {
  static OnceCache<int, std::vector<long long>> cache;
  return cache;
}

OnceCache<int, FieldData>& field_cache() {
  static OnceCache<int, FieldData> cache;
  return cache;
}

const FieldData& field(int n) {
  return field_cache().get(n, [n] { return make_field(n); });
}

// Solve square rational systems in place by Gauss-Jordan; returns the inverse.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw InvariantViolation("singular matrix in cyclotomic field arithmetic");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational s = Rational(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
        if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Data for recognising elements of Q(zeta_m) inside Q(zeta_n), m | n.
struct SubfieldProjector {
  int n = 1;
  int m = 1;
  std::vector<std::vector<long long>> embed;  // phi(n) x phi(m)
  std::vector<std::size_t> pivots;            // phi(m) rows of embed
  std::vector<std::vector<Rational>> inverse; // inverse of embed restricted to pivots
};

SubfieldProjector make_projector(int n, int m) {
  SubfieldProjector pr;
  pr.n = n;
  pr.m = m;
  const FieldData& big = field(n);
  const int pm = euler_phi(m);
  const int step = n / m;
  const auto rows = static_cast<std::size_t>(big.phi);
  const auto cols = static_cast<std::size_t>(pm);
  pr.embed.assign(rows, std::vector<long long>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    const auto& col = big.reduce[j * static_cast<std::size_t>(step)];
    for (std::size_t i = 0; i < rows; ++i) pr.embed[i][j] = col[i];
  }
  // Choose pivot rows greedily by elimination on a rational copy.
  std::vector<std::vector<Rational>> work(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) work[i][j] = Rational(pr.embed[i][j]);
  std::vector<std::vector<Rational>> basis;  // reduced rows kept so far
  std::vector<std::size_t> lead;             // leading column of each basis row
  for (std::size_t i = 0; i < rows && pr.pivots.size() < cols; ++i) {
    std::vector<Rational> r = work[i];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = r[lead[b]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) r[j] -= f * basis[b][j];
    }
    std::size_t lc = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (!r[j].is_zero()) { lc = j; break; }
    if (lc == cols) continue;
    const Rational s = Rational(1) / r[lc];
    for (auto& x : r) x *= s;
    basis.push_back(std::move(r));
    lead.push_back(lc);
    pr.pivots.push_back(i);
  }
  if (pr.pivots.size() != cols) throw InvariantViolation("subfield embedding is not injective");
  std::vector<std::vector<Rational>> sq(cols, std::vector<Rational>(cols));
  for (std::size_t a = 0; a < cols; ++a)
    for (std::size_t j = 0; j < cols; ++j) sq[a][j] = Rational(pr.embed[pr.pivots[a]][j]);
  pr.inverse = invert(std::move(sq));
  return pr;
}

const SubfieldProjector& projector(int n, int m) {
  static OnceCache<std::pair<int, int>, SubfieldProjector> cache;
  return cache.get({n, m}, [n, m] { return make_projector(n, m); });
}

std::optional<std::vector<Rational>> coords_in_subfield(const std::vector<Rational>& c, int n, int m) {
  const SubfieldProjector& pr = projector(n, m);
  const std::size_t cols = pr.pivots.size();
  std::vector<Rational> sub(cols, Rational(0));
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      const Rational& x = c[pr.pivots[b]];
      if (!x.is_zero() && !pr.inverse[a][b].is_zero()) sub[a] += pr.inverse[a][b] * x;
    }
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < cols; ++j)
      if (pr.embed[i][j] != 0 && !sub[j].is_zero()) acc += Rational(pr.embed[i][j]) * sub[j];
    if (acc != c[i]) return std::nullopt;
  }
  return sub;
}

std::vector<Rational> reduce_poly(const std::vector<Rational>& p, const FieldData& f) {
  std::vector<Rational> out(static_cast<std::size_t>(f.phi), Rational(0));
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    const auto& r = f.reduce[k % static_cast<std::size_t>(f.n)];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (r[i] != 0) out[i] += p[k] * Rational(r[i]);
  }
  return out;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial index must be positive");
  if (n == 1) {
    static const std::vector<long long> phi1{-1, 1};
    return phi1;
  }
  return poly_cache().get(n, [n] { return compute_cyclotomic_polynomial(n); });
}

Cyclotomic Cyclotomic::zeta(int n, long long k) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  k %= n;
  if (k < 0) k += n;
  if (n == 1 || k == 0) return Cyclotomic(1);
  if (n % 4 == 2) {
    // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
    const int m = n / 2;
    const long long half = (m + 1) / 2;
    Cyclotomic z = zeta(m, (k * half) % m);
    return (k % 2 == 1) ? -z : z;
  }
  const FieldData& f = field(n);
  std::vector<Rational> c(static_cast<std::size_t>(f.phi));
  const auto& r = f.reduce[static_cast<std::size_t>(k)];
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(r[i]);
  Cyclotomic out(n, std::move(c));
  out.normalize();
  return out;
}

Cyclotomic Cyclotomic::two_cos(int n, long long k) { return zeta(n, k) + zeta(n, -k); }

Cyclotomic Cyclotomic::from_power_coeffs(int n, std::span<const Rational> coeffs) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  if (n % 4 == 2) {
    Cyclotomic acc;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!coeffs[k].is_zero()) acc += Cyclotomic(coeffs[k]) * zeta(n, static_cast<long long>(k));
    return acc;
  }
  const FieldData& f = field(n);
  std::vector<Rational> p(coeffs.begin(), coeffs.end());
  Cyclotomic out(n, reduce_poly(p, f));
  out.normalize();
  return out;
}

const Rational& Cyclotomic::to_rational() const {
  if (n_ != 1) throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return c_[0];
}

void Cyclotomic::normalize() {
  for (;;) {
    if (n_ == 1) return;
    bool rational = true;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (!c_[i].is_zero()) { rational = false; break; }
    if (rational) {
      c_.resize(1);
      n_ = 1;
      return;
    }
    bool descended = false;
    for (int p : prime_factors(n_)) {
      const int m = normalized_conductor(n_ / p);
      if (m == n_) continue;
      if (auto sub = coords_in_subfield(c_, n_, m)) {
        n_ = m;
        c_ = std::move(*sub);
        descended = true;
        break;
      }
    }
    if (!descended) return;
  }
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m == n_) return *this;
  const FieldData& f = field(m);
  const auto step = static_cast<std::size_t>(m / n_);
  std::vector<Rational> out(static_cast<std::size_t>(f.phi), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    const auto& r = f.reduce[j * step];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (r[i] != 0) out[i] += c_[j] * Rational(r[i]);
  }
  return Cyclotomic(m, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    const int m = std::lcm(n_, o.n_);
    Cyclotomic a = lifted(m);
    const Cyclotomic b = o.lifted(m);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    *this = std::move(a);
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    if (o.c_[0].is_zero()) return *this = Cyclotomic();
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    if (c_[0].is_zero()) return *this;
    const Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  const int m = std::lcm(n_, o.n_);
  const Cyclotomic a = lifted(m);
  const Cyclotomic b = o.lifted(m);
  std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
  }
  *this = Cyclotomic(m, reduce_poly(prod, field(m)));
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic division by zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  const FieldData& f = field(n_);
  const auto phi = static_cast<std::size_t>(f.phi);
  // Column j of the multiplication matrix is a * z^j.
  std::vector<std::vector<Rational>> mat(phi, std::vector<Rational>(phi));
  for (std::size_t j = 0; j < phi; ++j) {
    std::vector<Rational> shifted(j + phi, Rational(0));
    for (std::size_t i = 0; i < phi; ++i) shifted[i + j] = c_[i];
    const auto col = reduce_poly(shifted, f);
    for (std::size_t i = 0; i < phi; ++i) mat[i][j] = col[i];
  }
  const auto inv = invert(std::move(mat));
  std::vector<Rational> out(phi);
  for (std::size_t i = 0; i < phi; ++i) out[i] = inv[i][0];
  return Cyclotomic(n_, std::move(out));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::galois(long long k) const {
  if (n_ == 1) return *this;
  k %= n_;
  if (k < 0) k += n_;
  if (std::gcd(static_cast<long long>(n_), k) != 1)
    throw std::invalid_argument("Galois exponent must be coprime to the conductor");
  const FieldData& f = field(n_);
  std::vector<Rational> out(c_.size(), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    const auto& r = f.reduce[(j * static_cast<std::size_t>(k)) % static_cast<std::size_t>(n_)];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (r[i] != 0) out[i] += c_[j] * Rational(r[i]);
  }
  return Cyclotomic(n_, std::move(out));
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    auto c = a.c_[i] <=> b.c_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

double Cyclotomic::real_approx() const {
  double s = 0;
  for (std::size_t j = 0; j < c_.size(); ++j)
    s += c_[j].to_double() * std::cos(2.0 * M_PI * static_cast<double>(j) / n_);
  return s;
}

double Cyclotomic::imag_approx() const {
  double s = 0;
  for (std::size_t j = 0; j < c_.size(); ++j)
    s += c_[j].to_double() * std::sin(2.0 * M_PI * static_cast<double>(j) / n_);
  return s;
}

std::string Cyclotomic::to_string() const {
  if (n_ == 1) return c_[0].to_string();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const Rational& c = c_[j];
    if (c.is_zero()) continue;
    std::string mono;
    if (j > 0) {
      mono = "E(" + std::to_string(n_) + ")";
      if (j > 1) mono += "^" + std::to_string(j);
    }
    if (!first && c.sign() > 0) os << '+';
    if (j == 0) {
      os << c;
    } else if (c.is_one()) {
      os << mono;
    } else if (c == Rational(-1)) {
      os << '-' << mono;
    } else {
      os << c << '*' << mono;
    }
    first = false;
  }
  return os.str();
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<int>{}(n_);
  for (const auto& x : c_) h = h * 1099511628211ULL ^ x.hash();
  return h;
}

int real_sign(const Cyclotomic& a) {
  if (a.is_zero()) return 0;
  if (a.is_rational()) return a.to_rational().sign();
  if (!a.is_real()) throw std::domain_error("sign requested for non-real cyclotomic " + a.to_string());
  const auto coeffs = a.coeffs();
  const int n = a.conductor();
  Rational l1(0);
  for (const auto& c : coeffs) l1 += c.abs();
  for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t{1} << 20); prec *= 2) {
    mpfr_t sum, term, angle, bound;
    mpfr_inits2(prec, sum, term, angle, bound, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(sum, 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j].is_zero()) continue;
      mpfr_const_pi(angle, MPFR_RNDN);
      mpfr_mul_ui(angle, angle, 2 * static_cast<unsigned long>(j), MPFR_RNDN);
      mpfr_div_ui(angle, angle, static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_cos(term, angle, MPFR_RNDN);
      mpfr_t q;
      mpfr_init2(q, prec);
      mpfr_set_q(q, coeffs[j].mpq().get_mpq_t(), MPFR_RNDN);
      mpfr_mul(term, term, q, MPFR_RNDN);
      mpfr_clear(q);
      mpfr_add(sum, sum, term, MPFR_RNDN);
    }
    // Every term carries a relative error of a few ulps (argument, cosine,
    // coefficient, product, accumulation); 2^(6-prec) * (phi + 2) * l1 is a
    // safe radius for the enclosure.
    mpfr_set_q(bound, l1.mpq().get_mpq_t(), MPFR_RNDU);
    mpfr_mul_ui(bound, bound, static_cast<unsigned long>(coeffs.size() + 2), MPFR_RNDU);
    mpfr_mul_2si(bound, bound, 6 - static_cast<long>(prec), MPFR_RNDU);
    int result = 0;
    if (mpfr_cmpabs(sum, bound) > 0) result = mpfr_sgn(sum);
    mpfr_clears(sum, term, angle, bound, static_cast<mpfr_ptr>(nullptr));
    if (result != 0) return result;
  }
  throw InvariantViolation("sign determination did not converge for " + a.to_string());
}

}  // namespace refl
