#include "refl/imprim/imprim.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace refl {
namespace {

int mod(long long a, int m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

MonomialElement transposition(int n, int i, int j) {
  MonomialElement t = monomial_identity(n);
  std::swap(t.perm[static_cast<std::size_t>(i)], t.perm[static_cast<std::size_t>(j)]);
  return t;
}

void validate(const MonomialElement& m, int de) {
  const int n = m.size();
  if (static_cast<int>(m.exps.size()) != n) throw std::invalid_argument("exponent list has the wrong length");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) {
    const int img = m.perm[static_cast<std::size_t>(j)];
    if (img < 0 || img >= n || hit[static_cast<std::size_t>(img)]) throw std::invalid_argument("not a permutation");
    hit[static_cast<std::size_t>(img)] = 1;
    const int x = m.exps[static_cast<std::size_t>(j)];
    if (x < 0 || x >= de) throw std::invalid_argument("exponent out of range");
  }
}

}  // namespace

ImprimParams::ImprimParams(int d_, int e_, int n_) : d(d_), e(e_), n(n_) {
  if (d < 1 || e < 1 || n < 1) throw std::invalid_argument("G(de,e,n) needs d, e, n >= 1");
}

std::string ImprimParams::name() const {
  return "G(" + std::to_string(de()) + "," + std::to_string(e) + "," + std::to_string(n) + ")";
}

std::size_t MonomialHash::operator()(const MonomialElement& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t j = 0; j < m.perm.size(); ++j) {
    h = (h ^ static_cast<std::size_t>(m.perm[j])) * 1099511628211ULL;
    h = (h ^ static_cast<std::size_t>(m.exps[j])) * 1099511628211ULL;
  }
  return h;
}

MonomialElement monomial_identity(int n) {
  MonomialElement m;
  m.perm.resize(static_cast<std::size_t>(n));
  m.exps.assign(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) m.perm[static_cast<std::size_t>(j)] = j;
  return m;
}

MonomialElement monomial_multiply(const MonomialElement& g, const MonomialElement& h, int de) {
  const std::size_t n = g.perm.size();
  MonomialElement r;
  r.perm.resize(n);
  r.exps.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto hj = static_cast<std::size_t>(h.perm[j]);
    r.perm[j] = g.perm[hj];
    r.exps[j] = mod(h.exps[j] + g.exps[hj], de);
  }
  return r;
}

MonomialElement monomial_inverse(const MonomialElement& g, int de) {
  const std::size_t n = g.perm.size();
  MonomialElement r;
  r.perm.resize(n);
  r.exps.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto img = static_cast<std::size_t>(g.perm[j]);
    r.perm[img] = static_cast<int>(j);
    r.exps[img] = mod(-g.exps[j], de);
  }
  return r;
}

CMatrix monomial_matrix(const MonomialElement& g, int de) {
  const int n = g.size();
  CMatrix m = CMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) m(g.perm[static_cast<std::size_t>(j)], j) = Cyclotomic::zeta(de, g.exps[static_cast<std::size_t>(j)]);
  return m;
}

int monomial_fixed_dim(const MonomialElement& g, int de) {
  const std::size_t n = g.perm.size();
  std::vector<char> seen(n, 0);
  int k = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (seen[j]) continue;
    long long sum = 0;
    for (std::size_t x = j; !seen[x]; x = static_cast<std::size_t>(g.perm[x])) {
      seen[x] = 1;
      sum += g.exps[x];
    }
    if (sum % de == 0) ++k;
  }
  return k;
}

std::string format_monomial(const MonomialElement& g) {
  std::ostringstream os;
  const std::size_t n = g.perm.size();
  std::vector<char> seen(n, 0);
  bool any = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (seen[j] || static_cast<std::size_t>(g.perm[j]) == j) continue;
    os << '(';
    for (std::size_t x = j; !seen[x]; x = static_cast<std::size_t>(g.perm[x])) {
      seen[x] = 1;
      if (x != j) os << ' ';
      os << x + 1;
    }
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  os << ";[";
  for (std::size_t j = 0; j < n; ++j) os << (j ? "," : "") << g.exps[j];
  os << ']';
  return os.str();
}

MonomialElement parse_monomial(std::string_view text, int n, int de) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("monomial element needs 'cycles;[exponents]'");
  MonomialElement m = monomial_identity(n);
  const std::string cycles(text.substr(0, semi));
  std::size_t pos = 0;
  while (pos < cycles.size()) {
    if (std::isspace(static_cast<unsigned char>(cycles[pos]))) {
      ++pos;
      continue;
    }
    if (cycles[pos] != '(') throw std::invalid_argument("malformed cycle notation");
    const auto close = cycles.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("unterminated cycle");
    std::istringstream in(cycles.substr(pos + 1, close - pos - 1));
    std::vector<int> cyc;
    int x = 0;
    while (in >> x) {
      if (x < 1 || x > n) throw std::invalid_argument("cycle entry out of range");
      cyc.push_back(x - 1);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      m.perm[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
    pos = close + 1;
  }
  std::string ex(text.substr(semi + 1));
  if (ex.size() < 2 || ex.front() != '[' || ex.back() != ']') throw std::invalid_argument("exponents must be in brackets");
  for (char& c : ex)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  std::istringstream in(ex);
  std::vector<int> exps;
  int v = 0;
  while (in >> v) exps.push_back(v);
  if (static_cast<int>(exps.size()) != n) throw std::invalid_argument("exponent list has the wrong length");
  m.exps = exps;
  validate(m, de);
  return m;
}

std::vector<MonomialElement> imprim_generators(const ImprimParams& p) {
  const int n = p.n;
  const int de = p.de();
  MonomialElement t1 = monomial_identity(n);
  t1.exps[0] = mod(1, de);
  MonomialElement t1e = monomial_identity(n);
  t1e.exps[0] = mod(p.e, de);
  std::vector<MonomialElement> gens;
  if (n == 1) {
    if (p.d > 1) gens.push_back(t1e);
    return gens;
  }
  if (p.e == 1) {
    if (de > 1) gens.push_back(t1);
  } else {
    if (p.d > 1) gens.push_back(t1e);
    const MonomialElement t2 = transposition(n, 0, 1);
    gens.push_back(monomial_multiply(monomial_multiply(monomial_inverse(t1, de), t2, de), t1, de));
  }
  for (int i = 1; i < n; ++i) gens.push_back(transposition(n, i - 1, i));
  return gens;
}

Integer imprim_order(const ImprimParams& p) {
  return pow(Integer(p.d), static_cast<unsigned>(p.n)) * pow(Integer(p.e), static_cast<unsigned>(p.n - 1)) *
         factorial(static_cast<unsigned>(p.n));
}

bool imprim_contains(const MonomialElement& m, const ImprimParams& p) {
  if (m.size() != p.n) throw std::invalid_argument("element has the wrong dimension");
  validate(m, p.de());
  long long sum = 0;
  for (int x : m.exps) sum += x;
  return sum % p.e == 0;
}

ImprimGroup::ImprimGroup(const ImprimParams& p, std::size_t budget)
    : FiniteGroup<MonomialElement, MonomialHash>(
          monomial_identity(p.n), imprim_generators(p),
          [de = p.de()](const MonomialElement& a, const MonomialElement& b) { return monomial_multiply(a, b, de); },
          budget),
      p_(p) {}

Cyclotomic ImprimGroup::det(std::size_t i) const {
  const MonomialElement& g = element(i);
  const std::size_t n = g.perm.size();
  std::vector<char> seen(n, 0);
  int sign = 1;
  long long sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    sum += g.exps[j];
    if (seen[j]) continue;
    std::size_t len = 0;
    for (std::size_t x = j; !seen[x]; x = static_cast<std::size_t>(g.perm[x])) {
      seen[x] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return Cyclotomic(sign) * Cyclotomic::zeta(p_.de(), sum);
}

}  // namespace refl
