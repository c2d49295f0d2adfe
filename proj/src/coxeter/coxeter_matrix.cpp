#include "refl/coxeter/coxeter_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "refl/coxeter/coxeter_system.hpp"

namespace refl {
namespace {

std::vector<std::vector<int>> blank(int n) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

void bond(std::vector<std::vector<int>>& m, int s, int t, int label) {
  m[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = label;
  m[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = label;
}

std::vector<std::vector<int>> single_type(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty type name");
  const char series = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  std::string rest(name.substr(1));
  int label = 0;
  if (auto open = rest.find('('); open != std::string::npos) {
    const auto close = rest.find(')', open);
    if (close == std::string::npos) throw std::invalid_argument("malformed type name: " + std::string(name));
    label = std::stoi(rest.substr(open + 1, close - open - 1));
    rest = rest.substr(0, open);
  }
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("malformed type name: " + std::string(name));
  const int n = std::stoi(rest);
  auto m = blank(n);
  auto chain = [&](int from) {
    for (int i = from; i + 1 < n; ++i) bond(m, i, i + 1, 3);
  };
  switch (series) {
    case 'A':
      if (n < 1) break;
      chain(0);
      return m;
    case 'B':
    case 'C':
      if (n < 2) break;
      chain(0);
      bond(m, 0, 1, 4);
      return m;
    case 'D':
      if (n < 4) break;
      chain(1);
      bond(m, 0, 2, 3);
      return m;
    case 'E':
      if (n < 6 || n > 8) break;
      bond(m, 0, 2, 3);
      bond(m, 1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) bond(m, i, i + 1, 3);
      return m;
    case 'F':
      if (n != 4) break;
      chain(0);
      bond(m, 1, 2, 4);
      return m;
    case 'G':
      if (n != 2) break;
      bond(m, 0, 1, 6);
      return m;
    case 'H':
      if (n != 3 && n != 4) break;
      chain(0);
      bond(m, 0, 1, 5);
      return m;
    case 'I':
      if (n != 2 || label < 2) break;
      bond(m, 0, 1, label);
      return m;
    default:
      break;
  }
  throw std::invalid_argument("unknown Coxeter type: " + std::string(name));
}

std::vector<int> primes_dividing(const std::vector<Integer>& values) {
  std::vector<int> out;
  for (int p = 2; p <= 31; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    for (const auto& v : values)
      if (divides(Integer(p), v)) {
        out.push_back(p);
        break;
      }
  }
  return out;
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> m) : m_(std::move(m)) {
  const std::size_t n = m_.size();
  for (std::size_t s = 0; s < n; ++s) {
    if (m_[s].size() != n) throw std::invalid_argument("Coxeter matrix must be square");
    if (m_[s][s] != 1) throw std::invalid_argument("Coxeter matrix diagonal entries must be 1");
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      if (m_[s][t] != m_[t][s]) throw std::invalid_argument("Coxeter matrix is not symmetric");
      if (m_[s][t] != kInfinity && m_[s][t] < 2)
        throw std::invalid_argument("off-diagonal Coxeter matrix entries must be at least 2");
    }
}

CoxeterMatrix CoxeterMatrix::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok == "inf" || tok == "oo" || tok == "∞") {
        row.push_back(kInfinity);
      } else {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(tok, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok.size()) throw std::invalid_argument("bad Coxeter matrix entry: " + tok);
        if (v == kInfinity) throw std::invalid_argument("Coxeter matrix entries must be positive or inf");
        row.push_back(v);
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return CoxeterMatrix(std::move(rows));
}

CoxeterMatrix CoxeterMatrix::of_type(std::string_view name) {
  std::vector<std::vector<std::vector<int>>> parts;
  std::size_t start = 0;
  while (start <= name.size()) {
    auto x = name.find('x', start);
    if (x == std::string_view::npos) x = name.size();
    parts.push_back(single_type(name.substr(start, x - start)));
    start = x + 1;
  }
  int total = 0;
  for (const auto& p : parts) total += static_cast<int>(p.size());
  auto m = blank(total);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) m[off + i][off + j] = p[i][j];
    off += p.size();
  }
  return CoxeterMatrix(std::move(m));
}

bool CoxeterMatrix::has_infinity() const {
  for (const auto& row : m_)
    for (int v : row)
      if (v == kInfinity) return true;
  return false;
}

std::string CoxeterMatrix::to_string() const {
  std::ostringstream os;
  for (const auto& row : m_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ' ';
      if (row[j] == kInfinity) os << "inf";
      else os << row[j];
    }
    os << '\n';
  }
  return os.str();
}

CMatrix standard_cartan(const CoxeterMatrix& m) {
  const int n = m.rank();
  CMatrix c(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) {
        c(s, t) = Cyclotomic(2);
      } else if (m(s, t) == CoxeterMatrix::kInfinity) {
        throw std::invalid_argument("standard Cartan matrix needs finite m_st");
      } else {
        c(s, t) = -Cyclotomic::two_cos(2 * m(s, t));
      }
    }
  return c;
}

void validate_cartan(const CoxeterMatrix& m, const CMatrix& c) {
  const int n = m.rank();
  if (c.rows() != n || c.cols() != n) throw std::invalid_argument("Cartan matrix has the wrong size");
  for (int s = 0; s < n; ++s) {
    if (c(s, s) != Cyclotomic(2)) throw std::invalid_argument("Cartan diagonal must be 2");
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      if (!c(s, t).is_real() || real_sign(c(s, t)) > 0) throw std::invalid_argument("Cartan entries must be <= 0");
      if (c(s, t).is_zero() != c(t, s).is_zero()) throw std::invalid_argument("Cartan zero pattern must be symmetric");
      if (m(s, t) == CoxeterMatrix::kInfinity) {
        if (real_sign(c(s, t) * c(t, s) - Cyclotomic(4)) < 0)
          throw std::invalid_argument("Cartan product below 4 for an infinite bond");
      } else {
        const Cyclotomic want = Cyclotomic::two_cos(2 * m(s, t)) * Cyclotomic::two_cos(2 * m(s, t));
        if (c(s, t) * c(t, s) != want) throw std::invalid_argument("Cartan product does not match m_st");
      }
    }
  }
}

bool is_finite(const CoxeterMatrix& m) {
  const int n = m.rank();
  CMatrix g(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) g(s, t) = Cyclotomic(1);
      else if (m(s, t) == CoxeterMatrix::kInfinity) g(s, t) = Cyclotomic(-1);
      else g(s, t) = -Cyclotomic::two_cos(2 * m(s, t)) * Cyclotomic(Rational(1, 2));
    }
  for (int k = 1; k <= n; ++k)
    if (real_sign(determinant(g.topLeftCorner(k, k))) <= 0) return false;
  return true;
}

std::vector<CMatrix> reflection_rep(const CMatrix& cartan) {
  const Eigen::Index n = cartan.rows();
  std::vector<CMatrix> gens;
  for (Eigen::Index s = 0; s < n; ++s) {
    CMatrix g = identity<Cyclotomic>(n);
    for (Eigen::Index t = 0; t < n; ++t) g(s, t) -= cartan(s, t);
    gens.push_back(std::move(g));
  }
  return gens;
}

std::string TypeComponent::name() const {
  if (series == 'I') return "I2(" + std::to_string(m) + ")";
  return std::string(1, series) + std::to_string(rank);
}

std::vector<TypeComponent> classify_finite_type(const CoxeterMatrix& m) {
  const int n = m.rank();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<TypeComponent> out;
  for (int root = 0; root < n; ++root) {
    if (comp[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<int> nodes{root};
    comp[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
    for (std::size_t h = 0; h < nodes.size(); ++h)
      for (int t = 0; t < n; ++t)
        if (t != nodes[h] && m(nodes[h], t) != 2 && comp[static_cast<std::size_t>(t)] < 0) {
          comp[static_cast<std::size_t>(t)] = static_cast<int>(out.size());
          nodes.push_back(t);
        }
    std::sort(nodes.begin(), nodes.end());
    const int k = static_cast<int>(nodes.size());
    TypeComponent tc;
    tc.nodes = nodes;
    tc.rank = k;
    auto fail = [&] {
      throw std::invalid_argument("Coxeter graph component is not of finite type");
    };
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
    int edges = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        const int label = m(nodes[static_cast<std::size_t>(a)], nodes[static_cast<std::size_t>(b)]);
        if (label == 2) continue;
        if (label == CoxeterMatrix::kInfinity) fail();
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
        ++edges;
      }
    auto label = [&](int a, int b) { return m(nodes[static_cast<std::size_t>(a)], nodes[static_cast<std::size_t>(b)]); };
    if (k == 1) {
      tc.series = 'A';
    } else if (k == 2) {
      const int l = label(0, 1);
      if (l == 3) tc.series = 'A';
      else if (l == 4) tc.series = 'B';
      else {
        tc.series = 'I';
        tc.m = l;
      }
    } else {
      if (edges != k - 1) fail();
      int branch = -1;
      for (int a = 0; a < k; ++a) {
        const auto deg = adj[static_cast<std::size_t>(a)].size();
        if (deg > 3) fail();
        if (deg == 3) {
          if (branch >= 0) fail();
          branch = a;
        }
      }
      if (branch < 0) {
        int end = 0;
        while (adj[static_cast<std::size_t>(end)].size() != 1) ++end;
        std::vector<int> path{end};
        while (static_cast<int>(path.size()) < k) {
          const int cur = path.back();
          for (int nb : adj[static_cast<std::size_t>(cur)])
            if (path.size() < 2 || nb != path[path.size() - 2]) {
              path.push_back(nb);
              break;
            }
        }
        std::vector<int> labels;
        for (int i = 0; i + 1 < k; ++i)
          labels.push_back(label(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i) + 1]));
        if (labels.front() != 3 && labels.back() == 3) std::reverse(labels.begin(), labels.end());
        const int special = static_cast<int>(std::count_if(labels.begin(), labels.end(), [](int l) { return l != 3; }));
        if (special == 0) {
          tc.series = 'A';
        } else if (special == 1 && labels.back() == 4) {
          tc.series = 'B';
        } else if (special == 1 && labels.back() == 5 && (k == 3 || k == 4)) {
          tc.series = 'H';
        } else if (special == 1 && k == 4 && labels[1] == 4) {
          tc.series = 'F';
        } else {
          fail();
        }
      } else {
        for (int a = 0; a < k; ++a)
          for (int b : adj[static_cast<std::size_t>(a)])
            if (label(a, b) != 3) fail();
        std::vector<int> arms;
        for (int start : adj[static_cast<std::size_t>(branch)]) {
          int prev = branch, cur = start, len = 1;
          while (adj[static_cast<std::size_t>(cur)].size() == 2) {
            const int next = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1]
                                                                          : adj[static_cast<std::size_t>(cur)][0];
            prev = cur;
            cur = next;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) tc.series = 'D';
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) tc.series = 'E';
        else fail();
      }
    }
    out.push_back(std::move(tc));
  }
  return out;
}

Matrix<Rational> integer_cartan(char series, int rank) {
  const char upper = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  std::string name(1, upper == 'C' ? 'B' : upper);
  name += std::to_string(rank);
  const CoxeterMatrix m = CoxeterMatrix::of_type(name);
  Matrix<Rational> c(rank, rank);
  for (int s = 0; s < rank; ++s)
    for (int t = 0; t < rank; ++t) {
      if (s == t) c(s, t) = Rational(2);
      else if (m(s, t) == 2) c(s, t) = Rational(0);
      else if (m(s, t) == 3) c(s, t) = Rational(-1);
      else c(s, t) = Rational(-1);
    }
  auto set_pair = [&](int s, int t, int cst, int cts) {
    c(s, t) = Rational(cst);
    c(t, s) = Rational(cts);
  };
  switch (upper) {
    case 'A':
    case 'D':
    case 'E':
      break;
    case 'B':
      set_pair(0, 1, -2, -1);
      break;
    case 'C':
      set_pair(0, 1, -1, -2);
      break;
    case 'F':
      set_pair(1, 2, -1, -2);
      break;
    case 'G':
      set_pair(0, 1, -1, -3);
      break;
    default:
      throw std::invalid_argument("type is not crystallographic");
  }
  return c;
}

PrimeData bad_and_torsion_primes(char series, int rank) {
  const Matrix<Rational> c = integer_cartan(series, rank);
  const CMatrix cc = c.unaryExpr([](const Rational& r) { return Cyclotomic(r); });
  const RootSystem rs = generate_roots(cc);
  // highest root: the positive root of maximal height
  std::size_t best = 0;
  Rational best_height(-1);
  for (std::size_t r = 0; r < rs.num_positive; ++r) {
    Rational h(0);
    for (Eigen::Index s = 0; s < rank; ++s) h += rs.roots[r](s).to_rational();
    if (h > best_height) {
      best_height = h;
      best = r;
    }
  }
  std::vector<Rational> coeff(static_cast<std::size_t>(rank));
  for (int s = 0; s < rank; ++s) coeff[static_cast<std::size_t>(s)] = rs.roots[best](s).to_rational();
  // d_s with d_s c_st = d_t c_ts, so (alpha_s, alpha_t) = d_s c_st.
  std::vector<Rational> d(static_cast<std::size_t>(rank), Rational(0));
  d[0] = Rational(1);
  std::vector<int> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int s = queue[h];
    for (int t = 0; t < rank; ++t)
      if (t != s && !c(s, t).is_zero() && d[static_cast<std::size_t>(t)].is_zero()) {
        d[static_cast<std::size_t>(t)] = d[static_cast<std::size_t>(s)] * c(s, t) / c(t, s);
        queue.push_back(t);
      }
  }
  Rational norm(0);
  for (int s = 0; s < rank; ++s)
    for (int t = 0; t < rank; ++t)
      norm += coeff[static_cast<std::size_t>(s)] * coeff[static_cast<std::size_t>(t)] * d[static_cast<std::size_t>(s)] * c(s, t);
  std::vector<Integer> m, mstar;
  for (int s = 0; s < rank; ++s) {
    const Rational& ms = coeff[static_cast<std::size_t>(s)];
    const Rational dual = ms * Rational(2) * d[static_cast<std::size_t>(s)] / norm;
    if (!ms.is_integer() || !dual.is_integer()) throw InvariantViolation("non-integral highest root coefficients");
    m.push_back(ms.numerator());
    mstar.push_back(dual.numerator());
  }
  return {primes_dividing(m), primes_dividing(mstar)};
}

}  // namespace refl
