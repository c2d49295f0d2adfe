#include "refl/hecke/hecke.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "refl/errors.hpp"

namespace refl {

void BraidWord::validate() const {
  if (n < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int l : letters)
    if (l == 0 || std::abs(l) > n - 1)
      throw std::invalid_argument("braid letter " + std::to_string(l) + " out of range for " + std::to_string(n) +
                                  " strands");
}

std::string BraidWord::to_string() const {
  std::string out = std::to_string(n) + ":";
  for (int l : letters) out += " " + std::to_string(l);
  return out;
}

BraidWord parse_braid(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("braid word needs 'n:' prefix");
  BraidWord b;
  std::istringstream head{std::string(text.substr(0, colon))};
  if (!(head >> b.n) || !(head >> std::ws).eof()) throw std::invalid_argument("bad strand count in braid word");
  std::istringstream body{std::string(text.substr(colon + 1))};
  std::string tok;
  while (body >> tok) {
    std::size_t used = 0;
    int l = 0;
    try {
      l = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad braid letter '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("bad braid letter '" + tok + "'");
    b.letters.push_back(l);
  }
  b.validate();
  return b;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return inv;
}

std::vector<int> reduced_word(const Perm& w) {
  Perm x = w;
  std::vector<int> word;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t i = 1; i < x.size(); ++i) {
      if (x[i - 1] > x[i]) {
        std::swap(x[i - 1], x[i]);
        word.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

Perm perm_from_word(int n, const std::vector<int>& gens) {
  Perm w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = j;
  for (int g : gens) {
    if (g < 1 || g > n - 1) throw std::out_of_range("generator index out of range");
    std::swap(w[static_cast<std::size_t>(g - 1)], w[static_cast<std::size_t>(g)]);
  }
  return w;
}

int cycle_count(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j])) seen[j] = true;
  }
  return cycles;
}

LaurentZ2 hecke_u(int k) { return LaurentZ2::monomial(LaurentZ(1), k); }
LaurentZ2 hecke_v(int k) { return LaurentZ2(LaurentZ::var(k)); }

HeckeElement::HeckeElement(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Hecke algebra needs n >= 1");
}

HeckeElement HeckeElement::identity(int n) {
  HeckeElement h(n);
  h.add_term(perm_from_word(n, {}), LaurentZ2(1));
  return h;
}

HeckeElement HeckeElement::basis(const Perm& w) {
  HeckeElement h(static_cast<int>(w.size()));
  h.add_term(w, LaurentZ2(1));
  return h;
}

LaurentZ2 HeckeElement::coeff(const Perm& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? LaurentZ2() : it->second;
}

void HeckeElement::add_term(const Perm& w, const LaurentZ2& c) {
  if (static_cast<int>(w.size()) != n_) throw std::invalid_argument("permutation size does not match strand count");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

HeckeElement HeckeElement::mul_by_generator(int i, bool inverse) const {
  if (i < 1 || i > n_ - 1) throw std::out_of_range("generator index out of range");
  const auto a = static_cast<std::size_t>(i - 1);
  HeckeElement r(n_);
  for (const auto& [w, c] : t_) {
    Perm ws = w;
    std::swap(ws[a], ws[a + 1]);
    if (w[a] < w[a + 1]) {
      r.add_term(ws, c);
    } else {
      r.add_term(ws, hecke_u() * c);
      r.add_term(w, hecke_v() * c);
    }
  }
  if (!inverse) return r;
  // T_s^{-1} = u^{-1} T_s - u^{-1} v T_1
  HeckeElement out = hecke_u(-1) * r;
  out += (-(hecke_u(-1) * hecke_v())) * *this;
  return out;
}

HeckeElement HeckeElement::included() const {
  HeckeElement r(n_ + 1);
  for (const auto& [w, c] : t_) {
    Perm x = w;
    x.push_back(n_);
    r.t_.emplace(std::move(x), c);
  }
  return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("strand count mismatch");
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

HeckeElement operator*(const LaurentZ2& c, const HeckeElement& h) {
  HeckeElement r(h.n_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : h.t_) r.t_.emplace(w, c * x);
  return r;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("strand count mismatch");
  HeckeElement r(a.n_);
  for (const auto& [w, c] : b.t_) {
    HeckeElement tmp = a;
    for (int g : reduced_word(w)) tmp = tmp.mul_by_generator(g);
    r += c * tmp;
  }
  return r;
}

std::string HeckeElement::to_string() const {
  std::vector<std::pair<const Perm*, const LaurentZ2*>> order;
  for (const auto& [w, c] : t_) order.emplace_back(&w, &c);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return perm_length(*a.first) < perm_length(*b.first); });
  std::vector<detail::Term> terms;
  for (const auto& [w, c] : order) {
    std::string mono = "T[";
    for (std::size_t j = 0; j < w->size(); ++j) mono += (j ? " " : "") + std::to_string((*w)[j] + 1);
    mono += "]";
    terms.push_back({c->to_string({"u", "v"}), mono});
  }
  return detail::render_terms(terms);
}

HeckeElement braid_to_hecke(const BraidWord& b) {
  b.validate();
  HeckeElement h = HeckeElement::identity(b.n);
  for (int l : b.letters) h = h.mul_by_generator(std::abs(l), l < 0);
  return h;
}

LaurentZ2 OcneanuTrace::operator()(const HeckeElement& h) {
  LaurentZ2 r;
  for (const auto& [w, c] : h.terms()) r += c * basis(w);
  return r;
}

LaurentZ2 OcneanuTrace::basis(const Perm& w) {
  const int n = static_cast<int>(w.size());
  if (n == 1) return LaurentZ2(1);
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;

  LaurentZ2 result;
  if (w.back() == n - 1) {
    const Perm shorter(w.begin(), w.end() - 1);
    result = hecke_v(-1) * (LaurentZ2(1) - hecke_u()) * basis(shorter);
  } else {
    // w = x s_{n-1} y, x and y in S_{n-1}, lengths adding
    const auto p = static_cast<int>(std::find(w.begin(), w.end(), n - 1) - w.begin());
    Perm x;
    for (int j = 0; j < n; ++j)
      if (j != p) x.push_back(w[static_cast<std::size_t>(j)]);
    x.push_back(n - 1);
    std::vector<int> ygens;
    for (int g = n - 2; g >= p + 1; --g) ygens.push_back(g);
    const Perm y = perm_from_word(n, ygens);
    if (perm_length(w) != perm_length(x) + 1 + perm_length(y))
      throw InvariantViolation("coset decomposition is not length additive");

    HeckeElement yx = HeckeElement::basis(y);
    for (int g : reduced_word(x)) yx = yx.mul_by_generator(g);
    for (const auto& [z, c] : yx.terms()) {
      if (z.back() != n - 1) throw InvariantViolation("product left the parabolic subalgebra");
      result += c * basis(Perm(z.begin(), z.end() - 1));
    }
  }
  cache_.emplace(w, result);
  return result;
}

LaurentZ2 ocneanu_trace(const HeckeElement& h) {
  OcneanuTrace tr;
  return tr(h);
}

LinkInvariant homfly(const BraidWord& b, OcneanuTrace& tr) {
  LinkInvariant inv;
  inv.strands = b.n;
  std::vector<int> gens;
  for (int l : b.letters) gens.push_back(std::abs(l));
  inv.components = cycle_count(perm_from_word(b.n, gens));
  inv.x = tr(braid_to_hecke(b));
  return inv;
}

LinkInvariant homfly(const BraidWord& b) {
  OcneanuTrace tr;
  return homfly(b, tr);
}

std::optional<SpecTarget> parse_spec_target(std::string_view name) {
  if (name == "jones") return SpecTarget::jones;
  if (name == "alexander") return SpecTarget::alexander;
  if (name == "homfly_tx") return SpecTarget::homfly_tx;
  return std::nullopt;
}

std::string spec_target_name(SpecTarget t) {
  switch (t) {
    case SpecTarget::jones:
      return "jones";
    case SpecTarget::alexander:
      return "alexander";
    case SpecTarget::homfly_tx:
      return "homfly_tx";
  }
  return {};
}

namespace {

LaurentZ2 univariate(const LaurentZ& p) {
  LaurentZ2 r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, LaurentZ(c));
  return r;
}

}  // namespace

Specialization specialize(const LinkInvariant& inv, SpecTarget target) {
  Specialization out;
  out.target = target;

  if (target == SpecTarget::homfly_tx) {
    // u = t^2, v = t x
    for (const auto& [a, inner] : inv.x.terms())
      for (const auto& [b, c] : inner.terms()) out.value.add_term(2 * a + b, LaurentZ::monomial(c, b));
    out.vars = {"t", "x"};
    return out;
  }

  // Substitute in s = sqrt(t).
  const int u_exp = target == SpecTarget::jones ? 4 : 0;
  const LaurentZ v_s = target == SpecTarget::jones ? LaurentZ::var(3) - LaurentZ::var(1)
                                                   : LaurentZ::var(1) - LaurentZ::var(-1);
  int vmin = 0;
  for (const auto& [a, inner] : inv.x.terms()) vmin = std::min(vmin, inner.min_exp());
  LaurentZ num;
  for (const auto& [a, inner] : inv.x.terms())
    for (const auto& [b, c] : inner.terms())
      num += LaurentZ::monomial(c, u_exp * a) * pow(v_s, static_cast<unsigned>(b - vmin));
  const LaurentZ val = vmin < 0 ? exact_div(num, pow(v_s, static_cast<unsigned>(-vmin))) : num;

  if (val.exponents_divisible_by(2)) {
    LaurentZ halved;
    for (const auto& [e, c] : val.terms()) halved.add_term(e / 2, c);
    out.value = univariate(halved);
    out.vars = {"t", "x"};
  } else {
    out.value = univariate(val);
    out.vars = {"s", "x"};
  }
  return out;
}

MarkovReport markov_fuzz(const BraidWord& b, int moves, std::mt19937& rng, int max_strands) {
  b.validate();
  OcneanuTrace tr;
  MarkovReport rep;
  rep.reference = homfly(b, tr).x;
  BraidWord cur = b;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

  for (int m = 0; m < moves; ++m) {
    const int n = cur.n;
    const bool can_destab = n >= 2 && !cur.letters.empty() && std::abs(cur.letters.back()) == n - 1 &&
                            std::count_if(cur.letters.begin(), cur.letters.end(),
                                          [n](int l) { return std::abs(l) == n - 1; }) == 1;
    std::vector<int> options;
    if (n >= 2) options.push_back(0);
    if (!cur.letters.empty()) options.push_back(1);
    if (n < max_strands) options.push_back(2);
    if (can_destab) options.push_back(3);
    if (options.empty()) break;

    switch (options[static_cast<std::size_t>(pick(0, static_cast<int>(options.size()) - 1))]) {
      case 0: {
        const int g = pick(1, n - 1) * (pick(0, 1) ? 1 : -1);
        cur.letters.insert(cur.letters.begin(), -g);
        cur.letters.push_back(g);
        ++rep.conjugations;
        break;
      }
      case 1:
        std::rotate(cur.letters.begin(), cur.letters.begin() + 1, cur.letters.end());
        ++rep.conjugations;
        break;
      case 2:
        cur.letters.push_back(pick(0, 1) ? n : -n);
        cur.n = n + 1;
        ++rep.stabilizations;
        break;
      default:
        cur.letters.pop_back();
        cur.n = n - 1;
        ++rep.destabilizations;
        break;
    }
    ++rep.words_checked;
    if (homfly(cur, tr).x != rep.reference) {
      ++rep.violations;
      if (!rep.first_violation) rep.first_violation = cur;
    }
  }
  return rep;
}

}  // namespace refl
