#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "refl/exact/cyclotomic.hpp"
#include "refl/exact/integer.hpp"
#include "refl/exact/rational.hpp"

namespace refl {

/// Quotient a / b that must be exact in the ring of a and b.
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (!divides(b, a)) throw std::domain_error("inexact integer division");
  return divexact(a, b);
}
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Cyclotomic exact_quotient(const Cyclotomic& a, const Cyclotomic& b) { return a / b; }

inline std::string to_string(const Integer& a) { return a.to_string(); }
inline std::string to_string(const Rational& a) { return a.to_string(); }
inline std::string to_string(const Cyclotomic& a) { return a.to_string(); }

namespace detail {

/// One printed monomial: coefficient text and the variable part.
struct Term {
  std::string coeff;
  std::string mono;
};

inline std::string power_text(const std::string& var, int e) {
  if (e == 0) return {};
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

inline bool is_compound(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') return true;
  return false;
}

inline std::string render_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    std::string piece;
    if (t.mono.empty()) {
      piece = t.coeff;
    } else if (t.coeff == "1") {
      piece = t.mono;
    } else if (t.coeff == "-1") {
      piece = "-" + t.mono;
    } else if (is_compound(t.coeff)) {
      piece = "(" + t.coeff + ")" + t.mono;
    } else {
      piece = t.coeff + t.mono;
    }
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out;
}

template <class S>
void collect_terms(const S& a, const std::vector<std::string>&, std::size_t, const std::string& suffix,
                   std::vector<Term>& out) {
  out.push_back({to_string(a), suffix});
}

}  // namespace detail
}  // namespace refl
