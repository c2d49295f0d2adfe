#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "refl/exact/integer.hpp"
#include "refl/exact/laurent.hpp"

namespace refl {

using LaurentZ = LaurentPoly<Integer>;
/// Laurent polynomials in two variables; the outer variable prints first.
using LaurentZ2 = LaurentPoly<LaurentZ>;
/// One-line notation, 0-based: perm[j] is the image of j.
using Perm = std::vector<int>;

/// Braid on n strands; letter i > 0 is the Artin generator s_i, -i its inverse.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  /// Throws std::invalid_argument for n < 1 or letters out of range.
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// "n: i j -k ...". Throws std::invalid_argument.
BraidWord parse_braid(std::string_view text);

int perm_length(const Perm& w);
/// Generators i_1, ..., i_k (1-based) with w = s_{i_1} ... s_{i_k} reduced.
std::vector<int> reduced_word(const Perm& w);
Perm perm_from_word(int n, const std::vector<int>& gens);
int cycle_count(const Perm& w);

/// u and v as elements of Z[u^±1, v^±1], with u outermost.
LaurentZ2 hecke_u(int k = 1);
LaurentZ2 hecke_v(int k = 1);

/// Element sum c_w T_w of the Hecke algebra of S_n with
/// T_s^2 = u T_1 + v T_s.
class HeckeElement {
 public:
  using Terms = std::map<Perm, LaurentZ2>;

  explicit HeckeElement(int n = 1);
  static HeckeElement identity(int n);
  static HeckeElement basis(const Perm& w);

  int strands() const { return n_; }
  const Terms& terms() const { return t_; }
  LaurentZ2 coeff(const Perm& w) const;
  bool is_zero() const { return t_.empty(); }
  void add_term(const Perm& w, const LaurentZ2& c);

  /// Right multiplication by T_{s_i} or, if inverse, by T_{s_i}^{-1}.
  /// Throws std::out_of_range unless 1 <= i <= n-1.
  HeckeElement mul_by_generator(int i, bool inverse = false) const;
  /// Image under the inclusion H(S_n) -> H(S_{n+1}).
  HeckeElement included() const;

  HeckeElement& operator+=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator*(const LaurentZ2& c, const HeckeElement& h);
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// Terms in increasing length, e.g. "(uv)T[1 2]+(u+v^2)T[2 1]".
  std::string to_string() const;

 private:
  int n_;
  Terms t_;
};

HeckeElement braid_to_hecke(const BraidWord& b);

/// The Markov trace tau_n. Values on basis elements are memoised, so one
/// evaluator should be reused across related calls.
class OcneanuTrace {
 public:
  LaurentZ2 operator()(const HeckeElement& h);
  LaurentZ2 basis(const Perm& w);
  std::size_t cache_size() const { return cache_.size(); }

 private:
  std::map<Perm, LaurentZ2> cache_;
};

LaurentZ2 ocneanu_trace(const HeckeElement& h);

struct LinkInvariant {
  int strands = 1;
  int components = 1;
  LaurentZ2 x;  // in (u, v)

  std::string to_string() const { return x.to_string({"u", "v"}); }
};

LinkInvariant homfly(const BraidWord& b);
LinkInvariant homfly(const BraidWord& b, OcneanuTrace& tr);

enum class SpecTarget { jones, alexander, homfly_tx };

std::optional<SpecTarget> parse_spec_target(std::string_view name);
std::string spec_target_name(SpecTarget t);

/// Specialisation in t (with s = sqrt(t) when half powers survive), or in
/// (t, x) for homfly_tx.
struct Specialization {
  SpecTarget target = SpecTarget::jones;
  LaurentZ2 value;
  std::vector<std::string> vars;

  std::string to_string() const { return value.to_string(vars); }
};

/// Throws std::domain_error if the substituted value is not a Laurent
/// polynomial.
Specialization specialize(const LinkInvariant& inv, SpecTarget target);

struct MarkovReport {
  LaurentZ2 reference;
  int words_checked = 0;
  int conjugations = 0;
  int stabilizations = 0;
  int destabilizations = 0;
  int violations = 0;
  std::optional<BraidWord> first_violation;
};

/// Random walk of Markov moves starting at b; every intermediate word is
/// compared against homfly(b). Strand count stays at most max_strands.
MarkovReport markov_fuzz(const BraidWord& b, int moves, std::mt19937& rng, int max_strands = 6);

}  // namespace refl
