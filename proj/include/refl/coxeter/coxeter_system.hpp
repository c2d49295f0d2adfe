#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "refl/coxeter/coxeter_matrix.hpp"
#include "refl/group/finite_group.hpp"

namespace refl {

/// Roots of a finite Coxeter system in coordinates of the simple roots.
/// Indices 0..N-1 are the positive roots with the simple roots first;
/// index N+i holds the negative of positive root i.
struct RootSystem {
  int rank = 0;
  std::size_t num_positive = 0;
  std::vector<CVector> roots;
  /// action[s][r] = index of s(root r).
  std::vector<std::vector<std::uint16_t>> action;

  std::size_t size() const { return roots.size(); }
  bool is_positive(std::size_t r) const { return r < num_positive; }
  std::size_t negate(std::size_t r) const { return r < num_positive ? r + num_positive : r - num_positive; }
  /// Index of a root given by coordinates, or size() if it is not a root.
  std::size_t find(const CVector& v) const;

  std::map<std::vector<Cyclotomic>, std::size_t> lookup;
};

/// Orbit closure of the simple roots. Positive roots are found breadth
/// first from the simple roots; exceeding `limit` positive roots throws
/// BudgetExceeded, which is how infinite groups are reported.
RootSystem generate_roots(const CMatrix& cartan, std::size_t limit = 10000);

/// Group element of a finite Coxeter group as the permutation it induces
/// on root indices.
using RootPerm = std::vector<std::uint16_t>;

class CoxeterGroup;

class CoxeterSystem {
 public:
  /// Uses the standard Cartan matrix.
  explicit CoxeterSystem(CoxeterMatrix m, std::size_t root_limit = 10000);
  CoxeterSystem(CoxeterMatrix m, CMatrix cartan, std::size_t root_limit = 10000);
  static CoxeterSystem of_type(std::string_view name) { return CoxeterSystem(CoxeterMatrix::of_type(name)); }

  int rank() const { return matrix_.rank(); }
  const CoxeterMatrix& coxeter_matrix() const { return matrix_; }
  const CMatrix& cartan() const { return cartan_; }
  const std::vector<CMatrix>& generator_matrices() const { return gens_; }
  const RootSystem& roots() const { return roots_; }
  std::size_t num_reflections() const { return roots_.num_positive; }

  RootPerm identity() const;
  RootPerm generator(int s) const;
  RootPerm multiply(const RootPerm& a, const RootPerm& b) const;
  RootPerm inverse(const RootPerm& a) const;
  RootPerm from_word(const Word& w) const;

  /// Number of positive roots sent to negative roots.
  int length(const RootPerm& w) const;
  bool is_left_descent(const RootPerm& w, int s) const;
  bool is_right_descent(const RootPerm& w, int s) const;
  /// Reduced word built by repeatedly removing the smallest left descent;
  /// this is the lexicographically least reduced word.
  Word reduced_word(const RootPerm& w) const;
  bool is_reduced(const Word& w) const { return length(from_word(w)) == static_cast<int>(w.size()); }
  RootPerm longest_element() const;
  /// Every reduced word of w.
  std::vector<Word> all_reduced_words(const RootPerm& w) const;

  /// Matrix on the simple-root basis: column s holds w(alpha_s).
  CMatrix matrix(const RootPerm& w) const;

  /// y <= w in the Bruhat order: y is a subexpression of the fixed reduced
  /// word reduced_word(w).
  bool bruhat_leq(const RootPerm& y, const RootPerm& w) const;
  /// All products of subexpressions of a word.
  std::set<RootPerm> subexpressions(const Word& w) const;

  /// Enumerates all elements; throws BudgetExceeded above `budget`.
  std::unique_ptr<CoxeterGroup> enumerate(std::size_t budget = kDefaultOrderBudget) const;

 private:
  CoxeterMatrix matrix_;
  CMatrix cartan_;
  std::vector<CMatrix> gens_;
  RootSystem roots_;
};

/// Enumerated finite Coxeter group. Word length equals Coxeter length.
class CoxeterGroup : public FiniteGroup<RootPerm, VectorHash> {
 public:
  CoxeterGroup(const CoxeterSystem& sys, std::size_t budget);
  const CoxeterSystem& system() const { return *sys_; }
  int dimension() const override { return sys_->rank(); }
  CMatrix matrix(std::size_t i) const override { return sys_->matrix(element(i)); }
  int length(std::size_t i) const { return word_length(i); }

 private:
  const CoxeterSystem* sys_;
};

/// Folds f(s_1) * ... * f(s_k) over a word with a caller-supplied monoid.
/// When `sys` is given the word is first checked to be reduced, and
/// std::invalid_argument is thrown otherwise.
template <class T, class Op>
T matsumoto_fold(const Word& word, T unit, const std::vector<T>& images, Op op,
                 const CoxeterSystem* sys = nullptr) {
  if (sys != nullptr && !sys->is_reduced(word)) throw std::invalid_argument("word is not reduced");
  T acc = std::move(unit);
  for (int s : word) acc = op(acc, images.at(static_cast<std::size_t>(s)));
  return acc;
}

}  // namespace refl
