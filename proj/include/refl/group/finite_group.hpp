#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "refl/errors.hpp"
#include "refl/exact/matrix.hpp"

namespace refl {

using Word = std::vector<int>;

/// A finite group enumerated from a generating set, seen through index
/// tables only. Element 0 is the identity. Elements are numbered in
/// breadth-first order from the identity, right-multiplying by generators
/// in index order, so the word recorded for each element is the
/// shortlex-least word of minimal length.
class EnumeratedGroup {
 public:
  virtual ~EnumeratedGroup() = default;

  std::size_t order() const { return parent_.size(); }
  int num_generators() const { return ngens_; }

  /// Index of element(i) * generator(s).
  std::size_t right_mul(std::size_t i, int s) const { return right_[i * stride() + static_cast<std::size_t>(s)]; }
  /// Index of generator(s) * element(i).
  std::size_t left_mul(std::size_t i, int s) const { return left_[i * stride() + static_cast<std::size_t>(s)]; }
  std::size_t generator_index(int s) const { return right_mul(0, s); }

  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverse_[i]; }
  /// g_s^{-1} x g_s.
  std::size_t conjugate_by_generator(std::size_t x, int s) const;
  /// Multiplicative order of element i.
  int element_order(std::size_t i) const;

  /// Distance from the identity in the Cayley graph of the generators.
  int word_length(std::size_t i) const { return dist_[i]; }
  /// Shortlex-least word of minimal length (generator indices, 0-based).
  Word word(std::size_t i) const;
  std::size_t from_word(const Word& w) const;

  virtual int dimension() const = 0;
  /// Matrix of element i in the defining reflection representation.
  virtual CMatrix matrix(std::size_t i) const = 0;
  /// Human-readable element label; defaults to the canonical word.
  virtual std::string label(std::size_t i) const;
  /// Dimension of the fixed space of element i.
  virtual int fixed_space_dim(std::size_t i) const;
  virtual Cyclotomic det(std::size_t i) const { return determinant(matrix(i)); }

 protected:
  EnumeratedGroup() = default;

  std::size_t stride() const { return static_cast<std::size_t>(ngens_); }

  int ngens_ = 0;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> left_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::int32_t> parent_gen_;
  std::vector<std::int32_t> dist_;
  std::vector<std::uint32_t> inverse_;
  /// Canonical word of the inverse of each generator.
  std::vector<Word> gen_inverse_words_;
};

/// Enumerated group whose elements are values of type E with an explicit
/// multiplication.
template <class E, class Hash = std::hash<E>>
class FiniteGroup : public EnumeratedGroup {
 public:
  using Element = E;
  using Mul = std::function<E(const E&, const E&)>;

  /// Closes {identity} under right multiplication by the generators. Throws
  /// BudgetExceeded when more than `budget` elements appear.
  FiniteGroup(E identity, std::vector<E> gens, Mul mul, std::size_t budget = kDefaultOrderBudget)
      : gens_(std::move(gens)), mul_(std::move(mul)) {
    ngens_ = static_cast<int>(gens_.size());
    const std::size_t k = stride();
    elements_.push_back(identity);
    index_.emplace(std::move(identity), 0);
    parent_.push_back(0);
    parent_gen_.push_back(-1);
    dist_.push_back(0);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      right_.resize((head + 1) * k);
      for (int s = 0; s < ngens_; ++s) {
        E next = mul_(elements_[head], gens_[static_cast<std::size_t>(s)]);
        auto [it, inserted] = index_.try_emplace(next, elements_.size());
        if (inserted) {
          if (elements_.size() >= budget)
            throw BudgetExceeded("group order exceeds budget of " + std::to_string(budget) + " elements");
          elements_.push_back(std::move(next));
          parent_.push_back(static_cast<std::uint32_t>(head));
          parent_gen_.push_back(s);
          dist_.push_back(dist_[head] + 1);
        }
        right_[head * k + static_cast<std::size_t>(s)] = static_cast<std::uint32_t>(it->second);
      }
    }
    left_.resize(elements_.size() * k);
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (int s = 0; s < ngens_; ++s)
        left_[i * k + static_cast<std::size_t>(s)] =
            static_cast<std::uint32_t>(index_of_checked(mul_(gens_[static_cast<std::size_t>(s)], elements_[i])));
    inverse_.resize(elements_.size());
    inverse_[0] = 0;
    std::vector<int> gen_order(k);
    for (int s = 0; s < ngens_; ++s) gen_order[static_cast<std::size_t>(s)] = element_order(generator_index(s));
    for (std::size_t i = 1; i < elements_.size(); ++i) {
      // (p g)^{-1} = g^{-1} p^{-1}, with g^{-1} applied as powers of g on the left.
      const int s = parent_gen_[i];
      std::size_t x = inverse_[parent_[i]];
      const int ord = gen_order[static_cast<std::size_t>(s)];
      for (int r = 0; r < ord - 1; ++r) x = left_mul(x, s);
      inverse_[i] = static_cast<std::uint32_t>(x);
    }
    for (int s = 0; s < ngens_; ++s) gen_inverse_words_.push_back(word(inverse(generator_index(s))));
  }

  const E& element(std::size_t i) const { return elements_[i]; }
  const std::vector<E>& elements() const { return elements_; }
  const std::vector<E>& generators() const { return gens_; }
  std::optional<std::size_t> index_of(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  E mul(const E& a, const E& b) const { return mul_(a, b); }

 protected:
  std::size_t index_of_checked(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw InvariantViolation("product left the enumerated group");
    return it->second;
  }

 private:
  std::vector<E> gens_;
  Mul mul_;
  std::vector<E> elements_;
  std::unordered_map<E, std::size_t, Hash> index_;
};

/// Hash for small integer vectors such as permutations.
struct VectorHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

}  // namespace refl
