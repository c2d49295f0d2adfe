#include "refl/group/finite_group.hpp"

#include <algorithm>
#include <sstream>

namespace refl {

std::size_t EnumeratedGroup::multiply(std::size_t i, std::size_t j) const {
  std::size_t x = i;
  for (int s : word(j)) x = right_mul(x, s);
  return x;
}

std::size_t EnumeratedGroup::conjugate_by_generator(std::size_t x, int s) const {
  // g^{-1} x g: right-multiply by g, then left-multiply by g^{-1}.
  std::size_t y = right_mul(x, s);
  const Word& w = gen_inverse_words_[static_cast<std::size_t>(s)];
  // left multiplication by a word applies its letters from the right end.
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = left_mul(y, *it);
  return y;
}

int EnumeratedGroup::element_order(std::size_t i) const {
  int k = 1;
  std::size_t x = i;
  while (x != 0) {
    x = multiply(x, i);
    ++k;
  }
  return k;
}

Word EnumeratedGroup::word(std::size_t i) const {
  Word w;
  while (i != 0) {
    w.push_back(parent_gen_[i]);
    i = parent_[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::size_t EnumeratedGroup::from_word(const Word& w) const {
  std::size_t x = 0;
  for (int s : w) {
    if (s < 0 || s >= ngens_) throw std::invalid_argument("generator index out of range");
    x = right_mul(x, s);
  }
  return x;
}

std::string EnumeratedGroup::label(std::size_t i) const {
  const Word w = word(i);
  if (w.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << w[k];
  return os.str();
}

int EnumeratedGroup::fixed_space_dim(std::size_t i) const {
  CMatrix m = matrix(i);
  for (Eigen::Index k = 0; k < m.rows(); ++k) m(k, k) -= Cyclotomic(1);
  return dimension() - static_cast<int>(rank(m));
}

}  // namespace refl
