#include "refl/group/classes.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace refl {

ClassPartition conjugacy_classes(const EnumeratedGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> orbit_of(n, kNone);
  std::vector<ConjClass> found;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (orbit_of[seed] != kNone) continue;
    ConjClass c;
    c.members.push_back(seed);
    orbit_of[seed] = found.size();
    for (std::size_t h = 0; h < c.members.size(); ++h)
      for (int s = 0; s < g.num_generators(); ++s) {
        const std::size_t y = g.conjugate_by_generator(c.members[h], s);
        if (orbit_of[y] == kNone) {
          orbit_of[y] = found.size();
          c.members.push_back(y);
        }
      }
    std::sort(c.members.begin(), c.members.end());
    c.l_min = std::numeric_limits<int>::max();
    for (std::size_t m : c.members) c.l_min = std::min(c.l_min, g.word_length(m));
    // Elements are numbered in shortlex order, so the first member of
    // minimal length has the least canonical word.
    c.representative = *std::find_if(c.members.begin(), c.members.end(),
                                     [&](std::size_t m) { return g.word_length(m) == c.l_min; });
    found.push_back(std::move(c));
  }
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = found[a];
    const auto& y = found[b];
    if (x.l_min != y.l_min) return x.l_min < y.l_min;
    if (x.size() != y.size()) return x.size() < y.size();
    return x.representative < y.representative;
  });
  ClassPartition cp;
  cp.class_of.assign(n, 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t m : found[order[k]].members) cp.class_of[m] = k;
    cp.classes.push_back(std::move(found[order[k]]));
  }
  return cp;
}

DescentPath gp_descent(const EnumeratedGroup& g, const ClassPartition& cp, std::size_t x) {
  const int target = cp.classes[cp.class_of[x]].l_min;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> from(g.order(), kNone);
  std::vector<int> via(g.order(), -1);
  std::deque<std::size_t> queue{x};
  from[x] = x;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    if (g.word_length(cur) == target) {
      DescentPath path;
      path.endpoint = cur;
      for (std::size_t y = cur; y != x; y = from[y]) path.steps.push_back({from[y], via[y]});
      std::reverse(path.steps.begin(), path.steps.end());
      return path;
    }
    for (int s = 0; s < g.num_generators(); ++s) {
      const std::size_t y = g.conjugate_by_generator(cur, s);
      if (from[y] != kNone || g.word_length(y) > g.word_length(cur)) continue;
      from[y] = cur;
      via[y] = s;
      queue.push_back(y);
    }
  }
  throw InvariantViolation("no length-non-increasing conjugation path reaches minimal length");
}

std::vector<std::size_t> involutions(const EnumeratedGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.inverse(i) == i) out.push_back(i);
  std::stable_sort(out.begin(), out.end(),
                   [&](std::size_t a, std::size_t b) { return g.word_length(a) < g.word_length(b); });
  return out;
}

std::pair<std::size_t, std::size_t> carter_decomposition(const EnumeratedGroup& g,
                                                         const std::vector<std::size_t>& invols,
                                                         std::size_t w) {
  for (std::size_t x : invols) {
    const std::size_t y = g.multiply(x, w);
    if (g.inverse(y) == y) return {x, y};
  }
  throw InvariantViolation("element is not a product of two involutions");
}

std::size_t conjugate_to_inverse(const EnumeratedGroup& g, const std::vector<std::size_t>& invols, std::size_t w) {
  const std::size_t target = g.inverse(w);
  auto works = [&](std::size_t c) { return g.multiply(g.multiply(c, w), g.inverse(c)) == target; };
  for (std::size_t c : invols)
    if (works(c)) return c;
  for (std::size_t c = 0; c < g.order(); ++c)
    if (works(c)) return c;
  throw InvariantViolation("element is not conjugate to its inverse");
}

std::size_t strong_conjugacy_components(const EnumeratedGroup& g, const ClassPartition& cp, std::size_t c) {
  const ConjClass& cls = cp.classes[c];
  std::vector<std::size_t> cmin;
  for (std::size_t m : cls.members)
    if (g.word_length(m) == cls.l_min) cmin.push_back(m);
  std::vector<std::size_t> parent(cmin.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto pos = [&](std::size_t e) {
    return static_cast<std::size_t>(std::lower_bound(cmin.begin(), cmin.end(), e) - cmin.begin());
  };
  for (std::size_t a = 0; a < cmin.size(); ++a) {
    const std::size_t x = cmin[a];
    for (std::size_t w = 0; w < g.order(); ++w) {
      const std::size_t wx = g.multiply(w, x);
      const std::size_t winv = g.inverse(w);
      // w x = y w with l(wx) = l(w) + l(x)
      if (g.word_length(wx) == g.word_length(w) + g.word_length(x)) {
        const std::size_t y = g.multiply(wx, winv);
        const std::size_t b = pos(y);
        if (b < cmin.size() && cmin[b] == y) parent[root(a)] = root(b);
      }
      // x w = w y with l(wy) = l(w) + l(y)
      const std::size_t y = g.multiply(winv, g.multiply(x, w));
      const std::size_t b = pos(y);
      if (b < cmin.size() && cmin[b] == y && g.word_length(g.multiply(w, y)) == g.word_length(w) + g.word_length(y))
        parent[root(a)] = root(b);
    }
  }
  std::size_t comps = 0;
  for (std::size_t a = 0; a < cmin.size(); ++a)
    if (root(a) == a) ++comps;
  return comps;
}

}  // namespace refl
