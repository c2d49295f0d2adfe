#include "refl/chars/partitions.hpp"

#include <algorithm>
#include <functional>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace refl {

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int weight(const DPartition& a) {
  int w = 0;
  for (const auto& p : a) w += weight(p);
  return w;
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) return false;
  return true;
}

Partition conjugate(const Partition& p) {
  Partition out;
  for (int j = 1; !p.empty() && j <= p.front(); ++j)
    out.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [j](int x) { return x >= j; })));
  return out;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<DPartition> d_partitions(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("d-partitions need d >= 1 and n >= 0");
  std::vector<DPartition> out;
  DPartition cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == d - 1) {
      for (const auto& p : partitions(left)) {
        cur.push_back(p);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int w = left; w >= 0; --w)
      for (const auto& p : partitions(w)) {
        cur.push_back(p);
        rec(left - w);
        cur.pop_back();
      }
  };
  rec(n);
  return out;
}

std::vector<int> beta_set(const Partition& p, int m) {
  if (m < static_cast<int>(p.size())) throw std::invalid_argument("beta-set shorter than the partition");
  std::vector<int> out;
  for (int j = 0; j < m; ++j) out.push_back((j < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(j)] : 0) + m - 1 - j);
  return out;
}

Partition from_beta_set(const std::vector<int>& beta) {
  std::vector<int> b = beta;
  std::sort(b.rbegin(), b.rend());
  Partition out;
  const int m = static_cast<int>(b.size());
  for (int j = 0; j < m; ++j) {
    const int part = b[static_cast<std::size_t>(j)] - (m - 1 - j);
    if (part < 0) throw std::invalid_argument("not a beta-set");
    if (part > 0) out.push_back(part);
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string to_string(const DPartition& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + to_string(a[i]);
  return s + ")";
}

namespace {

Partition parse_partition_at(std::string_view text, std::size_t& pos) {
  auto fail = [&] { throw std::invalid_argument("malformed partition: " + std::string(text)); };
  if (pos >= text.size() || text[pos] != '[') fail();
  ++pos;
  Partition p;
  while (pos < text.size() && text[pos] != ']') {
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) fail();
    p.push_back(std::stoi(std::string(text.substr(pos, end - pos))));
    pos = end;
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  if (pos >= text.size()) fail();
  ++pos;
  if (!is_partition(p)) fail();
  return p;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  Partition p = parse_partition_at(text, pos);
  if (pos != text.size()) throw std::invalid_argument("trailing text after partition: " + std::string(text));
  return p;
}

DPartition parse_d_partition(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("malformed d-partition: " + std::string(text)); };
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') fail();
  DPartition a;
  std::size_t pos = 1;
  while (pos + 1 < text.size()) {
    a.push_back(parse_partition_at(text, pos));
    if (pos + 1 < text.size()) {
      if (text[pos] != ',') fail();
      ++pos;
    }
  }
  if (a.empty()) fail();
  return a;
}

}  // namespace refl
