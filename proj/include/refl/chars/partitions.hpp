#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace refl {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;
/// A d-tuple of partitions, indexed from 0.
using DPartition = std::vector<Partition>;

int weight(const Partition& p);
int weight(const DPartition& a);
bool is_partition(const Partition& p);
Partition conjugate(const Partition& p);

/// Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);

/// All d-partitions of n. Tuples compare component by component, where a
/// heavier component comes first and equal weights compare reverse
/// lexicographically; for d = 2, n = 2 this gives
/// ([2],[]), ([1,1],[]), ([1],[1]), ([],[2]), ([],[1,1]).
std::vector<DPartition> d_partitions(int d, int n);

/// beta-numbers p_j + m - j, j = 1..m, strictly decreasing. Requires m at
/// least the number of parts.
std::vector<int> beta_set(const Partition& p, int m);
/// Inverse of beta_set; zero parts are dropped.
Partition from_beta_set(const std::vector<int>& beta);

/// "[2,1]" and "([2,1],[],[1])".
std::string to_string(const Partition& p);
std::string to_string(const DPartition& a);
/// Inverse of to_string; throws std::invalid_argument on malformed text.
Partition parse_partition(std::string_view text);
DPartition parse_d_partition(std::string_view text);

}  // namespace refl
