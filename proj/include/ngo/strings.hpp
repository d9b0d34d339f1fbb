#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ngo/bigint.hpp"
#include "ngo/partition.hpp"

namespace ngo {

/// Dimension data of the stratum S_p of the Hitchin base for genus g.
struct StratumDims {
  Partition partition{std::vector<int>{1}};
  int genus = 2;
  long dim_A = 0;                    // n^2(g-1) + 1
  long dim_S = 0;                    // sum_i (n_i^2(g-1) + 1)
  long codim_S = 0;
  std::vector<long> component_genera;
  long genus_sum = 0;
  long delta = 0;                    // b1 of the spectral dual graph
  long edges = 0;                    // s of the spectral dual graph
  long spectral_genus = 0;           // n^2(g-1) + 1

  long psi() const { return 3 - 2 * spectral_genus; }
};

StratumDims stratum_dims(const Partition& p, int genus);

/// 2 dim A_n - 2 max { r + (g-1) sum_i n_i^2 } over polystable types
/// (n_i, m_i) with sum m_i n_i = n other than the stable type (n, 1),
/// found by exhaustive enumeration.
long stabilization_codim(int n, int genus);
/// 4(g-1)(n-1) - 2.
long stabilization_codim_closed_form(int n, int genus);

/// rank in level l = C(2 dim S_p, l) * (r-1)!, l = 0..2 dim S_p.
std::vector<BigInt> ngo_string_graded_ranks(const Partition& p, int genus);

/// Ranks of the leading local systems of the Ngo strings of M(n, d).
struct StringTable {
  int n = 0;
  long long d = 0;
  int q = 0;  // gcd(n, d), with gcd(n, 0) = n
  PartitionMap<BigInt> ranks;
};

/// Throws ModelInconsistency if the recursion yields a negative rank.
StringTable string_table(int n, long long d);

/// The amount subtracted from (r-1)! for `p` on behalf of one proper
/// admissible partition `coarse`.
struct Contribution {
  Partition coarse;
  BigInt amount;
};

/// Evaluates the general recursion step for `p` at degree d, one entry per
/// m in admissible_partitions(n, d) other than {n}; applies to every gcd,
/// including the boundary rows that string_table fills directly.
std::vector<Contribution> string_contributions(int n, long long d, const Partition& p);

struct TableReport {
  int n = 0;
  /// (row label, table). Label 0 stands for gcd(n, d) = n, i.e. d = 0 mod n.
  std::vector<std::pair<int, StringTable>> rows;

  std::string to_text() const;
};

/// Row 0 first, then every proper divisor q of n in increasing order.
TableReport table_report(int n);

int degree_gcd(int n, long long d);

}  // namespace ngo
