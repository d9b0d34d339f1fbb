#include "ngo/strings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "ngo/errors.hpp"
#include "ngo/graph.hpp"

namespace ngo {

int degree_gcd(int n, long long d) {
  return static_cast<int>(std::gcd(static_cast<long long>(n), d < 0 ? -d : d));
}

StratumDims stratum_dims(const Partition& p, int genus) {
  if (genus < 2) throw InvalidArgument("stratum_dims: genus must be at least 2");
  const long gm1 = genus - 1;
  const long n = p.n();
  StratumDims out;
  out.partition = p;
  out.genus = genus;
  out.dim_A = n * n * gm1 + 1;
  for (int part : p.parts()) {
    out.component_genera.push_back(static_cast<long>(part) * part * gm1 + 1);
  }
  out.genus_sum = std::accumulate(out.component_genera.begin(), out.component_genera.end(), 0L);
  out.dim_S = out.genus_sum;
  out.codim_S = out.dim_A - out.dim_S;
  out.spectral_genus = n * n * gm1 + 1;

  const MultiGraph gamma = spectral_dual_graph(p, genus);
  out.delta = betti1(gamma);
  out.edges = static_cast<long>(gamma.edge_count());

  if (out.codim_S != out.delta) {
    throw InternalConsistency("stratum_dims: codim S != b1 at " + p.to_string());
  }
  if (out.spectral_genus != out.genus_sum + out.edges - p.r() + 1) {
    throw InternalConsistency("stratum_dims: arithmetic genus mismatch at " + p.to_string());
  }
  return out;
}

long stabilization_codim(int n, int genus) {
  if (n < 2 || genus < 2) throw InvalidArgument("stabilization_codim: need n >= 2 and g >= 2");
  const long gm1 = genus - 1;
  long best = -1;
  // Multisets of (rank, multiplicity) pairs, generated in nonincreasing order.
  std::vector<std::pair<int, int>> types;
  std::function<void(int, std::pair<int, int>)> rec = [&](int remaining, std::pair<int, int> cap) {
    if (remaining == 0) {
      if (types.size() == 1 && types.front() == std::pair{n, 1}) return;
      long value = static_cast<long>(types.size());
      for (const auto& [rank, mult] : types) value += gm1 * rank * rank;
      best = std::max(best, value);
      return;
    }
    for (int rank = std::min(remaining, cap.first); rank >= 1; --rank) {
      const int max_mult = rank == cap.first ? cap.second : remaining / rank;
      for (int mult = std::min(max_mult, remaining / rank); mult >= 1; --mult) {
        types.emplace_back(rank, mult);
        rec(remaining - rank * mult, {rank, mult});
        types.pop_back();
      }
    }
  };
  rec(n, {n, n});
  return 2 * (static_cast<long>(n) * n * gm1 + 1) - 2 * best;
}

long stabilization_codim_closed_form(int n, int genus) {
  return 4L * (genus - 1) * (n - 1) - 2;
}

std::vector<BigInt> ngo_string_graded_ranks(const Partition& p, int genus) {
  const StratumDims dims = stratum_dims(p, genus);
  const BigInt lead = local_system_rank(p);
  const auto top = static_cast<unsigned long>(2 * dims.dim_S);
  std::vector<BigInt> out;
  out.reserve(top + 1);
  for (unsigned long l = 0; l <= top; ++l) {
    out.push_back(binomial(top, l) * lead);
  }
  return out;
}

namespace {

// Tables keyed by (n, gcd(n, d)); the recursion only ever sees the gcd.
class TableMemo {
 public:
  const PartitionMap<BigInt>& get(int n, int q) {
    {
      std::lock_guard lock(mutex_);
      auto it = tables_.find({n, q});
      if (it != tables_.end()) return it->second;
    }
    PartitionMap<BigInt> computed = compute(n, q);
    std::lock_guard lock(mutex_);
    return tables_.emplace(std::pair{n, q}, std::move(computed)).first->second;
  }

 private:
  PartitionMap<BigInt> compute(int n, int q);

  std::mutex mutex_;
  std::map<std::pair<int, int>, PartitionMap<BigInt>> tables_;
};

TableMemo& memo() {
  static TableMemo m;
  return m;
}

BigInt contribution(const Partition& fine, const Partition& coarse, int n, int q) {
  BigInt sum = 0;
  for (const auto& grouping : grouping_enumerate(fine, coarse)) {
    BigInt product = 1;
    for (const auto& block : grouping) {
      const int m = block.n();
      // gcd(m, d m / n) = q m / n for admissible m.
      const auto& sub = memo().get(m, q * m / n);
      product *= sub.at(block);
      if (product == 0) break;
    }
    sum += product;
  }
  return local_system_rank(coarse) * sum;
}

std::vector<Contribution> contributions_at(int n, long long d, int q, const Partition& p) {
  std::vector<Contribution> out;
  for (const auto& coarse : admissible_partitions(n, d)) {
    if (coarse.r() == 1) continue;
    out.push_back({coarse, contribution(p, coarse, n, q)});
  }
  return out;
}

PartitionMap<BigInt> TableMemo::compute(int n, int q) {
  PartitionMap<BigInt> ranks;
  const auto all = partitions_of(n);
  if (q == n) {
    for (const auto& p : all) ranks.emplace(p, p.r() == 1 ? 1 : 0);
    return ranks;
  }
  if (q == 1) {
    for (const auto& p : all) ranks.emplace(p, local_system_rank(p));
    return ranks;
  }
  for (const auto& p : all) {
    BigInt rank = local_system_rank(p);
    const auto parts = contributions_at(n, q, q, p);
    for (const auto& c : parts) rank -= c.amount;
    if (rank < 0) {
      std::string detail;
      for (const auto& c : parts) detail += " " + c.coarse.to_braced() + ":" + to_decimal(c.amount);
      throw ModelInconsistency("string_table(" + std::to_string(n) + ", gcd " + std::to_string(q) +
                               "): negative rank " + to_decimal(rank) + " at " + p.to_braced() +
                               "; contributions" + detail);
    }
    ranks.emplace(p, std::move(rank));
  }
  return ranks;
}

}  // namespace

StringTable string_table(int n, long long d) {
  if (n < 2) throw InvalidArgument("string_table: n must be at least 2");
  StringTable t;
  t.n = n;
  t.d = d;
  t.q = degree_gcd(n, d);
  t.ranks = memo().get(n, t.q);
  return t;
}

std::vector<Contribution> string_contributions(int n, long long d, const Partition& p) {
  if (n < 2) throw InvalidArgument("string_contributions: n must be at least 2");
  if (p.n() != n) throw InvalidArgument("string_contributions: partition does not sum to n");
  return contributions_at(n, d, degree_gcd(n, d), p);
}

TableReport table_report(int n) {
  if (n < 2) throw InvalidArgument("table_report: n must be at least 2");
  TableReport rep;
  rep.n = n;
  rep.rows.emplace_back(0, string_table(n, 0));
  for (int q = 1; q < n; ++q) {
    if (n % q == 0) rep.rows.emplace_back(q, string_table(n, q));
  }
  return rep;
}

std::string TableReport::to_text() const {
  const auto columns = partitions_of(n);
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back();
  cells.back().push_back("gcd(n,d)");
  for (const auto& p : columns) cells.back().push_back(p.to_braced());
  for (const auto& [label, table] : rows) {
    cells.emplace_back();
    cells.back().push_back(std::to_string(label));
    for (const auto& p : columns) cells.back().push_back(to_decimal(table.ranks.at(p)));
  }
  std::vector<std::size_t> width(columns.size() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      line += row[j];
      if (j + 1 < row.size()) line.append(width[j] - row[j].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

}  // namespace ngo
