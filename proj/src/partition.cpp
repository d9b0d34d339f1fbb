#include "ngo/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "ngo/errors.hpp"

namespace ngo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("partition must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  alpha_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (int p : parts_) ++alpha_[static_cast<std::size_t>(p)];
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_braced() const { return "{" + to_string() + "}"; }

std::vector<Partition> partitions_of(int n) {
  if (n <= 0) throw InvalidArgument("partitions_of: n must be positive");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest first part first gives reverse-lexicographic order directly.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> admissible_partitions(int n, long long d) {
  if (n < 2) throw InvalidArgument("admissible_partitions: n must be at least 2");
  std::vector<Partition> out;
  for (auto& p : partitions_of(n)) {
    bool ok = std::all_of(p.parts().begin(), p.parts().end(),
                          [&](int part) { return (static_cast<long long>(part) * d) % n == 0; });
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

namespace {

// Restricted-growth enumeration of set partitions of the labeled parts,
// pruned by block sum and block count. `visit` receives the block index of
// every item.
void for_each_grouping(const Partition& fine, const Partition& coarse,
                       const std::function<void(const std::vector<int>&, int)>& visit) {
  if (fine.n() != coarse.n()) {
    throw InvalidArgument("grouping: partitions " + fine.to_string() + " and " +
                          coarse.to_string() + " have different sums");
  }
  const auto& items = fine.parts();
  const auto& targets = coarse.parts();
  const int max_target = targets.front();
  const int max_blocks = coarse.r();

  std::vector<int> assignment(items.size(), -1);
  std::vector<int> sums;
  sums.reserve(items.size());

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == items.size()) {
      if (static_cast<int>(sums.size()) != max_blocks) return;
      std::vector<int> sorted = sums;
      std::sort(sorted.begin(), sorted.end(), std::greater<>());
      if (sorted == targets) visit(assignment, static_cast<int>(sums.size()));
      return;
    }
    for (std::size_t b = 0; b < sums.size(); ++b) {
      if (sums[b] + items[k] > max_target) continue;
      sums[b] += items[k];
      assignment[k] = static_cast<int>(b);
      rec(k + 1);
      sums[b] -= items[k];
    }
    if (static_cast<int>(sums.size()) < max_blocks && items[k] <= max_target) {
      sums.push_back(items[k]);
      assignment[k] = static_cast<int>(sums.size()) - 1;
      rec(k + 1);
      sums.pop_back();
    }
    assignment[k] = -1;
  };
  rec(0);
}

}  // namespace

BigInt grouping_count(const Partition& fine, const Partition& coarse) {
  BigInt count = 0;
  for_each_grouping(fine, coarse, [&](const std::vector<int>&, int) { ++count; });
  return count;
}

std::vector<Grouping> grouping_enumerate(const Partition& fine, const Partition& coarse) {
  std::vector<Grouping> out;
  for_each_grouping(fine, coarse, [&](const std::vector<int>& assignment, int blocks) {
    std::vector<std::vector<int>> members(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      members[static_cast<std::size_t>(assignment[i])].push_back(fine.parts()[i]);
    }
    Grouping g;
    g.reserve(members.size());
    for (auto& m : members) g.emplace_back(std::move(m));
    std::sort(g.begin(), g.end(), ReverseLex{});
    out.push_back(std::move(g));
  });
  return out;
}

BigInt local_system_rank(const Partition& p) {
  return factorial(static_cast<unsigned long>(p.r() - 1));
}

BigInt stabilizer_order(const Partition& p) {
  BigInt out = 1;
  for (int a : p.multiplicities()) out *= factorial(static_cast<unsigned long>(a));
  return out;
}

}  // namespace ngo
