#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ngo/bigint.hpp"

namespace ngo {

/// An integer partition n = n_1 + ... + n_r with n_1 >= ... >= n_r >= 1.
///
/// Parts are canonicalized (sorted weakly decreasing) on construction, so two
/// Partition values compare equal iff they are the same multiset.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  /// Parses "2,1,1". Whitespace around parts is ignored.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int r() const { return static_cast<int>(parts_.size()); }

  /// alpha[i] = number of parts equal to i, for i = 0..n (alpha[0] == 0).
  const std::vector<int>& multiplicities() const { return alpha_; }

  std::string to_string() const;
  /// "{2,1,1}", the notation used in report headers.
  std::string to_braced() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  std::strong_ordering operator<=>(const Partition& other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
  std::vector<int> alpha_;
};

/// Strict weak order putting {4} before {3,1} before {2,2}: reverse
/// lexicographic on the decreasing part lists.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const {
    return a.parts() > b.parts();
  }
};

template <class V>
using PartitionMap = std::map<Partition, V, ReverseLex>;

/// A grouping of the parts of a fine partition into blocks; each block is a
/// canonical Partition, blocks listed in reverse-lex order.
using Grouping = std::vector<Partition>;

std::vector<Partition> partitions_of(int n);

/// Partitions of n whose parts n_i satisfy n_i * d / n in Z.
std::vector<Partition> admissible_partitions(int n, long long d);

/// Number of ways to group the (labeled) parts of `fine` into unordered
/// blocks whose block sums form the multiset `coarse`.
BigInt grouping_count(const Partition& fine, const Partition& coarse);

/// The groupings counted by grouping_count, one entry per labeled grouping.
std::vector<Grouping> grouping_enumerate(const Partition& fine, const Partition& coarse);

/// (r-1)!, the rank of the local system attached to the stratum of p.
BigInt local_system_rank(const Partition& p);

/// prod_i alpha_i!, the order of the stabilizer of p in S_r.
BigInt stabilizer_order(const Partition& p);

}  // namespace ngo
