#include <doctest.h>

#include <numeric>

#include "ngo/errors.hpp"
#include "ngo/partition.hpp"
#include "oracles.hpp"

using ngo::BigInt;
using ngo::Partition;

namespace {
Partition P(const char* s) { return Partition::parse(s); }

std::vector<std::string> names(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}
}  // namespace

TEST_CASE("partition canonicalizes and caches its statistics") {
  Partition p({1, 2, 1});
  CHECK(p.to_string() == "2,1,1");
  CHECK(p.n() == 4);
  CHECK(p.r() == 3);
  CHECK(p.multiplicities()[1] == 2);
  CHECK(p.multiplicities()[2] == 1);
  CHECK(P(" 3, 1 ") == Partition({1, 3}));
  CHECK_THROWS_AS(Partition({}), ngo::InvalidArgument);
  CHECK_THROWS_AS(Partition({2, 0}), ngo::InvalidArgument);
  CHECK_THROWS_AS(P("2,,1"), ngo::InvalidArgument);
  CHECK_THROWS_AS(P("a"), ngo::InvalidArgument);
}

TEST_CASE("partitions_of enumerates in reverse-lexicographic order") {
  CHECK(names(ngo::partitions_of(1)) == std::vector<std::string>{"1"});
  CHECK(names(ngo::partitions_of(4)) == std::vector<std::string>{"4", "3,1", "2,2", "2,1,1", "1,1,1,1"});
  CHECK(ngo::partitions_of(8).size() == 22);
  for (int n = 1; n <= 14; ++n) {
    const auto ps = ngo::partitions_of(n);
    CHECK(static_cast<long>(ps.size()) == oracle::partition_count(n));
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ngo::ReverseLex{}(ps[i], ps[i + 1]));
    for (const auto& p : ps) {
      int weighted = 0;
      for (std::size_t i = 0; i < p.multiplicities().size(); ++i) weighted += static_cast<int>(i) * p.multiplicities()[i];
      CHECK(weighted == n);
    }
  }
  CHECK_THROWS_AS(ngo::partitions_of(0), ngo::InvalidArgument);
}

TEST_CASE("admissible partitions") {
  CHECK(names(ngo::admissible_partitions(4, 2)) == std::vector<std::string>{"4", "2,2"});
  CHECK(names(ngo::admissible_partitions(4, 0)).size() == 5);
  CHECK(names(ngo::admissible_partitions(6, 4)) == std::vector<std::string>{"6", "3,3"});
  CHECK(names(ngo::admissible_partitions(7, 3)) == std::vector<std::string>{"7"});
  CHECK(names(ngo::admissible_partitions(9, -4)) == std::vector<std::string>{"9"});
  CHECK_THROWS_AS(ngo::admissible_partitions(1, 0), ngo::InvalidArgument);

  for (int n = 2; n <= 12; ++n)
    for (int d = -2 * n; d <= 2 * n; ++d) {
      const int q = std::gcd(n, std::abs(d));
      const auto adm = ngo::admissible_partitions(n, d);
      CHECK(static_cast<long>(adm.size()) == oracle::partition_count(q));
      CHECK(adm == ngo::admissible_partitions(n, q));
    }
}

TEST_CASE("grouping counts and enumerations") {
  CHECK(ngo::grouping_count(P("1,1,1,1"), P("2,2")) == 3);
  CHECK(ngo::grouping_count(P("2,1,1"), P("2,2")) == 1);
  CHECK(ngo::grouping_count(P("2,2"), P("2,2")) == 1);
  CHECK(ngo::grouping_count(P("3,1"), P("2,2")) == 0);
  CHECK_THROWS_AS(ngo::grouping_count(P("3,1"), P("2,1")), ngo::InvalidArgument);

  const auto g = ngo::grouping_enumerate(P("1,1,1,1"), P("2,2"));
  REQUIRE(g.size() == 3);
  for (const auto& grouping : g) CHECK(names(grouping) == std::vector<std::string>{"1,1", "1,1"});
  const auto g2 = ngo::grouping_enumerate(P("2,1,1"), P("2,2"));
  REQUIRE(g2.size() == 1);
  CHECK(names(g2[0]) == std::vector<std::string>{"2", "1,1"});
  const auto g3 = ngo::grouping_enumerate(P("4"), P("4"));
  REQUIRE(g3.size() == 1);
  CHECK(names(g3[0]) == std::vector<std::string>{"4"});
}

TEST_CASE("grouping counts agree with unpruned set-partition enumeration") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& fine : ngo::partitions_of(n)) {
      if (fine.r() > 8) continue;
      BigInt total = 0;
      for (const auto& coarse : ngo::partitions_of(n)) {
        const BigInt c = ngo::grouping_count(fine, coarse);
        CHECK(c == oracle::brute_grouping_count(fine.parts(), coarse.parts()));
        CHECK(ngo::grouping_enumerate(fine, coarse).size() == c.get_ui());
        total += c;
      }
      CHECK(total == oracle::bell(fine.r()));
      CHECK(ngo::grouping_count(fine, Partition({n})) == 1);
      CHECK(ngo::grouping_count(fine, fine) >= 1);
    }
}

TEST_CASE("local system rank and stabilizer order") {
  CHECK(ngo::local_system_rank(P("5")) == 1);
  CHECK(ngo::local_system_rank(P("2,1,1")) == 2);
  CHECK(ngo::local_system_rank(P("1,1,1,1")) == 6);
  CHECK(ngo::stabilizer_order(P("2,2")) == 2);
  CHECK(ngo::stabilizer_order(P("3,1")) == 1);
  CHECK(ngo::stabilizer_order(P("1,1,1,1")) == 24);
  CHECK(ngo::local_system_rank(Partition(std::vector<int>(30, 1))) == ngo::factorial(29));
}
