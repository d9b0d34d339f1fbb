#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "ngo/errors.hpp"
#include "ngo/graph.hpp"
#include "ngo/matroid.hpp"
#include "ngo/strings.hpp"
#include "oracles.hpp"

using namespace ngo;

namespace {
std::vector<long> row(const StringTable& t) {
  std::vector<long> out;
  for (const auto& p : partitions_of(t.n)) out.push_back(t.ranks.at(p).get_si());
  return out;
}
}  // namespace

TEST_CASE("rank four table") {
  CHECK(row(string_table(4, 0)) == std::vector<long>{1, 0, 0, 0, 0});
  CHECK(row(string_table(4, 1)) == std::vector<long>{1, 1, 1, 2, 6});
  CHECK(row(string_table(4, 2)) == std::vector<long>{1, 1, 0, 1, 3});
  CHECK(string_table(4, 2).q == 2);
  CHECK(string_table(4, -3).q == 1);
}

TEST_CASE("rank two and three") {
  CHECK(row(string_table(2, 1)) == std::vector<long>{1, 1});
  CHECK(row(string_table(2, 0)) == std::vector<long>{1, 0});
  CHECK(row(string_table(3, 1)) == std::vector<long>{1, 1, 2});
  CHECK(row(string_table(3, 3)) == std::vector<long>{1, 0, 0});
  CHECK_THROWS_AS(string_table(1, 0), InvalidArgument);
}

TEST_CASE("rank six, degree two") {
  CHECK(string_table(6, 2).ranks.at(Partition::parse("1,1,1,1,1,1")) == 80);
}

TEST_CASE("boundary rows and gcd invariance") {
  for (int n = 2; n <= 8; ++n) {
    const auto coprime = string_table(n, 1);
    const auto zero = string_table(n, 0);
    for (const auto& p : partitions_of(n)) {
      CHECK(coprime.ranks.at(p) == local_system_rank(p));
      CHECK(zero.ranks.at(p) == (p.r() == 1 ? 1 : 0));
    }
    for (int d = -16; d <= 16; ++d) {
      const auto a = string_table(n, d);
      const auto b = string_table(n, degree_gcd(n, d));
      CHECK(a.q == b.q);
      CHECK(a.ranks == b.ranks);
    }
  }
}

TEST_CASE("conservation: the general step reproduces every row") {
  for (int n = 2; n <= 7; ++n)
    for (int q = 1; q <= n; ++q) {
      if (n % q != 0) continue;
      const auto t = string_table(n, q);
      for (const auto& p : partitions_of(n)) {
        BigInt total = 0;
        for (const auto& c : string_contributions(n, q, p)) total += c.amount;
        CHECK(t.ranks.at(p) + total == local_system_rank(p));
      }
    }
}

TEST_CASE("top Betti numbers agree with the coprime row") {
  for (int g = 2; g <= 3; ++g)
    for (int n = 2; n <= 6; ++n) {
      const auto t = string_table(n, 1);
      for (const auto& p : partitions_of(n)) CHECK(top_betti(spectral_dual_graph(p, g)) == t.ranks.at(p));
    }
}

TEST_CASE("stratum dimensions") {
  const auto a = stratum_dims(Partition::parse("2"), 2);
  CHECK(a.dim_A == 5);
  CHECK(a.dim_S == 5);
  CHECK(a.codim_S == 0);
  CHECK(stratum_dims(Partition::parse("1,1"), 2).codim_S == 1);
  const auto b = stratum_dims(Partition::parse("1,1,1,1"), 2);
  CHECK(b.dim_A == 17);
  CHECK(b.dim_S == 8);
  CHECK(b.codim_S == 9);
  for (int n = 1; n <= 6; ++n)
    for (int g = 2; g <= 4; ++g)
      for (const auto& p : partitions_of(n)) {
        const auto s = stratum_dims(p, g);
        CHECK(s.codim_S == betti1(spectral_dual_graph(p, g)));
        CHECK(s.spectral_genus == s.genus_sum + s.edges - p.r() + 1);
      }
}

TEST_CASE("stabilization codimension") {
  CHECK(stabilization_codim(2, 2) == 2);
  CHECK(stabilization_codim(4, 2) == 10);
  CHECK(stabilization_codim(3, 3) == 14);
  for (int n = 2; n <= 10; ++n)
    for (int g = 2; g <= 5; ++g) CHECK(stabilization_codim(n, g) == stabilization_codim_closed_form(n, g));
}

TEST_CASE("graded ranks of the Ngo string") {
  const auto r = ngo_string_graded_ranks(Partition::parse("1,1"), 2);
  REQUIRE(r.size() == 2 * 4 + 1);
  CHECK(r[0] == 1);
  CHECK(r[1] == 8);
  CHECK(r[4] == 70);
  const auto s = ngo_string_graded_ranks(Partition::parse("1,1,1"), 2);
  CHECK(s[0] == 2);
}

TEST_CASE("report text is stable") {
  const std::string expected =
      "gcd(n,d)  {4}  {3,1}  {2,2}  {2,1,1}  {1,1,1,1}\n"
      "0         1    0      0      0        0\n"
      "1         1    1      1      2        6\n"
      "2         1    1      0      1        3\n";
  CHECK(table_report(4).to_text() == expected);
  const auto two = table_report(2);
  REQUIRE(two.rows.size() == 2);
  CHECK(two.rows[0].first == 0);
  CHECK(two.rows[1].first == 1);
}
