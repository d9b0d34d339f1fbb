#include <doctest.h>

#include "ngo/errors.hpp"
#include "ngo/hypertoric.hpp"

using namespace ngo;

TEST_CASE("Lawrence dimensions") {
  const Quiver triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(lawrence_dims(triangle) == std::pair<long, long>{4, 2});
  CHECK(lawrence_dims(Quiver(2, {{0, 1}})) == std::pair<long, long>{1, 0});
  const auto banana3 = Quiver(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(lawrence_dims(banana3) == std::pair<long, long>{5, 4});
  CHECK(lawrence_dims(spectral_dual_quiver(Partition::parse("2,2"), 2)) == std::pair<long, long>{15, 14});
  CHECK_THROWS_AS(lawrence_dims(Quiver(3, {{0, 1}})), InvalidArgument);
}

TEST_CASE("circuit relations are the rows of the boundary matrix") {
  const Quiver triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto rel = circuit_relations(triangle);
  REQUIRE(rel.size() == 2);
  const IntMatrix a = boundary_matrix(triangle);
  for (std::size_t i = 0; i < rel.size(); ++i) {
    CHECK(rel[i].index == static_cast<int>(i) + 2);
    CHECK(rel[i].coefficients == a.row(i));
  }
  CHECK(rel[0].to_string() == "z1w1 - z2w2");
  CHECK(rel[1].to_string() == "z2w2 - z3w3");
  const auto single = circuit_relations(Quiver(2, {{0, 1}}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].to_string() == "z1w1");
  CHECK(circuit_relations(Quiver(1, {})).empty());
}

TEST_CASE("strata of small quivers") {
  const Quiver banana2(2, {{0, 1}, {0, 1}});
  const auto strata = enumerate_strata(banana2);
  REQUIRE(strata.size() == 2);
  CHECK(strata[0].codim_in_Y == 0);
  CHECK(strata[0].deleted_loops == 2);
  CHECK(strata[1].codim_in_Y == 2);
  CHECK(strata[1].multiplicity == 1);

  const auto gamma = spectral_dual_quiver(Partition::parse("1,1,1"), 2);
  const auto s3 = enumerate_strata(gamma);
  CHECK(s3.size() == 5);
  CHECK(s3.back().b1_contracted == 4);
  CHECK(s3.back().multiplicity == 2);
  for (const auto& rec : s3) CHECK(2 * rec.fiber_dim == rec.codim_in_Y);
  CHECK(certify_small(gamma).passed);
  CHECK(certify_small(gamma).strata_checked == 4);
  CHECK_THROWS_AS(enumerate_strata(Quiver(13, {}), {}, 12), ResourceLimit);
}

TEST_CASE("local decomposition of banana_2") {
  const auto summands = local_decomposition(Quiver(2, {{0, 1}, {0, 1}}));
  REQUIRE(summands.size() == 2);
  CHECK(summands[0].stratum.codim_in_Y == 0);
  CHECK(summands[0].multiplicity == 1);
  CHECK(summands[1].stratum.vp == VertexPartition::singletons(2));
  CHECK(summands[1].multiplicity == 1);
}

TEST_CASE("local model dimensions") {
  const auto d = local_model_dims(Partition::parse("1,1"), 2);
  CHECK(d.s == 2);
  CHECK(d.b1 == 1);
  CHECK(d.d_dim == 1);
  CHECK(d.c_dim == 14);
  CHECK(d.dim_M == 10);
  CHECK(d.dim_Jbar == 17);
  for (int n = 1; n <= 8; ++n)
    for (int g = 2; g <= 5; ++g)
      for (const auto& p : partitions_of(n)) {
        const auto m = local_model_dims(p, g);
        CHECK(m.d_dim == m.d_dim_from_dimensions());
        CHECK(m.dim_Jbar == m.dim_X + m.c_dim);
      }
  CHECK_THROWS_AS(local_model_dims(Partition::parse("1,1"), 1), InvalidArgument);
}
