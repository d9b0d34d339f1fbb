#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ngo/graph.hpp"
#include "ngo/matroid.hpp"
#include "ngo/partition.hpp"

namespace ngo {

/// Sum_e a_e z_e w_e, the generator of the circuit ideal attached to
/// vertex `index` (2..r). `coefficients` is row index-2 of the boundary matrix.
struct CircuitRelation {
  int index = 2;
  std::vector<BigInt> coefficients;

  /// "z1w1 - z2w2"; edges are numbered from 1. "0" when all coefficients vanish.
  std::string to_string() const;
};

struct StratumRecord {
  VertexPartition vp;
  Quiver contracted;            // loop-free
  std::size_t deleted_loops = 0;
  long b1_contracted = 0;
  long codim_in_X = 0;          // b1 + s of the contracted quiver
  long codim_in_Y = 0;          // 2 * b1
  long fiber_dim = 0;           // b1
  BigInt multiplicity;          // top Betti number of the contracted graph
  std::string key;              // canonical key of the contracted graph
};

/// (dim X(Q±), dim Y(Q)) = (b1 + s, 2 b1).
std::pair<long, long> lawrence_dims(const Quiver& q);

std::vector<CircuitRelation> circuit_relations(const Quiver& q);

/// One record per vertex partition, sorted by (codim_in_Y, key, vp).
/// Refuses quivers with more than `max_vertices` vertices.
std::vector<StratumRecord> enumerate_strata(const Quiver& q, const TutteOptions& options = {},
                                            int max_vertices = 12);

struct SmallnessCertificate {
  bool passed = true;
  std::size_t strata_checked = 0;     // strata with at least one edge
  std::optional<StratumRecord> violation;
};

/// Checks b1(Q_V) < s(Q_V) on every stratum whose contraction has edges.
SmallnessCertificate certify_small(const Quiver& q, const TutteOptions& options = {});

struct LocalSummand {
  StratumRecord stratum;
  BigInt multiplicity;
};

/// Semismall decomposition bookkeeping over all strata. Throws
/// InternalConsistency if some stratum is not relevant (2 fiber != codim).
std::vector<LocalSummand> local_decomposition(const Quiver& q, const TutteOptions& options = {});

struct LocalModelDims {
  int n = 0;
  int genus = 0;
  Partition partition{std::vector<int>{1}};
  long s = 0;
  long b1 = 0;
  long d_dim = 0;     // (n^2-1)(g-1) - 1 - b1
  long c_dim = 0;     // 4n^2(g-1) + 1 - b1 - s
  long dim_M = 0;     // 2(n^2(g-1) + 1)
  long dim_Y = 0;     // 2 b1
  long dim_X = 0;     // b1 + s
  long dim_Jbar = 0;  // 4(n^2(g-1) + 1) - 3

  /// (dim_M - dim_Y) / 2 - g - 1, the second expression for d_dim.
  long d_dim_from_dimensions() const { return (dim_M - dim_Y) / 2 - genus - 1; }
};

LocalModelDims local_model_dims(const Partition& p, int genus);

}  // namespace ngo
