#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ngo/intmatrix.hpp"
#include "ngo/partition.hpp"

namespace ngo {

/// Edge endpoints. In a MultiGraph the pair is unordered; in a Quiver it is
/// (source, target).
struct Edge {
  int u = 0;
  int v = 0;
  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

/// Multigraph on vertices 0..r-1. Parallel edges and loops are allowed and
/// edges are labeled by their position in the edge list.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_connected() const;
  /// Connected after removing the edges whose positions are flagged.
  bool is_connected_without(const std::vector<bool>& removed) const;

  /// Symmetric r x r multiplicity matrix; diagonal entries count loops.
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const MultiGraph&) const = default;

 private:
  int vertex_count_ = 1;
  std::vector<Edge> edges_;
};

/// A multigraph together with an orientation of every edge.
class Quiver {
 public:
  Quiver() = default;
  /// Each edge is read as (source, target).
  explicit Quiver(MultiGraph oriented) : graph_(std::move(oriented)) {}
  Quiver(int vertex_count, std::vector<Edge> arrows) : graph_(vertex_count, std::move(arrows)) {}

  const MultiGraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  const std::vector<Edge>& arrows() const { return graph_.edges(); }

  bool operator==(const Quiver&) const = default;

 private:
  MultiGraph graph_;
};

/// A set partition of {0..r-1}. Blocks are kept sorted, and ordered by their
/// smallest element.
class VertexPartition {
 public:
  VertexPartition(int vertex_count, std::vector<std::vector<int>> blocks);

  static VertexPartition singletons(int vertex_count);
  static VertexPartition one_block(int vertex_count);
  /// Every set partition of {0..r-1}, in restricted-growth-string order.
  static std::vector<VertexPartition> all(int vertex_count);

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  /// block_of()[v] is the index of the block containing v.
  const std::vector<int>& block_of() const { return block_of_; }

  /// Treats `on_blocks` as a partition of this partition's blocks and returns
  /// the resulting coarser partition of the vertices.
  VertexPartition coarsen(const VertexPartition& on_blocks) const;

  std::string to_string() const;

  bool operator==(const VertexPartition&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

/// Dual graph of a generic nodal spectral curve of type p: one vertex per
/// part, n_i * n_j * (2g - 2) parallel edges between vertices i < j.
MultiGraph spectral_dual_graph(const Partition& p, int genus);
/// The same graph with every edge oriented from the smaller to the larger vertex.
Quiver spectral_dual_quiver(const Partition& p, int genus);

/// s - r + 1. Throws PreconditionViolation on a disconnected graph.
long betti1(const MultiGraph& graph);

/// Identifies the vertices of each block and drops the edges that become
/// loops. Surviving edges keep their relative order and orientation.
Quiver contract(const Quiver& quiver, const VertexPartition& vp);
/// Number of edges `contract` drops for this partition.
std::size_t internal_edge_count(const Quiver& quiver, const VertexPartition& vp);

/// Q±: edge k becomes edges 2k (same orientation) and 2k+1 (reversed).
Quiver doubled(const Quiver& quiver);

/// (r-1) x s matrix of e -> s(e) - t(e) in the basis v_0 - v_1, ..., v_0 - v_{r-1}.
IntMatrix boundary_matrix(const Quiver& quiver);

/// Isomorphism-invariant byte string: equal iff the multigraphs are
/// isomorphic (edge labels and orientations ignored).
std::string canonical_key(const MultiGraph& graph);
std::string canonical_key(const std::vector<std::vector<int>>& adjacency);

}  // namespace ngo
