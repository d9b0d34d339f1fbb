#include "ngo/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "ngo/errors.hpp"

namespace ngo {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw InvalidArgument("graph must have at least one vertex");
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") out of range for " + std::to_string(vertex_count_) + " vertices");
    }
  }
}

bool MultiGraph::is_connected() const {
  return is_connected_without(std::vector<bool>(edges_.size(), false));
}

bool MultiGraph::is_connected_without(const std::vector<bool>& removed) const {
  UnionFind uf(vertex_count_);
  int components = vertex_count_;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (k < removed.size() && removed[k]) continue;
    if (uf.unite(edges_[k].u, edges_[k].v)) --components;
  }
  return components == 1;
}

std::vector<std::vector<int>> MultiGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count_),
                                    std::vector<int>(static_cast<std::size_t>(vertex_count_), 0));
  for (const auto& e : edges_) {
    ++adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    if (!e.is_loop()) ++adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
  }
  return adj;
}

VertexPartition::VertexPartition(int vertex_count, std::vector<std::vector<int>> blocks)
    : vertex_count_(vertex_count), blocks_(std::move(blocks)) {
  if (vertex_count_ < 0) throw InvalidArgument("vertex partition: negative vertex count");
  block_of_.assign(static_cast<std::size_t>(vertex_count_), -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidArgument("vertex partition: empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (int v : blocks_[i]) {
      if (v < 0 || v >= vertex_count_) {
        throw InvalidArgument("vertex partition: vertex " + std::to_string(v) + " out of range");
      }
      if (block_of_[static_cast<std::size_t>(v)] != -1) {
        throw InvalidArgument("vertex partition: vertex " + std::to_string(v) + " in two blocks");
      }
      block_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (block_of_[static_cast<std::size_t>(v)] == -1) {
      throw InvalidArgument("vertex partition: vertex " + std::to_string(v) + " not covered");
    }
  }
}

VertexPartition VertexPartition::singletons(int vertex_count) {
  std::vector<std::vector<int>> blocks;
  for (int v = 0; v < vertex_count; ++v) blocks.push_back({v});
  return {vertex_count, std::move(blocks)};
}

VertexPartition VertexPartition::one_block(int vertex_count) {
  std::vector<int> all(static_cast<std::size_t>(vertex_count));
  std::iota(all.begin(), all.end(), 0);
  if (all.empty()) return {0, {}};
  return {vertex_count, {all}};
}

std::vector<VertexPartition> VertexPartition::all(int vertex_count) {
  std::vector<VertexPartition> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int v) {
    if (v == vertex_count) {
      out.emplace_back(vertex_count, blocks);
      return;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(v);
      rec(v + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({v});
    rec(v + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

VertexPartition VertexPartition::coarsen(const VertexPartition& on_blocks) const {
  if (on_blocks.vertex_count() != static_cast<int>(blocks_.size())) {
    throw InvalidArgument("coarsen: partition acts on " + std::to_string(on_blocks.vertex_count()) +
                          " blocks, have " + std::to_string(blocks_.size()));
  }
  std::vector<std::vector<int>> merged;
  for (const auto& group : on_blocks.blocks()) {
    std::vector<int> m;
    for (int b : group) {
      const auto& src = blocks_[static_cast<std::size_t>(b)];
      m.insert(m.end(), src.begin(), src.end());
    }
    merged.push_back(std::move(m));
  }
  return {vertex_count_, std::move(merged)};
}

std::string VertexPartition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += "|";
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(blocks_[i][j]);
    }
  }
  return out + "}";
}

MultiGraph spectral_dual_graph(const Partition& p, int genus) {
  if (genus < 2) throw InvalidArgument("spectral_dual_graph: genus must be at least 2");
  std::vector<Edge> edges;
  const auto& parts = p.parts();
  for (int i = 0; i < p.r(); ++i)
    for (int j = i + 1; j < p.r(); ++j) {
      const long count = static_cast<long>(parts[static_cast<std::size_t>(i)]) *
                         parts[static_cast<std::size_t>(j)] * (2L * genus - 2);
      for (long k = 0; k < count; ++k) edges.push_back({i, j});
    }
  return {p.r(), std::move(edges)};
}

Quiver spectral_dual_quiver(const Partition& p, int genus) {
  return Quiver(spectral_dual_graph(p, genus));
}

long betti1(const MultiGraph& graph) {
  if (!graph.is_connected()) throw PreconditionViolation("betti1: graph is not connected");
  return static_cast<long>(graph.edge_count()) - graph.vertex_count() + 1;
}

Quiver contract(const Quiver& quiver, const VertexPartition& vp) {
  if (vp.vertex_count() != quiver.vertex_count()) {
    throw InvalidArgument("contract: partition covers " + std::to_string(vp.vertex_count()) +
                          " vertices, quiver has " + std::to_string(quiver.vertex_count()));
  }
  std::vector<Edge> kept;
  const auto& block = vp.block_of();
  for (const auto& e : quiver.arrows()) {
    const int s = block[static_cast<std::size_t>(e.u)];
    const int t = block[static_cast<std::size_t>(e.v)];
    if (s != t) kept.push_back({s, t});
  }
  return Quiver(static_cast<int>(vp.block_count()), std::move(kept));
}

std::size_t internal_edge_count(const Quiver& quiver, const VertexPartition& vp) {
  const auto& block = vp.block_of();
  return static_cast<std::size_t>(std::count_if(quiver.arrows().begin(), quiver.arrows().end(), [&](const Edge& e) {
    return block[static_cast<std::size_t>(e.u)] == block[static_cast<std::size_t>(e.v)];
  }));
}

Quiver doubled(const Quiver& quiver) {
  std::vector<Edge> out;
  out.reserve(2 * quiver.edge_count());
  for (const auto& e : quiver.arrows()) {
    out.push_back({e.u, e.v});
    out.push_back({e.v, e.u});
  }
  return Quiver(quiver.vertex_count(), std::move(out));
}

IntMatrix boundary_matrix(const Quiver& quiver) {
  const int r = quiver.vertex_count();
  if (r < 2) throw InvalidArgument("boundary_matrix: need at least two vertices");
  IntMatrix a(static_cast<std::size_t>(r - 1), quiver.edge_count());
  // With f_k = v_0 - v_k (f_0 = 0): v_i - v_j = f_j - f_i.
  for (std::size_t k = 0; k < quiver.edge_count(); ++k) {
    const auto& e = quiver.arrows()[k];
    if (e.is_loop()) continue;
    if (e.v > 0) a(static_cast<std::size_t>(e.v - 1), k) += 1;
    if (e.u > 0) a(static_cast<std::size_t>(e.u - 1), k) -= 1;
  }
  return a;
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

// Equitable refinement: a vertex's new color is the rank of
// (old color, sorted multiset of (neighbor color, multiplicity)).
std::vector<int> refine(const Adjacency& adj, std::vector<int> colors) {
  const std::size_t r = adj.size();
  std::size_t distinct = std::set<int>(colors.begin(), colors.end()).size();
  for (;;) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(r);
    for (std::size_t v = 0; v < r; ++v) {
      sig[v].first = colors[v];
      for (std::size_t w = 0; w < r; ++w) {
        if (adj[v][w] != 0) sig[v].second.emplace_back(w == v ? -1 : colors[w], adj[v][w]);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < r; ++v) {
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    if (sorted.size() == distinct) return colors;
    distinct = sorted.size();
  }
}

std::string encode(const Adjacency& adj, const std::vector<int>& colors) {
  const std::size_t r = adj.size();
  std::vector<std::size_t> order(r);
  for (std::size_t v = 0; v < r; ++v) order[static_cast<std::size_t>(colors[v])] = v;
  std::string out;
  auto put = [&](std::uint32_t x) {
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((x >> shift) & 0xffu));
  };
  put(static_cast<std::uint32_t>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) put(static_cast<std::uint32_t>(adj[order[i]][order[j]]));
  return out;
}

void search(const Adjacency& adj, const std::vector<int>& colors, std::string& best, bool& have) {
  const std::size_t r = adj.size();
  std::map<int, std::vector<std::size_t>> cells;
  for (std::size_t v = 0; v < r; ++v) cells[colors[v]].push_back(v);
  const std::vector<std::size_t>* target = nullptr;
  for (const auto& [c, members] : cells) {
    if (members.size() > 1) {
      target = &members;
      break;
    }
  }
  if (!target) {
    std::string code = encode(adj, colors);
    if (!have || code < best) {
      best = std::move(code);
      have = true;
    }
    return;
  }
  // Individualize each vertex of the first non-singleton cell in turn.
  for (std::size_t v : *target) {
    std::vector<int> next(r);
    for (std::size_t w = 0; w < r; ++w) next[w] = 2 * colors[w] + ((colors[w] == colors[v] && w != v) ? 1 : 0);
    search(adj, refine(adj, next), best, have);
  }
}

}  // namespace

std::string canonical_key(const std::vector<std::vector<int>>& adjacency) {
  std::string best;
  bool have = false;
  search(adjacency, refine(adjacency, std::vector<int>(adjacency.size(), 0)), best, have);
  return best;
}

std::string canonical_key(const MultiGraph& graph) { return canonical_key(graph.adjacency()); }

}  // namespace ngo
