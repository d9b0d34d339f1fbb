#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls the library routine it is used to check.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ngo/bigint.hpp"
#include "ngo/graph.hpp"
#include "ngo/intmatrix.hpp"
#include "ngo/matroid.hpp"

namespace oracle {

using ngo::BigInt;

/// p(n) via the classical p(n, k) = p(n, k - 1) + p(n - k, k) table.
inline long partition_count(int n) {
  std::vector<std::vector<long>> t(static_cast<std::size_t>(n) + 1, std::vector<long>(static_cast<std::size_t>(n) + 1, 0));
  for (int k = 0; k <= n; ++k) t[0][static_cast<std::size_t>(k)] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k)
      t[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
          t[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)] + (m >= k ? t[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)] : 0);
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

/// Bell numbers by the Bell triangle.
inline long bell(int n) {
  std::vector<long> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<long> next{row.back()};
    for (long v : row) next.push_back(next.back() + v);
    row = next;
  }
  return row.front();
}

/// Every set partition of `items` labeled 0..k-1, unpruned, as a list of
/// block-sum multisets (sorted decreasing).
inline std::vector<std::vector<int>> all_block_sum_multisets(const std::vector<int>& items) {
  std::vector<std::vector<int>> out;
  std::vector<int> sums;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == items.size()) {
      auto s = sums;
      std::sort(s.rbegin(), s.rend());
      out.push_back(s);
      return;
    }
    for (std::size_t b = 0; b < sums.size(); ++b) {
      sums[b] += items[k];
      rec(k + 1);
      sums[b] -= items[k];
    }
    sums.push_back(items[k]);
    rec(k + 1);
    sums.pop_back();
  };
  rec(0);
  return out;
}

inline long brute_grouping_count(const std::vector<int>& fine, const std::vector<int>& coarse) {
  auto target = coarse;
  std::sort(target.rbegin(), target.rend());
  long c = 0;
  for (const auto& s : all_block_sum_multisets(fine)) c += (s == target);
  return c;
}

/// Kirchhoff: spanning trees = any cofactor of the Laplacian (loops ignored).
inline BigInt spanning_tree_count(const ngo::MultiGraph& g) {
  const auto r = static_cast<std::size_t>(g.vertex_count());
  if (r == 1) return 1;
  ngo::IntMatrix lap(r - 1, r - 1);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    if (u > 0) lap(u - 1, u - 1) += 1;
    if (v > 0) lap(v - 1, v - 1) += 1;
    if (u > 0 && v > 0) {
      lap(u - 1, v - 1) -= 1;
      lap(v - 1, u - 1) -= 1;
    }
  }
  return ngo::determinant(lap);
}

inline int components(int r, const std::vector<ngo::Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(r));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  int c = r;
  for (const auto& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --c;
    }
  }
  return c;
}

/// Plain one-edge-at-a-time deletion-contraction on an edge list, no memo,
/// no bundles.
inline ngo::TuttePolynomial naive_tutte(int r, std::vector<ngo::Edge> edges) {
  using ngo::TuttePolynomial;
  if (edges.empty()) return TuttePolynomial::constant(1);
  const ngo::Edge e = edges.back();
  edges.pop_back();
  if (e.is_loop()) return TuttePolynomial::monomial(0, 1) * naive_tutte(r, edges);
  auto contracted = [&] {
    std::vector<ngo::Edge> c;
    for (auto f : edges) {
      auto relabel = [&](int x) {
        if (x == e.v) x = e.u;
        return x > e.v ? x - 1 : x;
      };
      c.push_back({relabel(f.u), relabel(f.v)});
    }
    return c;
  };
  const bool bridge = components(r, edges) > components(r, [&] { auto all = edges; all.push_back(e); return all; }());
  if (bridge) return TuttePolynomial::monomial(1, 0) * naive_tutte(r - 1, contracted());
  return naive_tutte(r, edges) + naive_tutte(r - 1, contracted());
}

/// Tutte polynomial of the cographic matroid from its rank generating
/// function, sum_A (x-1)^{r*(E)-r*(A)} (y-1)^{|A|-r*(A)}, where r* is the
/// dual rank computed from graphic ranks of complements.
inline ngo::TuttePolynomial cographic_tutte_by_subsets(const ngo::MultiGraph& g) {
  const std::size_t s = g.edge_count();
  const int r = g.vertex_count();
  auto graphic_rank = [&](const std::vector<ngo::Edge>& es) { return r - components(r, es); };
  const int full_graphic = graphic_rank(g.edges());
  // Dual rank: r*(A) = |A| + r_G(E \ A) - r_G(E).
  const int dual_full = static_cast<int>(s) - full_graphic;
  // Expand (x-1)^a (y-1)^b into monomials.
  ngo::TuttePolynomial total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    std::vector<ngo::Edge> rest;
    int size = 0;
    for (std::size_t k = 0; k < s; ++k) {
      if (mask >> k & 1) ++size;
      else rest.push_back(g.edges()[k]);
    }
    const int dual_rank = size + graphic_rank(rest) - full_graphic;
    const int a = dual_full - dual_rank;
    const int b = size - dual_rank;
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) {
        BigInt c = ngo::binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(i)) *
                   ngo::binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(j));
        if ((a - i + b - j) % 2) c = -c;
        total.add_term(i, j, c);
      }
  }
  return total;
}

/// Isomorphism by trying every vertex bijection.
inline bool isomorphic(const ngo::MultiGraph& a, const ngo::MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const auto A = a.adjacency(), B = b.adjacency();
  std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i)
      for (std::size_t j = 0; j < perm.size() && ok; ++j)
        ok = A[i][j] == B[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(perm[j])];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline ngo::MultiGraph relabel(const ngo::MultiGraph& g, const std::vector<int>& perm, std::mt19937& rng) {
  std::vector<ngo::Edge> edges;
  for (const auto& e : g.edges()) {
    ngo::Edge f{perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]};
    if (rng() % 2) std::swap(f.u, f.v);
    edges.push_back(f);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return {g.vertex_count(), edges};
}

/// Connected loopless multigraph: a random spanning tree plus random extra edges.
inline ngo::MultiGraph random_connected(std::mt19937& rng, int max_vertices, int max_edges, bool loops = false) {
  std::uniform_int_distribution<int> vdist(1, max_vertices);
  int r = vdist(rng);
  r = std::min(r, max_edges + 1);
  std::vector<ngo::Edge> edges;
  for (int v = 1; v < r; ++v) {
    edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  }
  const int extra = std::uniform_int_distribution<int>(0, max_edges - static_cast<int>(edges.size()))(rng);
  for (int k = 0; k < extra; ++k) {
    int u = std::uniform_int_distribution<int>(0, r - 1)(rng);
    int v = std::uniform_int_distribution<int>(0, r - 1)(rng);
    if (u == v && !loops) {
      if (r == 1) continue;
      v = (u + 1) % r;
    }
    edges.push_back({u, v});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return {r, edges};
}

}  // namespace oracle
