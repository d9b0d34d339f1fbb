#include "ngo/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>

#include "ngo/errors.hpp"

namespace ngo {

namespace {

using Mask = std::uint64_t;

// Lexicographic order on equal-size sorted vertex lists: the set holding
// the lowest differing vertex comes first.
bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

struct MaskedComplex {
  std::vector<int> labels;
  std::vector<std::vector<Mask>> levels;  // levels[k + 1]: k-faces, lex order
};

MaskedComplex enumerate_faces(const std::vector<int>& vertices, const std::vector<std::vector<int>>& facets,
                              std::size_t max_faces) {
  if (vertices.size() > 64) throw ResourceLimit("simplicial complex: more than 64 vertices");
  std::unordered_map<int, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);

  std::size_t top = 0;
  std::vector<std::vector<Mask>> by_size(1);
  for (const auto& f : facets) {
    Mask m = 0;
    for (int v : f) m |= Mask{1} << index.at(v);
    const auto size = static_cast<std::size_t>(std::popcount(m));
    if (by_size.size() <= size) by_size.resize(size + 1);
    by_size[size].push_back(m);
    top = std::max(top, size);
  }
  std::size_t total = 0;
  for (std::size_t size = top; size-- > 0;) {
    auto& upper = by_size[size + 1];
    std::sort(upper.begin(), upper.end());
    upper.erase(std::unique(upper.begin(), upper.end()), upper.end());
    total += upper.size();
    if (total > max_faces) {
      throw ResourceLimit("simplicial complex: more than " + std::to_string(max_faces) + " faces");
    }
    auto& lower = by_size[size];
    for (Mask m : upper) {
      for (Mask rest = m; rest; rest &= rest - 1) lower.push_back(m & ~(rest & (~rest + 1)));
    }
  }
  auto& bottom = by_size[0];
  bottom.assign(1, Mask{0});

  MaskedComplex out{vertices, std::move(by_size)};
  for (auto& level : out.levels) std::sort(level.begin(), level.end(), lex_less);
  return out;
}

using SparseColumn = std::vector<std::pair<std::size_t, BigInt>>;  // sorted by row

void normalize(SparseColumn& col) {
  BigInt g = 0;
  for (const auto& [r, v] : col) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& [r, v] : col) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// col <- b * col - a * pivot, where a, b are the low entries of col and pivot.
SparseColumn eliminate(const SparseColumn& col, const SparseColumn& pivot) {
  const BigInt a = col.back().second;
  const BigInt b = pivot.back().second;
  SparseColumn out;
  out.reserve(col.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
      out.emplace_back(col[i].first, b * col[i].second);
      ++i;
    } else if (i == col.size() || pivot[j].first < col[i].first) {
      out.emplace_back(pivot[j].first, -a * pivot[j].second);
      ++j;
    } else {
      BigInt v = b * col[i].second - a * pivot[j].second;
      if (v != 0) out.emplace_back(col[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  normalize(out);
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<int> vertices, std::vector<std::vector<int>> facets)
    : vertices_(std::move(vertices)), facets_(std::move(facets)) {
  for (auto& f : facets_) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw InvalidArgument("simplicial complex: repeated vertex in a facet");
    }
    for (int v : f) {
      if (std::find(vertices_.begin(), vertices_.end(), v) == vertices_.end()) {
        throw InvalidArgument("simplicial complex: facet uses unknown vertex " + std::to_string(v));
      }
    }
  }
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
  for (std::size_t i = 0; i < facets_.size(); ++i)
    for (std::size_t j = 0; j < facets_.size(); ++j) {
      if (i != j && std::includes(facets_[j].begin(), facets_[j].end(), facets_[i].begin(), facets_[i].end())) {
        throw InvalidArgument("simplicial complex: facets must be mutually non-contained");
      }
    }
}

int SimplicialComplex::dimension() const {
  std::size_t top = 0;
  for (const auto& f : facets_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

std::vector<std::vector<std::vector<int>>> SimplicialComplex::faces(std::size_t max_faces) const {
  const MaskedComplex mc = enumerate_faces(vertices_, facets_, max_faces);
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& level : mc.levels) {
    auto& dst = out.emplace_back();
    for (Mask m : level) {
      std::vector<int> face;
      for (Mask rest = m; rest; rest &= rest - 1) face.push_back(mc.labels[static_cast<std::size_t>(std::countr_zero(rest))]);
      dst.push_back(std::move(face));
    }
  }
  return out;
}

SimplicialComplex matroid_complex(const CographicMatroid& m, std::size_t max_ground) {
  const std::size_t s = m.ground_size();
  if (s > max_ground) {
    throw ResourceLimit("matroid_complex: ground set of " + std::to_string(s) + " elements exceeds " +
                        std::to_string(max_ground));
  }
  std::vector<int> vertices(s);
  for (std::size_t e = 0; e < s; ++e) vertices[e] = static_cast<int>(e);
  std::vector<std::vector<int>> bases;
  std::vector<bool> removed(s, false);
  std::vector<int> current;
  std::function<void(std::size_t)> grow = [&](std::size_t next) {
    if (current.size() == m.rank()) {
      bases.push_back(current);
      return;
    }
    for (std::size_t e = next; e < s; ++e) {
      if (s - e < m.rank() - current.size()) break;
      removed[e] = true;
      if (m.is_independent_mask(removed)) {
        current.push_back(static_cast<int>(e));
        grow(e + 1);
        current.pop_back();
      }
      removed[e] = false;
    }
  };
  grow(0);
  return {std::move(vertices), std::move(bases)};
}

std::size_t ReducedHomology::rank_in_degree(int k) const {
  const auto idx = static_cast<std::size_t>(k + 1);
  return (k < -1 || idx >= ranks.size()) ? 0 : ranks[idx];
}

int ReducedHomology::top_degree() const {
  for (std::size_t i = ranks.size(); i-- > 0;) {
    if (ranks[i] != 0) return static_cast<int>(i) - 1;
  }
  return -2;
}

bool ReducedHomology::is_wedge_of_top_spheres() const {
  const int dim = static_cast<int>(ranks.size()) - 2;
  for (int k = -1; k < dim; ++k) {
    if (rank_in_degree(k) != 0) return false;
  }
  return true;
}

long ReducedHomology::euler_from_faces() const {
  long chi = 0;
  for (std::size_t i = 0; i < face_counts.size(); ++i) chi += (i % 2 ? 1 : -1) * static_cast<long>(face_counts[i]);
  return chi;
}

long ReducedHomology::euler_from_homology() const {
  long chi = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) chi += (i % 2 ? 1 : -1) * static_cast<long>(ranks[i]);
  return chi;
}

ReducedHomology reduced_homology_ranks(const SimplicialComplex& c, std::size_t max_faces) {
  const MaskedComplex mc = enumerate_faces(c.vertices(), c.facets(), max_faces);
  const std::size_t levels = mc.levels.size();  // degrees -1..dim

  // boundary_rank[i]: rank of the boundary map out of level i (degree i - 1).
  std::vector<std::size_t> boundary_rank(levels + 1, 0);
  // Rows of level i that are pivots of reduced columns of level i + 1; the
  // matching columns of level i reduce to zero (clearing).
  std::vector<bool> cleared;
  for (std::size_t i = levels; i-- > 1;) {
    const auto& cols = mc.levels[i];
    const auto& rows = mc.levels[i - 1];
    std::unordered_map<Mask, std::size_t> row_index;
    row_index.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);

    std::vector<bool> next_cleared(rows.size(), false);
    std::unordered_map<std::size_t, SparseColumn> pivot_of_low;
    std::size_t rk = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!cleared.empty() && cleared[j]) continue;
      SparseColumn col;
      int sign = 1;
      for (Mask rest = cols[j]; rest; rest &= rest - 1) {
        const Mask bit = rest & (~rest + 1);
        col.emplace_back(row_index.at(cols[j] & ~bit), BigInt(sign));
        sign = -sign;
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      while (!col.empty()) {
        auto it = pivot_of_low.find(col.back().first);
        if (it == pivot_of_low.end()) break;
        col = eliminate(col, it->second);
      }
      if (!col.empty()) {
        next_cleared[col.back().first] = true;
        pivot_of_low.emplace(col.back().first, std::move(col));
        ++rk;
      }
    }
    boundary_rank[i] = rk;
    cleared = std::move(next_cleared);
  }

  ReducedHomology h;
  for (std::size_t i = 0; i < levels; ++i) {
    const std::size_t f = mc.levels[i].size();
    h.face_counts.push_back(f);
    h.ranks.push_back(f - boundary_rank[i] - boundary_rank[i + 1]);
  }
  return h;
}

}  // namespace ngo
