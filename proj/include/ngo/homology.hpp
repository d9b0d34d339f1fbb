#pragma once

#include <cstddef>
#include <vector>

#include "ngo/matroid.hpp"

namespace ngo {

/// Finite abstract simplicial complex given by its facets. The complex with
/// the single facet {} is the "empty complex" (only the empty face), whose
/// reduced homology is Q in degree -1.
class SimplicialComplex {
 public:
  SimplicialComplex(std::vector<int> vertices, std::vector<std::vector<int>> facets);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  /// Largest facet size minus one; -1 for the empty complex.
  int dimension() const;

  /// faces()[k + 1] lists the k-dimensional faces in lexicographic order,
  /// k = -1..dimension(). Throws ResourceLimit past `max_faces`.
  std::vector<std::vector<std::vector<int>>> faces(std::size_t max_faces) const;

 private:
  std::vector<int> vertices_;
  std::vector<std::vector<int>> facets_;
};

/// Bases of the cographic matroid as facets. Ground sets above 16 elements
/// are refused with ResourceLimit.
SimplicialComplex matroid_complex(const CographicMatroid& m, std::size_t max_ground = 16);

struct ReducedHomology {
  /// ranks[k + 1] = dim over Q of the reduced homology in degree k.
  std::vector<std::size_t> ranks;
  /// face_counts[k + 1] = number of k-faces (the -1 entry is 1).
  std::vector<std::size_t> face_counts;

  std::size_t rank_in_degree(int k) const;
  /// Highest degree with nonzero homology, or -2 when all vanish.
  int top_degree() const;
  /// Nonzero homology in at most one degree, and that degree is the top dimension.
  bool is_wedge_of_top_spheres() const;
  long euler_from_faces() const;
  long euler_from_homology() const;
};

/// Exact rational homology from integer boundary matrices.
ReducedHomology reduced_homology_ranks(const SimplicialComplex& c,
                                       std::size_t max_faces = std::size_t{1} << 20);

}  // namespace ngo
