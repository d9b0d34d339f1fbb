#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ngo/bigint.hpp"
#include "ngo/graph.hpp"

namespace ngo {

/// Sparse bivariate polynomial sum c_ij x^i y^j with nonnegative coefficients.
class TuttePolynomial {
 public:
  using Exponent = std::pair<int, int>;

  TuttePolynomial() = default;
  static TuttePolynomial constant(long c);
  static TuttePolynomial monomial(int i, int j, long c = 1);

  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int i, int j) const;
  void add_term(int i, int j, const BigInt& c);

  BigInt evaluate(const BigInt& x, const BigInt& y) const;
  /// Swaps the roles of x and y: T(x, y) -> T(y, x).
  TuttePolynomial swapped() const;

  TuttePolynomial& operator+=(const TuttePolynomial& other);
  friend TuttePolynomial operator+(TuttePolynomial a, const TuttePolynomial& b) { return a += b; }
  friend TuttePolynomial operator*(const TuttePolynomial& a, const TuttePolynomial& b);

  /// Canonical text: monomials by descending total degree, then descending
  /// x-degree, e.g. "x^2 + x + y".
  std::string to_string() const;

  bool operator==(const TuttePolynomial&) const = default;

 private:
  std::map<Exponent, BigInt> terms_;
};

/// Process-wide memo from canonical graph keys to Tutte polynomials.
/// Safe for concurrent readers and writers; inserting an existing key keeps
/// the stored value (the values are equal by construction).
class TutteCache {
 public:
  std::shared_ptr<const TuttePolynomial> find(const std::string& key) const;
  void insert(const std::string& key, TuttePolynomial poly);
  std::size_t size() const;
  void clear();
  std::map<std::string, TuttePolynomial> snapshot() const;

  static TutteCache& global();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const TuttePolynomial>> entries_;
};

struct TutteOptions {
  /// Consult and fill the cache; when false the recursion is recomputed.
  bool memoize = true;
  /// Upper bound on worker threads used for independent branches.
  unsigned threads = 1;
  TutteCache* cache = nullptr;  // nullptr means TutteCache::global()
};

/// Tutte polynomial of the graphic matroid of a connected multigraph, by
/// deletion-contraction on bundles of parallel edges.
TuttePolynomial tutte_polynomial(const MultiGraph& graph, const TutteOptions& options = {});

/// Cographic matroid of a connected multigraph: ground set = edge positions,
/// I independent iff removing I keeps the graph connected.
class CographicMatroid {
 public:
  explicit CographicMatroid(MultiGraph graph);

  const MultiGraph& graph() const { return graph_; }
  std::size_t ground_size() const { return graph_.edge_count(); }
  std::size_t rank() const { return rank_; }

  bool is_independent(const std::vector<std::size_t>& subset) const;
  bool is_independent_mask(const std::vector<bool>& removed) const;

  /// Tutte polynomial of the matroid itself: T_G(y, x).
  TuttePolynomial tutte(const TutteOptions& options = {}) const;

 private:
  MultiGraph graph_;
  std::size_t rank_ = 0;
};

/// Number of top spheres of the matroid complex of the cographic matroid,
/// T_G(1, 0); 1 when b1 == 0.
BigInt top_betti(const MultiGraph& graph, const TutteOptions& options = {});

struct FHVectors {
  std::vector<BigInt> f;  // f[i] = independent sets of size i, i = 0..rank
  std::vector<BigInt> h;
};

/// Enumerates the independent sets directly; ground sets above 32 elements
/// are refused with ResourceLimit.
FHVectors f_h_vectors(const CographicMatroid& m);

}  // namespace ngo
