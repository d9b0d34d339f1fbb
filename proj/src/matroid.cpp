#include "ngo/matroid.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "ngo/errors.hpp"

namespace ngo {

TuttePolynomial TuttePolynomial::constant(long c) { return monomial(0, 0, c); }

TuttePolynomial TuttePolynomial::monomial(int i, int j, long c) {
  TuttePolynomial p;
  p.add_term(i, j, BigInt(c));
  return p;
}

BigInt TuttePolynomial::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TuttePolynomial::add_term(int i, int j, const BigInt& c) {
  if (c == 0) return;
  auto& slot = terms_[{i, j}];
  slot += c;
  if (slot == 0) terms_.erase({i, j});
}

BigInt TuttePolynomial::evaluate(const BigInt& x, const BigInt& y) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    BigInt xi, yj;
    mpz_pow_ui(xi.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e.first));
    mpz_pow_ui(yj.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(e.second));
    total += c * xi * yj;
  }
  return total;
}

TuttePolynomial TuttePolynomial::swapped() const {
  TuttePolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e.second, e.first, c);
  return out;
}

TuttePolynomial& TuttePolynomial::operator+=(const TuttePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

TuttePolynomial operator*(const TuttePolynomial& a, const TuttePolynomial& b) {
  TuttePolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

std::string TuttePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, BigInt>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    if (!out.empty()) out += " + ";
    std::string mono;
    auto var = [&](char name, int power) {
      if (power == 0) return;
      if (!mono.empty()) mono += '*';
      mono += name;
      if (power > 1) mono += "^" + std::to_string(power);
    };
    var('x', e.first);
    var('y', e.second);
    if (mono.empty()) out += to_decimal(c);
    else if (c == 1) out += mono;
    else out += to_decimal(c) + "*" + mono;
  }
  return out;
}

std::shared_ptr<const TuttePolynomial> TutteCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : it->second;
}

void TutteCache::insert(const std::string& key, TuttePolynomial poly) {
  auto value = std::make_shared<const TuttePolynomial>(std::move(poly));
  std::unique_lock lock(mutex_);
  entries_.emplace(key, std::move(value));
}

std::size_t TutteCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void TutteCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

std::map<std::string, TuttePolynomial> TutteCache::snapshot() const {
  std::shared_lock lock(mutex_);
  std::map<std::string, TuttePolynomial> out;
  for (const auto& [k, v] : entries_) out.emplace(k, *v);
  return out;
}

TutteCache& TutteCache::global() {
  static TutteCache cache;
  return cache;
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

bool connected(const Adjacency& adj) {
  const std::size_t r = adj.size();
  std::vector<bool> seen(r, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < r; ++w) {
      if (!seen[w] && adj[v][w] > 0) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == r;
}

// 1 + y + ... + y^{k-1}, optionally with the constant 1 replaced by x.
TuttePolynomial bundle_factor(int k, bool bridge) {
  TuttePolynomial p;
  p.add_term(bridge ? 1 : 0, 0, 1);
  for (int j = 1; j < k; ++j) p.add_term(0, j, 1);
  return p;
}

class Solver {
 public:
  Solver(const TutteOptions& options)
      : memoize_(options.memoize), cache_(options.cache ? *options.cache : TutteCache::global()) {
    unsigned t = std::max(1u, options.threads);
    while ((1u << parallel_depth_) < t) ++parallel_depth_;
  }

  // adj is loopless and connected.
  TuttePolynomial solve(const Adjacency& adj, int depth) {
    const std::size_t r = adj.size();
    if (r == 1) return TuttePolynomial::constant(1);
    std::string key;
    if (memoize_) {
      key = canonical_key(adj);
      if (auto hit = cache_.find(key)) return *hit;
    }

    // Heaviest bundle first; ties broken by position.
    std::size_t bu = 0, bv = 0;
    int k = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (adj[i][j] > k) {
          k = adj[i][j];
          bu = i;
          bv = j;
        }

    Adjacency del = adj;
    del[bu][bv] = del[bv][bu] = 0;

    Adjacency con(r - 1, std::vector<int>(r - 1, 0));
    auto target = [&](std::size_t x) { return x == bv ? bu : (x > bv ? x - 1 : x); };
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) continue;
        const std::size_t ti = target(i), tj = target(j);
        if (ti != tj) con[ti][tj] += adj[i][j];
      }

    TuttePolynomial result;
    if (!connected(del)) {
      result = bundle_factor(k, true) * solve(con, depth + 1);
    } else if (depth < parallel_depth_) {
      auto deleted = std::async(std::launch::async, [&] { return solve(del, depth + 1); });
      TuttePolynomial contracted = bundle_factor(k, false) * solve(con, depth + 1);
      result = deleted.get() + contracted;
    } else {
      result = solve(del, depth + 1) + bundle_factor(k, false) * solve(con, depth + 1);
    }
    if (memoize_) cache_.insert(key, result);
    return result;
  }

 private:
  bool memoize_;
  TutteCache& cache_;
  int parallel_depth_ = 0;
};

}  // namespace

TuttePolynomial tutte_polynomial(const MultiGraph& graph, const TutteOptions& options) {
  if (!graph.is_connected()) throw InvalidArgument("tutte_polynomial: graph is not connected");
  Adjacency adj = graph.adjacency();
  int loops = 0;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    loops += adj[v][v];
    adj[v][v] = 0;
  }
  Solver solver(options);
  return TuttePolynomial::monomial(0, loops) * solver.solve(adj, 0);
}

CographicMatroid::CographicMatroid(MultiGraph graph) : graph_(std::move(graph)) {
  rank_ = static_cast<std::size_t>(betti1(graph_));
}

bool CographicMatroid::is_independent(const std::vector<std::size_t>& subset) const {
  std::vector<bool> removed(graph_.edge_count(), false);
  for (std::size_t e : subset) {
    if (e >= graph_.edge_count()) {
      throw InvalidArgument("is_independent: edge index " + std::to_string(e) + " out of range");
    }
    removed[e] = true;
  }
  return graph_.is_connected_without(removed);
}

bool CographicMatroid::is_independent_mask(const std::vector<bool>& removed) const {
  return graph_.is_connected_without(removed);
}

TuttePolynomial CographicMatroid::tutte(const TutteOptions& options) const {
  return tutte_polynomial(graph_, options).swapped();
}

BigInt top_betti(const MultiGraph& graph, const TutteOptions& options) {
  if (!graph.is_connected()) throw InvalidArgument("top_betti: graph is not connected");
  if (betti1(graph) == 0) return 1;
  return tutte_polynomial(graph, options).evaluate(1, 0);
}

FHVectors f_h_vectors(const CographicMatroid& m) {
  const std::size_t s = m.ground_size();
  const std::size_t d = m.rank();
  if (s > 32) throw ResourceLimit("f_h_vectors: ground set of " + std::to_string(s) + " elements exceeds 32");
  FHVectors out;
  out.f.assign(d + 1, BigInt(0));
  std::vector<bool> removed(s, false);
  // Independence is hereditary, so grow sets in increasing index order.
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t next, std::size_t size) {
    ++out.f[size];
    for (std::size_t e = next; e < s; ++e) {
      removed[e] = true;
      if (m.is_independent_mask(removed)) grow(e + 1, size + 1);
      removed[e] = false;
    }
  };
  grow(0, 0);
  out.h.assign(d + 1, BigInt(0));
  for (std::size_t k = 0; k <= d; ++k)
    for (std::size_t i = 0; i <= k; ++i) {
      BigInt term = binomial(static_cast<unsigned long>(d - i), static_cast<unsigned long>(k - i)) * out.f[i];
      if ((k - i) % 2) out.h[k] -= term;
      else out.h[k] += term;
    }
  return out;
}

}  // namespace ngo
