#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ngo/graph.hpp"
#include "ngo/matroid.hpp"

namespace ngo {

/// Graph files are JSON objects
///
///   {"version": 1, "vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}
///
/// with 0-indexed [source, target] pairs; "version" may be omitted.
Quiver parse_quiver_json(const std::string& text);
Quiver load_quiver_file(const std::string& path);
std::string quiver_to_json(const Quiver& q);

/// Graphviz rendering; parallel edges are drawn individually.
std::string to_dot(const Quiver& q, const std::string& name = "Q");

std::string hex_encode(const std::string& bytes);
std::string hex_decode(const std::string& hex);

/// Inverse of canonical_key: the adjacency matrix in canonical vertex order.
std::vector<std::vector<int>> adjacency_from_key(const std::string& key);

/// On-disk Tutte memo. Text file; first line is the version tag, then one
/// entry per line: "<hex key> <i>:<j>:<coef>,<i>:<j>:<coef>,...".
struct CacheFile {
  static constexpr const char* kVersionTag = "ngo-tutte-cache v1";
  std::map<std::string, TuttePolynomial> entries;

  bool operator==(const CacheFile&) const = default;
};

/// Missing file: empty cache, silently. Unreadable, corrupt or
/// version-mismatched file: empty cache plus one line on `warn`.
CacheFile cache_load(const std::string& path, std::ostream& warn);
/// Returns false (after a line on `warn`) if the file cannot be written.
bool cache_store(const std::string& path, const CacheFile& cache, std::ostream& warn);

CacheFile cache_snapshot(const TutteCache& cache);
void cache_import(const CacheFile& file, TutteCache& cache);

}  // namespace ngo
