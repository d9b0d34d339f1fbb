#include "ngo/io.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ngo/errors.hpp"

namespace ngo {

Quiver parse_quiver_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("graph file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges")) {
    throw InvalidArgument("graph file: expected an object with 'vertices' and 'edges'");
  }
  if (doc.contains("version") && doc["version"] != 1) {
    throw InvalidArgument("graph file: unsupported version " + doc["version"].dump());
  }
  if (!doc["vertices"].is_number_integer() || !doc["edges"].is_array()) {
    throw InvalidArgument("graph file: 'vertices' must be an integer and 'edges' an array");
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InvalidArgument("graph file: every edge must be a pair of integers, got " + e.dump());
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Quiver(doc["vertices"].get<int>(), std::move(edges));
}

Quiver load_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver_json(buf.str());
}

std::string quiver_to_json(const Quiver& q) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["vertices"] = q.vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : q.arrows()) doc["edges"].push_back({e.u, e.v});
  return doc.dump();
}

std::string to_dot(const Quiver& q, const std::string& name) {
  std::string out = "digraph " + name + " {\n";
  for (int v = 0; v < q.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (std::size_t k = 0; k < q.edge_count(); ++k) {
    const auto& e = q.arrows()[k];
    out += "  " + std::to_string(e.u) + " -> " + std::to_string(e.v) + " [label=\"e" + std::to_string(k + 1) + "\"];\n";
  }
  return out + "}\n";
}

std::string hex_encode(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::string hex_decode(const std::string& hex) {
  if (hex.size() % 2) throw InvalidArgument("hex string of odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw InvalidArgument(std::string("invalid hex digit '") + c + "'");
  };
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return out;
}

std::vector<std::vector<int>> adjacency_from_key(const std::string& key) {
  std::size_t pos = 0;
  auto take = [&]() -> std::uint32_t {
    if (pos + 4 > key.size()) throw InvalidArgument("canonical key truncated");
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x = (x << 8) | static_cast<unsigned char>(key[pos++]);
    return x;
  };
  const std::uint32_t r = take();
  if (r == 0 || r > 4096) throw InvalidArgument("canonical key has implausible vertex count");
  std::vector<std::vector<int>> adj(r, std::vector<int>(r, 0));
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = i; j < r; ++j) adj[i][j] = adj[j][i] = static_cast<int>(take());
  if (pos != key.size()) throw InvalidArgument("canonical key has trailing bytes");
  return adj;
}

namespace {

TuttePolynomial parse_terms(const std::string& text) {
  TuttePolynomial p;
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, ',')) {
    const auto a = term.find(':');
    const auto b = term.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) throw InvalidArgument("malformed cache term");
    BigInt c;
    if (c.set_str(term.substr(b + 1), 10) != 0 || c <= 0) throw InvalidArgument("malformed cache coefficient");
    p.add_term(std::stoi(term.substr(0, a)), std::stoi(term.substr(a + 1, b - a - 1)), c);
  }
  return p;
}

}  // namespace

CacheFile cache_load(const std::string& path, std::ostream& warn) {
  CacheFile out;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return out;
  std::ifstream in(path);
  if (!in) {
    warn << "warning: cannot read Tutte cache '" << path << "'; starting cold\n";
    return out;
  }
  std::string line;
  if (!std::getline(in, line) || line != CacheFile::kVersionTag) {
    warn << "warning: Tutte cache '" << path << "' has an unknown version tag; starting cold\n";
    return out;
  }
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto space = line.find(' ');
      if (space == std::string::npos) throw InvalidArgument("missing separator");
      const std::string key = hex_decode(line.substr(0, space));
      adjacency_from_key(key);
      out.entries.emplace(key, parse_terms(line.substr(space + 1)));
    }
  } catch (const std::exception& e) {
    warn << "warning: Tutte cache '" << path << "' is corrupt (" << e.what() << "); starting cold\n";
    return CacheFile{};
  }
  return out;
}

bool cache_store(const std::string& path, const CacheFile& cache, std::ostream& warn) {
  std::ofstream outf(path, std::ios::trunc);
  if (!outf) {
    warn << "warning: cannot write Tutte cache '" << path << "'\n";
    return false;
  }
  outf << CacheFile::kVersionTag << '\n';
  for (const auto& [key, poly] : cache.entries) {
    outf << hex_encode(key) << ' ';
    bool first = true;
    for (const auto& [e, c] : poly.terms()) {
      if (!first) outf << ',';
      first = false;
      outf << e.first << ':' << e.second << ':' << to_decimal(c);
    }
    outf << '\n';
  }
  return static_cast<bool>(outf);
}

CacheFile cache_snapshot(const TutteCache& cache) { return CacheFile{cache.snapshot()}; }

void cache_import(const CacheFile& file, TutteCache& cache) {
  for (const auto& [k, v] : file.entries) cache.insert(k, v);
}

}  // namespace ngo
