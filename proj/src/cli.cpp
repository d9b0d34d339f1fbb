#include "ngo/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngo/errors.hpp"
#include "ngo/graph.hpp"
#include "ngo/homology.hpp"
#include "ngo/hypertoric.hpp"
#include "ngo/intmatrix.hpp"
#include "ngo/io.hpp"
#include "ngo/matroid.hpp"
#include "ngo/partition.hpp"
#include "ngo/strings.hpp"

namespace ngo::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string dec(const BigInt& v) { return to_decimal(v); }
std::string dec(long v) { return std::to_string(v); }

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(dec(m(i, j)));
    rows.push_back(row);
  }
  return Json{{"rows", dec(static_cast<long>(m.rows()))}, {"cols", dec(static_cast<long>(m.cols()))}, {"entries", rows}};
}

Json ranks_json(const PartitionMap<BigInt>& ranks) {
  Json out = Json::object();
  for (const auto& [p, r] : ranks) out[p.to_string()] = dec(r);
  return out;
}

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + dec(values[i]);
  return out;
}

Json list_json(const std::vector<BigInt>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(dec(v));
  return out;
}

// Either --partition/--genus or --quiver FILE.
struct GraphSource {
  std::string partition;
  int genus = 2;
  std::string quiver_file;

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("--partition", partition, "Partition n_1,...,n_r of the spectral dual graph");
    cmd->add_option("--genus", genus, "Genus g >= 2 of the base curve")->capture_default_str();
    auto* q = cmd->add_option("--quiver", quiver_file, "Graph file (JSON: vertices, edges)");
    p->excludes(q);
    q->excludes(p);
  }

  Quiver load() const {
    if (!quiver_file.empty()) return load_quiver_file(quiver_file);
    if (partition.empty()) throw InvalidArgument("one of --partition or --quiver is required");
    return spectral_dual_quiver(Partition::parse(partition), genus);
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial invariants of the Hodge-to-singular correspondence for GL_n Hitchin systems", "ngo"};
  app.require_subcommand(1);

  bool json = false;
  std::string cache_path;
  unsigned threads = 1;
  app.add_flag("--json", json, "Machine-readable output (integers as decimal strings)");
  app.add_option("--cache", cache_path, "Tutte memo file (default: $NGO_STRINGS_CACHE)");
  app.add_option("--threads", threads, "Worker threads for Tutte branches")->check(CLI::PositiveNumber);

  std::function<void()> action;

  // strings
  int n = 0;
  long long d = 0;
  auto* strings_cmd = app.add_subcommand("strings", "Rank table of the leading local systems for M(n,d)");
  strings_cmd->add_option("--n", n, "Rank n >= 2")->required();
  strings_cmd->add_option("--d", d, "Degree d")->required();
  strings_cmd->callback([&] {
    action = [&] {
      const StringTable t = string_table(n, d);
      if (json) {
        out << Json{{"n", dec(static_cast<long>(t.n))}, {"d", std::to_string(t.d)}, {"gcd", dec(static_cast<long>(t.q))},
                    {"ranks", ranks_json(t.ranks)}}
                   .dump(2)
            << '\n';
        return;
      }
      out << "n: " << t.n << "\nd: " << t.d << "\ngcd: " << t.q << '\n';
      for (const auto& [p, r] : t.ranks) out << p.to_braced() << ": " << dec(r) << '\n';
    };
  });

  // report
  int report_n = 0;
  auto* report_cmd = app.add_subcommand("report", "gcd-indexed table of string ranks for rank n");
  report_cmd->add_option("--n", report_n, "Rank n >= 2")->required();
  report_cmd->callback([&] {
    action = [&] {
      const TableReport rep = table_report(report_n);
      if (json) {
        Json rows = Json::array();
        for (const auto& [label, t] : rep.rows) rows.push_back(Json{{"gcd", dec(static_cast<long>(label))}, {"ranks", ranks_json(t.ranks)}});
        out << Json{{"n", dec(static_cast<long>(rep.n))}, {"rows", rows}}.dump(2) << '\n';
        return;
      }
      out << rep.to_text();
    };
  });

  // partition
  int part_n = 0;
  std::optional<long long> part_d;
  std::string fine, coarse;
  auto* partition_cmd = app.add_subcommand("partition", "Partitions, admissible sets and grouping counts");
  partition_cmd->add_option("--n", part_n, "List partitions of n");
  partition_cmd->add_option("--d", part_d, "Restrict to partitions admissible for degree d");
  auto* fine_opt = partition_cmd->add_option("--fine", fine, "Fine partition for grouping counts");
  auto* coarse_opt = partition_cmd->add_option("--coarse", coarse, "Coarse partition for grouping counts");
  fine_opt->needs(coarse_opt);
  coarse_opt->needs(fine_opt);
  partition_cmd->callback([&] {
    action = [&] {
      if (!fine.empty()) {
        const Partition f = Partition::parse(fine), c = Partition::parse(coarse);
        const BigInt count = grouping_count(f, c);
        const auto groupings = grouping_enumerate(f, c);
        if (json) {
          Json gs = Json::array();
          for (const auto& g : groupings) {
            Json blocks = Json::array();
            for (const auto& b : g) blocks.push_back(b.to_string());
            gs.push_back(blocks);
          }
          out << Json{{"fine", f.to_string()}, {"coarse", c.to_string()}, {"grouping_count", dec(count)}, {"groupings", gs}}.dump(2)
              << '\n';
          return;
        }
        out << "grouping_count: " << dec(count) << '\n';
        for (const auto& g : groupings) {
          std::string line;
          for (const auto& b : g) line += (line.empty() ? "" : " ") + b.to_braced();
          out << line << '\n';
        }
        return;
      }
      if (part_n < 1) throw InvalidArgument("partition: give --n N or --fine/--coarse");
      const auto list = part_d ? admissible_partitions(part_n, *part_d) : partitions_of(part_n);
      if (json) {
        Json items = Json::array();
        for (const auto& p : list) {
          items.push_back(Json{{"partition", p.to_string()},
                               {"r", dec(static_cast<long>(p.r()))},
                               {"local_system_rank", dec(local_system_rank(p))},
                               {"stabilizer_order", dec(stabilizer_order(p))}});
        }
        out << Json{{"n", dec(static_cast<long>(part_n))}, {"partitions", items}}.dump(2) << '\n';
        return;
      }
      for (const auto& p : list) {
        out << p.to_braced() << "  r=" << p.r() << "  rank=" << dec(local_system_rank(p))
            << "  stabilizer=" << dec(stabilizer_order(p)) << '\n';
      }
    };
  });

  // graph
  GraphSource graph_src;
  bool dot = false;
  auto* graph_cmd = app.add_subcommand("graph", "Spectral dual graph or graph file summary");
  graph_src.attach(graph_cmd);
  graph_cmd->add_flag("--dot", dot, "Emit Graphviz DOT instead of the summary");
  graph_cmd->callback([&] {
    action = [&] {
      const Quiver q = graph_src.load();
      if (dot) {
        out << to_dot(q);
        return;
      }
      const bool conn = q.graph().is_connected();
      const std::string key = hex_encode(canonical_key(q.graph()));
      if (json) {
        Json j{{"r", dec(static_cast<long>(q.vertex_count()))}, {"s", dec(static_cast<long>(q.edge_count()))}, {"connected", conn}};
        if (conn) j["b1"] = dec(betti1(q.graph()));
        j["canonical_key"] = key;
        out << j.dump(2) << '\n';
        return;
      }
      out << "r: " << q.vertex_count() << "\ns: " << q.edge_count() << "\nconnected: " << (conn ? "true" : "false") << '\n';
      if (conn) out << "b1: " << betti1(q.graph()) << '\n';
      out << "canonical_key: " << key << '\n';
    };
  });

  // gale
  GraphSource gale_src;
  auto* gale_cmd = app.add_subcommand("gale", "Boundary matrix A, Gale dual B, exactness and circuit relations");
  gale_src.attach(gale_cmd);
  gale_cmd->callback([&] {
    action = [&] {
      const Quiver q = gale_src.load();
      const IntMatrix a = boundary_matrix(q);
      const IntMatrix b = gale_dual(a);
      const ExactnessReport rep = verify_exact(a, b);
      const auto relations = circuit_relations(q);
      if (json) {
        Json rels = Json::array();
        for (const auto& c : relations) rels.push_back(Json{{"index", dec(static_cast<long>(c.index))}, {"coefficients", list_json(c.coefficients)}, {"text", c.to_string()}});
        out << Json{{"A", matrix_json(a)}, {"B", matrix_json(b)}, {"exact", rep.exact()}, {"failure", rep.failure}, {"circuit_relations", rels}}.dump(2)
            << '\n';
        return;
      }
      out << "A:\n" << a.to_string() << "B:\n" << b.to_string();
      out << "exact: " << (rep.exact() ? "true" : "false (" + rep.failure + ")") << '\n';
      out << "circuit relations:\n";
      for (const auto& c : relations) out << "  " << c.index << ": " << c.to_string() << '\n';
    };
  });

  // tutte
  GraphSource tutte_src;
  std::vector<std::string> evals;
  auto* tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial of the graphic matroid");
  tutte_src.attach(tutte_cmd);
  tutte_cmd->add_option("--eval", evals, "Evaluate at integer points X,Y (repeatable)");
  TutteOptions topts;
  tutte_cmd->callback([&] {
    action = [&] {
      const Quiver q = tutte_src.load();
      const TuttePolynomial t = tutte_polynomial(q.graph(), topts);
      Json points = Json::array();
      std::vector<std::string> lines;
      for (const auto& e : evals) {
        const auto comma = e.find(',');
        BigInt x, y;
        if (comma == std::string::npos || x.set_str(e.substr(0, comma), 10) != 0 || y.set_str(e.substr(comma + 1), 10) != 0) {
          throw InvalidArgument("--eval expects X,Y with integer coordinates, got '" + e + "'");
        }
        const BigInt v = t.evaluate(x, y);
        points.push_back(Json{{"x", dec(x)}, {"y", dec(y)}, {"value", dec(v)}});
        lines.push_back("T(" + dec(x) + "," + dec(y) + ") = " + dec(v));
      }
      if (json) {
        Json terms = Json::array();
        for (const auto& [ex, c] : t.terms()) terms.push_back(Json{{"x", dec(static_cast<long>(ex.first))}, {"y", dec(static_cast<long>(ex.second))}, {"coefficient", dec(c)}});
        out << Json{{"polynomial", t.to_string()}, {"terms", terms}, {"evaluations", points}}.dump(2) << '\n';
        return;
      }
      out << "T(x,y) = " << t.to_string() << '\n';
      for (const auto& l : lines) out << l << '\n';
    };
  });

  // matroid
  GraphSource matroid_src;
  auto* matroid_cmd = app.add_subcommand("matroid", "f/h-vectors and top Betti number of the cographic matroid");
  matroid_src.attach(matroid_cmd);
  matroid_cmd->callback([&] {
    action = [&] {
      const Quiver q = matroid_src.load();
      const CographicMatroid m(q.graph());
      const FHVectors fh = f_h_vectors(m);
      const BigInt top = top_betti(q.graph(), topts);
      if (json) {
        out << Json{{"rank", dec(static_cast<long>(m.rank()))}, {"f", list_json(fh.f)}, {"h", list_json(fh.h)}, {"top_betti", dec(top)}}.dump(2)
            << '\n';
        return;
      }
      out << "rank: " << m.rank() << "\nf: " << join(fh.f) << "\nh: " << join(fh.h) << "\ntop_betti: " << dec(top) << '\n';
    };
  });

  // matroid-homology
  GraphSource homology_src;
  auto* homology_cmd = app.add_subcommand("matroid-homology", "Reduced rational homology of the cographic matroid complex");
  homology_src.attach(homology_cmd);
  homology_cmd->callback([&] {
    action = [&] {
      const Quiver q = homology_src.load();
      const CographicMatroid m(q.graph());
      const ReducedHomology h = reduced_homology_ranks(matroid_complex(m));
      if (!h.is_wedge_of_top_spheres()) {
        throw InternalConsistency("matroid complex homology is not concentrated in the top degree");
      }
      if (json) {
        Json ranks = Json::object();
        for (std::size_t i = 0; i < h.ranks.size(); ++i) ranks[std::to_string(static_cast<int>(i) - 1)] = dec(static_cast<long>(h.ranks[i]));
        out << Json{{"rank", dec(static_cast<long>(m.rank()))}, {"ranks", ranks}, {"top_degree", dec(static_cast<long>(h.top_degree()))}, {"wedge_of_spheres", true}}.dump(2)
            << '\n';
        return;
      }
      for (std::size_t i = 0; i < h.ranks.size(); ++i) out << "degree " << static_cast<int>(i) - 1 << ": " << h.ranks[i] << '\n';
      out << "top_degree: " << h.top_degree() << "\nwedge_of_spheres: true\n";
    };
  });

  // strata
  GraphSource strata_src;
  auto* strata_cmd = app.add_subcommand("strata", "Vertex-partition strata, smallness and local multiplicities");
  strata_src.attach(strata_cmd);
  strata_cmd->callback([&] {
    action = [&] {
      const Quiver q = strata_src.load();
      const auto summands = local_decomposition(q, topts);
      const SmallnessCertificate cert = certify_small(q, topts);
      if (json) {
        Json rows = Json::array();
        for (const auto& s : summands) {
          const auto& r = s.stratum;
          rows.push_back(Json{{"partition", r.vp.to_string()},
                              {"vertices", dec(static_cast<long>(r.contracted.vertex_count()))},
                              {"edges", dec(static_cast<long>(r.contracted.edge_count()))},
                              {"deleted_loops", dec(static_cast<long>(r.deleted_loops))},
                              {"b1", dec(r.b1_contracted)},
                              {"codim_in_X", dec(r.codim_in_X)},
                              {"codim_in_Y", dec(r.codim_in_Y)},
                              {"fiber_dim", dec(r.fiber_dim)},
                              {"multiplicity", dec(s.multiplicity)}});
        }
        out << Json{{"strata", rows}, {"small", cert.passed}}.dump(2) << '\n';
        return;
      }
      out << "codim_Y  codim_X  fiber  loops  mult  partition\n";
      for (const auto& s : summands) {
        const auto& r = s.stratum;
        std::ostringstream line;
        line << std::setw(7) << r.codim_in_Y << "  " << std::setw(7) << r.codim_in_X << "  " << std::setw(5) << r.fiber_dim
             << "  " << std::setw(5) << r.deleted_loops << "  " << std::setw(4) << dec(s.multiplicity) << "  " << r.vp.to_string();
        out << line.str() << '\n';
      }
      out << "small: " << (cert.passed ? "pass" : "FAIL at " + cert.violation->vp.to_string()) << '\n';
    };
  });

  // local-model
  std::string lm_partition;
  int lm_genus = 2;
  auto* lm_cmd = app.add_subcommand("local-model", "Dimension constants of the local model at a stratum");
  lm_cmd->add_option("--partition", lm_partition, "Partition n_1,...,n_r")->required();
  lm_cmd->add_option("--genus", lm_genus, "Genus g >= 2")->required();
  lm_cmd->callback([&] {
    action = [&] {
      const LocalModelDims m = local_model_dims(Partition::parse(lm_partition), lm_genus);
      const std::vector<std::pair<std::string, long>> fields = {
          {"n", m.n},         {"g", m.genus},     {"s", m.s},         {"b1", m.b1},       {"d", m.d_dim},
          {"c", m.c_dim},     {"dim_M", m.dim_M}, {"dim_Y", m.dim_Y}, {"dim_X", m.dim_X}, {"dim_Jbar", m.dim_Jbar}};
      if (json) {
        Json j{{"partition", m.partition.to_string()}};
        for (const auto& [k, v] : fields) j[k] = dec(v);
        out << j.dump(2) << '\n';
        return;
      }
      out << "partition: " << m.partition.to_string() << '\n';
      for (const auto& [k, v] : fields) out << k << ": " << v << '\n';
    };
  });

  // dims
  std::string dims_partition;
  int dims_genus = 2;
  auto* dims_cmd = app.add_subcommand("dims", "Hitchin-side dimensions of a stratum and its Ngo string");
  dims_cmd->add_option("--partition", dims_partition, "Partition n_1,...,n_r")->required();
  dims_cmd->add_option("--genus", dims_genus, "Genus g >= 2")->required();
  dims_cmd->callback([&] {
    action = [&] {
      const Partition p = Partition::parse(dims_partition);
      const StratumDims s = stratum_dims(p, dims_genus);
      const auto graded = ngo_string_graded_ranks(p, dims_genus);
      std::vector<std::pair<std::string, long>> fields = {
          {"n", p.n()},           {"g", s.genus},     {"dim_A", s.dim_A},   {"dim_S", s.dim_S},
          {"codim_S", s.codim_S}, {"delta", s.delta}, {"genus_sum", s.genus_sum}, {"spectral_genus", s.spectral_genus},
          {"psi", s.psi()}};
      if (p.n() >= 2) {
        fields.emplace_back("stabilization_codim", stabilization_codim(p.n(), dims_genus));
      }
      std::vector<BigInt> genera(s.component_genera.begin(), s.component_genera.end());
      if (json) {
        Json j{{"partition", p.to_string()}};
        for (const auto& [k, v] : fields) j[k] = dec(v);
        j["component_genera"] = list_json(genera);
        j["ngo_graded_ranks"] = list_json(graded);
        out << j.dump(2) << '\n';
        return;
      }
      out << "partition: " << p.to_string() << '\n';
      for (const auto& [k, v] : fields) out << k << ": " << v << '\n';
      out << "component_genera: " << join(genera) << "\nngo_graded_ranks: " << join(graded) << '\n';
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  if (cache_path.empty()) {
    if (const char* env = std::getenv("NGO_STRINGS_CACHE")) cache_path = env;
  }
  topts.threads = threads;
  if (!cache_path.empty()) cache_import(cache_load(cache_path, err), TutteCache::global());

  int status = kExitOk;
  try {
    if (action) action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    status = kExitDomainError;
  }
  if (!cache_path.empty()) cache_store(cache_path, cache_snapshot(TutteCache::global()), err);
  return status;
}

}  // namespace ngo::cli
