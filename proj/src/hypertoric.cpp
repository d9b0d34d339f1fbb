#include "ngo/hypertoric.hpp"

#include <algorithm>
#include <tuple>

#include "ngo/errors.hpp"

namespace ngo {

std::string CircuitRelation::to_string() const {
  std::string out;
  for (std::size_t e = 0; e < coefficients.size(); ++e) {
    const BigInt& a = coefficients[e];
    if (a == 0) continue;
    const std::string mono = "z" + std::to_string(e + 1) + "w" + std::to_string(e + 1);
    const BigInt mag = abs(a);
    const std::string body = (mag == 1 ? "" : to_decimal(mag)) + mono;
    if (out.empty()) out = (a < 0 ? "-" : "") + body;
    else out += (a < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::pair<long, long> lawrence_dims(const Quiver& q) {
  if (!q.graph().is_connected()) throw InvalidArgument("lawrence_dims: quiver is not connected");
  const long b1 = betti1(q.graph());
  return {b1 + static_cast<long>(q.edge_count()), 2 * b1};
}

std::vector<CircuitRelation> circuit_relations(const Quiver& q) {
  if (q.vertex_count() == 1) return {};
  if (!q.graph().is_connected()) throw InvalidArgument("circuit_relations: quiver is not connected");
  const IntMatrix a = boundary_matrix(q);
  std::vector<CircuitRelation> out;
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back({static_cast<int>(i) + 2, a.row(i)});
  return out;
}

std::vector<StratumRecord> enumerate_strata(const Quiver& q, const TutteOptions& options, int max_vertices) {
  if (q.vertex_count() > max_vertices) {
    throw ResourceLimit("enumerate_strata: " + std::to_string(q.vertex_count()) + " vertices exceeds " +
                        std::to_string(max_vertices));
  }
  if (!q.graph().is_connected()) throw InvalidArgument("enumerate_strata: quiver is not connected");
  std::vector<StratumRecord> out;
  for (auto& vp : VertexPartition::all(q.vertex_count())) {
    StratumRecord rec{vp, contract(q, vp), 0, 0, 0, 0, 0, BigInt(0), {}};
    rec.deleted_loops = internal_edge_count(q, vp);
    rec.b1_contracted = betti1(rec.contracted.graph());
    rec.fiber_dim = rec.b1_contracted;
    rec.codim_in_Y = 2 * rec.b1_contracted;
    rec.codim_in_X = rec.b1_contracted + static_cast<long>(rec.contracted.edge_count());
    rec.multiplicity = top_betti(rec.contracted.graph(), options);
    rec.key = canonical_key(rec.contracted.graph());
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const StratumRecord& a, const StratumRecord& b) {
    return std::tie(a.codim_in_Y, a.key, a.vp.blocks()) < std::tie(b.codim_in_Y, b.key, b.vp.blocks());
  });
  return out;
}

SmallnessCertificate certify_small(const Quiver& q, const TutteOptions& options) {
  SmallnessCertificate cert;
  for (auto& rec : enumerate_strata(q, options)) {
    if (rec.contracted.edge_count() == 0) continue;
    ++cert.strata_checked;
    // 2 dim fiber < codim in X  <=>  b1 < s.
    if (!(rec.b1_contracted < static_cast<long>(rec.contracted.edge_count()))) {
      cert.passed = false;
      cert.violation = std::move(rec);
      break;
    }
  }
  return cert;
}

std::vector<LocalSummand> local_decomposition(const Quiver& q, const TutteOptions& options) {
  std::vector<LocalSummand> out;
  for (auto& rec : enumerate_strata(q, options)) {
    if (2 * rec.fiber_dim != rec.codim_in_Y) {
      throw InternalConsistency("local_decomposition: stratum " + rec.vp.to_string() + " is not relevant");
    }
    BigInt m = rec.multiplicity;
    out.push_back({std::move(rec), std::move(m)});
  }
  return out;
}

LocalModelDims local_model_dims(const Partition& p, int genus) {
  if (genus < 2) throw InvalidArgument("local_model_dims: genus must be at least 2");
  const MultiGraph gamma = spectral_dual_graph(p, genus);
  LocalModelDims d;
  d.n = p.n();
  d.genus = genus;
  d.partition = p;
  d.s = static_cast<long>(gamma.edge_count());
  d.b1 = betti1(gamma);
  const long n2 = static_cast<long>(d.n) * d.n;
  const long gm1 = genus - 1;
  d.d_dim = (n2 - 1) * gm1 - 1 - d.b1;
  d.c_dim = 4 * n2 * gm1 + 1 - d.b1 - d.s;
  d.dim_M = 2 * (n2 * gm1 + 1);
  d.dim_Y = 2 * d.b1;
  d.dim_X = d.b1 + d.s;
  d.dim_Jbar = 4 * (n2 * gm1 + 1) - 3;
  if (d.dim_M != d.dim_Y + 2 * d.d_dim + 2 * genus + 2 || d.d_dim != d.d_dim_from_dimensions()) {
    throw InternalConsistency("local_model_dims: the two expressions for d disagree at " + p.to_string());
  }
  if (d.dim_Jbar != d.dim_X + d.c_dim) {
    throw InternalConsistency("local_model_dims: dim Jbar != dim X + c at " + p.to_string());
  }
  return d;
}

}  // namespace ngo
