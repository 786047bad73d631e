#include "qform/semistable.hpp"

#include <algorithm>

#include "qform/errors.hpp"
#include "qform/multiplicity.hpp"

namespace qform {

namespace {

long long small(const Int& v, const char* what) {
  if (v <= 0 || v > 1'000'000)
    invariant_error("OrbitTooLarge", std::string(what) + " of size " + v.str() +
                                         " cannot be materialized");
  return to_longlong(v);
}

std::string indexed(const std::string& base, long long j) {
  return base + ":" + std::to_string(j);
}

}  // namespace

std::map<std::string, PieceData> piece_data(const ResolutionGraph& g,
                                            const std::map<std::string, Int>& mult,
                                            const ScrewData& screws) {
  auto cls = classify(g);
  GraphSkeleton sk = skeleton(g);

  std::map<std::string, PieceData> out;
  for (const std::string& v : node_ids(g)) {
    PieceData pd;
    pd.node = v;

    // d_v = gcd of m_v with all neighbor multiplicities, arrows included
    Int d = mult.at(v);
    for (std::size_t e : g.incident_edges(v)) {
      const REdge& edge = g.edges()[e];
      d = gcd(d, mult.at(edge.a == v ? edge.b : edge.a));
    }
    for (std::size_t a : g.incident_arrows(v)) d = gcd(d, g.arrows()[a].mult);
    pd.d = d;

    // Euler characteristic of the fiber part over the node, dead branches
    // amalgamated
    Int chi = mult.at(v) * cls.at(v).chi;
    for (const DeadBranch& db : sk.dead_branches)
      if (db.node == v)
        for (std::size_t i = 1; i < db.chain.size(); ++i)
          chi += mult.at(db.chain[i]) * cls.at(db.chain[i]).chi;
    pd.chi_total = chi;
    if (chi % d != 0)
      invariant_error("PieceDataInvariant",
                      "fiber Euler characteristic over '" + v + "' is not divisible by d");
    pd.chi_component = chi / d;

    // boundary circles per component: orbit sizes of incident annuli,
    // loops counted twice
    Int boundary = 0;
    for (const Bamboo& b : sk.bamboos) {
      const Int& db_ = screws.at(b.id).d;
      switch (b.kind) {
        case BambooKind::interior:
          if (b.chain.front() == v) boundary += db_;
          if (b.chain.back() == v) boundary += db_;
          break;
        case BambooKind::loop:
          if (b.chain.front() == v) boundary += 2 * db_;
          break;
        case BambooKind::boundary:
          if (b.chain.front() == v) boundary += db_;
          break;
      }
      if (b.chain.front() == v || b.chain.back() == v)
        if (db_ % d != 0)
          invariant_error("PieceDataInvariant", "d_v does not divide d_b at node '" + v + "'");
    }
    if (boundary % d != 0)
      invariant_error("PieceDataInvariant", "boundary count over '" + v + "' is not divisible by d");
    pd.boundary_count = boundary / d;
    if (pd.boundary_count <= 0)
      invariant_error("PieceDataInvariant", "piece over '" + v + "' has no boundary");

    Int two_genus = 2 - pd.chi_component - pd.boundary_count;
    if (two_genus % 2 != 0 || two_genus < 0)
      invariant_error("PieceDataInvariant", "piece genus over '" + v + "' is not a nonnegative integer");
    pd.genus = two_genus / 2;
    out[v] = pd;
  }
  return out;
}

NTGraph build_ntgraph(const ResolutionGraph& g, const std::map<std::string, Int>& mult,
                      const ScrewData& screws) {
  auto pd = piece_data(g, mult, screws);
  GraphSkeleton sk = skeleton(g);

  std::vector<Piece> pieces;
  for (const auto& [v, data] : pd) {
    long long d = small(data.d, "piece orbit");
    for (long long j = 0; j < d; ++j) pieces.push_back({indexed(v, j), data.genus, v, j});
  }

  std::vector<NTEdge> edges;
  std::vector<NTArrow> arrows;
  for (const Bamboo& b : sk.bamboos) {
    const BambooScrew& sc = screws.at(b.id);
    long long db = small(sc.d, "edge orbit");
    const std::string& v = b.chain.front();
    if (b.kind == BambooKind::loop) {
      if (pd.at(v).d != 1)
        validation_error("AmbiguousLoopAttachment",
                         "loop bamboo at '" + v + "' with d_v > 1 has no canonical attachment");
      for (long long j = 0; j < db; ++j)
        edges.push_back({indexed(b.id, j), indexed(v, 0), indexed(v, 0), sc.s, b.id, j});
    } else if (b.kind == BambooKind::interior) {
      const std::string& w = b.chain.back();
      long long dv = small(pd.at(v).d, "piece orbit");
      long long dw = small(pd.at(w).d, "piece orbit");
      for (long long j = 0; j < db; ++j)
        edges.push_back(
            {indexed(b.id, j), indexed(v, j % dv), indexed(w, j % dw), sc.s, b.id, j});
    } else {
      long long dv = small(pd.at(v).d, "piece orbit");
      for (long long j = 0; j < db; ++j)
        arrows.push_back({indexed(b.id, j), indexed(v, j % dv), sc.s, b.id, j});
    }
  }

  try {
    return NTGraph(std::move(pieces), std::move(edges), std::move(arrows));
  } catch (const Error& e) {
    if (e.code() == "Disconnected")
      invariant_error("DisconnectedSemistable", "semistable graph is not connected");
    throw;
  }
}

NTGraph semistable_reduction(const ResolutionGraph& g) {
  auto mult = multiplicities(g);
  ScrewData screws = compute_screws(g, mult);
  return build_ntgraph(g, mult, screws);
}

}  // namespace qform
