#include "qform/ntgraph.hpp"

#include <algorithm>
#include <set>

#include "qform/errors.hpp"

namespace qform {

NTGraph::NTGraph(std::vector<Piece> pieces, std::vector<NTEdge> edges,
                 std::vector<NTArrow> arrows)
    : pieces_(std::move(pieces)), edges_(std::move(edges)), arrows_(std::move(arrows)) {
  std::set<std::string> ids;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (!ids.insert(pieces_[i].id).second)
      validation_error("DuplicateId", "duplicate id '" + pieces_[i].id + "'");
    pindex_[pieces_[i].id] = i;
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!ids.insert(edges_[i].id).second)
      validation_error("DuplicateId", "duplicate id '" + edges_[i].id + "'");
    eindex_[edges_[i].id] = i;
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (!ids.insert(arrows_[i].id).second)
      validation_error("DuplicateId", "duplicate id '" + arrows_[i].id + "'");
    aindex_[arrows_[i].id] = i;
  }
  validate();
}

const Piece& NTGraph::piece(const std::string& id) const {
  auto it = pindex_.find(id);
  if (it == pindex_.end()) validation_error("UnknownVertex", "unknown piece '" + id + "'");
  return pieces_[it->second];
}

const NTEdge& NTGraph::edge(const std::string& id) const {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) validation_error("UnknownEdge", "unknown edge '" + id + "'");
  return edges_[it->second];
}

const NTArrow& NTGraph::arrow(const std::string& id) const {
  auto it = aindex_.find(id);
  if (it == aindex_.end()) validation_error("UnknownEdge", "unknown arrow '" + id + "'");
  return arrows_[it->second];
}

long long NTGraph::first_betti() const {
  return static_cast<long long>(edges_.size()) - static_cast<long long>(pieces_.size()) + 1;
}

namespace {

template <typename T>
std::map<std::string, std::vector<std::string>> collect_orbits(const std::vector<T>& items,
                                                               const char* what) {
  std::map<std::string, std::vector<const T*>> by_orbit;
  for (const T& x : items) by_orbit[x.orbit].push_back(&x);
  std::map<std::string, std::vector<std::string>> out;
  for (auto& [orbit, members] : by_orbit) {
    std::vector<std::string> ids(members.size());
    std::vector<char> seen(members.size(), 0);
    for (const T* m : members) {
      if (m->index < 0 || m->index >= static_cast<long long>(members.size()) ||
          seen[static_cast<std::size_t>(m->index)])
        validation_error("BadOrbit", std::string(what) + " orbit '" + orbit +
                                         "' indices are not 0..d-1 exactly once");
      seen[static_cast<std::size_t>(m->index)] = 1;
      ids[static_cast<std::size_t>(m->index)] = m->id;
    }
    out[orbit] = std::move(ids);
  }
  return out;
}

}  // namespace

std::map<std::string, std::vector<std::string>> NTGraph::piece_orbits() const {
  return collect_orbits(pieces_, "piece");
}
std::map<std::string, std::vector<std::string>> NTGraph::edge_orbits() const {
  return collect_orbits(edges_, "edge");
}
std::map<std::string, std::vector<std::string>> NTGraph::arrow_orbits() const {
  return collect_orbits(arrows_, "arrow");
}

void NTGraph::validate() const {
  if (pieces_.empty()) validation_error("EmptyGraph", "NT graph has no pieces");
  for (const Piece& p : pieces_)
    if (p.genus < 0) validation_error("InvalidDecoration", "negative genus at '" + p.id + "'");
  for (const NTEdge& e : edges_) {
    if (!pindex_.count(e.from) || !pindex_.count(e.to))
      validation_error("DanglingEndpoint", "edge '" + e.id + "' has an unknown endpoint");
    if (e.screw <= 0)
      validation_error("InvalidDecoration", "edge '" + e.id + "' needs a positive screw");
  }
  for (const NTArrow& a : arrows_) {
    if (!pindex_.count(a.piece))
      validation_error("DanglingEndpoint", "arrow '" + a.id + "' at unknown piece");
    if (a.screw <= 0)
      validation_error("InvalidDecoration", "arrow '" + a.id + "' needs a positive screw");
  }

  auto porb = piece_orbits();
  auto eorb = edge_orbits();
  auto aorb = arrow_orbits();

  // successor of a piece under the induced automorphism
  auto succ = [&](const std::string& pid) -> const std::string& {
    const Piece& p = piece(pid);
    const auto& orbit = porb.at(p.orbit);
    return orbit[static_cast<std::size_t>((p.index + 1) % static_cast<long long>(orbit.size()))];
  };

  // screw constant on each orbit; incidence h-equivariant
  for (const auto& [oid, members] : eorb) {
    const NTEdge& first = edge(members.front());
    const std::size_t d = members.size();
    for (std::size_t j = 0; j < d; ++j) {
      const NTEdge& cur = edge(members[j]);
      if (cur.screw != first.screw)
        validation_error("BadOrbit", "screw not constant on edge orbit '" + oid + "'");
      const NTEdge& next = edge(members[(j + 1) % d]);
      std::pair<std::string, std::string> want{succ(cur.from), succ(cur.to)};
      if (want.first > want.second) std::swap(want.first, want.second);
      std::pair<std::string, std::string> got{next.from, next.to};
      if (got.first > got.second) std::swap(got.first, got.second);
      if (want != got)
        validation_error("BadOrbit", "edge orbit '" + oid + "' is not h-equivariant");
    }
  }
  for (const auto& [oid, members] : aorb) {
    const NTArrow& first = arrow(members.front());
    const std::size_t d = members.size();
    for (std::size_t j = 0; j < d; ++j) {
      const NTArrow& cur = arrow(members[j]);
      if (cur.screw != first.screw)
        validation_error("BadOrbit", "screw not constant on arrow orbit '" + oid + "'");
      if (arrow(members[(j + 1) % d]).piece != succ(cur.piece))
        validation_error("BadOrbit", "arrow orbit '" + oid + "' is not h-equivariant");
    }
  }

  // connectivity
  std::map<std::string, std::vector<std::string>> adj;
  for (const NTEdge& e : edges_) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::set<std::string> seen{pieces_.front().id};
  std::vector<std::string> stack{pieces_.front().id};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    for (const std::string& u : adj[v])
      if (seen.insert(u).second) stack.push_back(u);
  }
  if (seen.size() != pieces_.size())
    validation_error("Disconnected", "NT graph is not connected");
}

std::map<std::string, Int> chain_boundary(const NTGraph& g, const OneChain& c) {
  std::map<std::string, Int> b;
  auto bump = [&](const std::string& piece, const Int& k) {
    b[piece] += k;
    if (b[piece] == 0) b.erase(piece);
  };
  for (const auto& [id, k] : c.coeff) {
    if (g.is_edge(id)) {
      const NTEdge& e = g.edge(id);
      bump(e.to, k);
      bump(e.from, -k);
    } else if (g.is_arrow(id)) {
      // oriented outward: boundary at the piece end is -k, the tip is free
      bump(g.arrow(id).piece, -k);
    } else {
      validation_error("UnknownEdge", "chain references unknown edge or arrow '" + id + "'");
    }
  }
  return b;
}

bool is_relative_chain(const NTGraph& g, const OneChain& c) {
  return chain_boundary(g, c).empty();
}

bool is_absolute_cycle(const NTGraph& g, const OneChain& c) {
  for (const auto& [id, k] : c.coeff)
    if (g.is_arrow(id)) return false;
  return is_relative_chain(g, c);
}

QuotientGraph quotient_graph(const NTGraph& g) {
  QuotientGraph q;
  for (const auto& [oid, members] : g.piece_orbits()) q.vertices.push_back(oid);
  for (const auto& [oid, members] : g.edge_orbits()) {
    const NTEdge& e = g.edge(members.front());
    q.edges.emplace_back(g.piece(e.from).orbit, g.piece(e.to).orbit);
    q.edge_ids.push_back(oid);
  }
  return q;
}

bool is_quotient_tree(const NTGraph& g) {
  QuotientGraph q = quotient_graph(g);
  // the NT graph is connected, hence so is its quotient: tree iff |E| = |V|-1
  return q.edges.size() + 1 == q.vertices.size();
}

}  // namespace qform
