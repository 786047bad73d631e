#include "qform/graph.hpp"

#include <algorithm>
#include <set>

#include "qform/errors.hpp"

namespace qform {

ResolutionGraph::ResolutionGraph(std::vector<RVertex> vertices, std::vector<REdge> edges,
                                 std::vector<RArrow> arrows)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), arrows_(std::move(arrows)) {
  std::set<std::string> ids;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const RVertex& v = vertices_[i];
    if (!ids.insert(v.id).second) validation_error("DuplicateId", "duplicate id '" + v.id + "'");
    if (v.genus < 0) validation_error("InvalidDecoration", "negative genus at '" + v.id + "'");
    if (v.mult && *v.mult <= 0)
      validation_error("InvalidDecoration", "non-positive mult at '" + v.id + "'");
    vindex_[v.id] = i;
  }
  for (const RArrow& a : arrows_) {
    if (!ids.insert(a.id).second) validation_error("DuplicateId", "duplicate id '" + a.id + "'");
    if (!vindex_.count(a.vertex))
      validation_error("DanglingEndpoint", "arrow '" + a.id + "' at unknown vertex '" + a.vertex + "'");
    if (a.mult <= 0) validation_error("InvalidDecoration", "non-positive mult on arrow '" + a.id + "'");
  }
  adj_.resize(vertices_.size());
  arrows_at_.resize(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (const std::string* end : {&edges_[e].a, &edges_[e].b}) {
      auto it = vindex_.find(*end);
      if (it == vindex_.end())
        validation_error("DanglingEndpoint", "edge endpoint '" + *end + "' is not a vertex");
      adj_[it->second].push_back(e);
    }
  }
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    arrows_at_[vindex_.at(arrows_[a].vertex)].push_back(a);

  // decoration consistency: either all vertices carry euler or all carry mult
  bool some_euler = false, some_mult = false;
  for (const RVertex& v : vertices_) {
    some_euler |= v.euler.has_value();
    some_mult |= v.mult.has_value();
  }
  if (!(all_euler() || all_mult())) {
    if (some_euler || some_mult)
      validation_error("MixedDecorations",
                       "vertices must all carry euler or all carry mult decorations");
    validation_error("MissingDecorations", "vertices carry neither euler nor mult decorations");
  }

  // connectivity over vertices (arrowheads attach to vertices, so vertex
  // connectivity is what matters)
  if (!vertices_.empty()) {
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : adj_[v]) {
        for (const std::string* end : {&edges_[e].a, &edges_[e].b}) {
          std::size_t w = vindex_.at(*end);
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      validation_error("Disconnected", "graph is not connected");
  } else {
    validation_error("EmptyGraph", "graph has no vertices");
  }
}

const RVertex& ResolutionGraph::vertex(const std::string& id) const {
  return vertices_[vertex_index(id)];
}

std::size_t ResolutionGraph::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) validation_error("UnknownVertex", "unknown vertex '" + id + "'");
  return it->second;
}

const std::vector<std::size_t>& ResolutionGraph::incident_edges(const std::string& id) const {
  return adj_[vertex_index(id)];
}

const std::vector<std::size_t>& ResolutionGraph::incident_arrows(const std::string& id) const {
  return arrows_at_[vertex_index(id)];
}

bool ResolutionGraph::all_euler() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RVertex& v) { return v.euler.has_value(); });
}

bool ResolutionGraph::all_mult() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const RVertex& v) { return v.mult.has_value(); });
}

std::map<std::string, Int> ResolutionGraph::mult_decorations() const {
  std::map<std::string, Int> m;
  for (const RVertex& v : vertices_) {
    if (!v.mult) validation_error("MissingDecorations", "vertex '" + v.id + "' has no mult");
    m[v.id] = *v.mult;
  }
  return m;
}

std::map<std::string, VertexClass> classify(const ResolutionGraph& g) {
  std::map<std::string, VertexClass> out;
  for (const RVertex& v : g.vertices()) {
    VertexClass c;
    c.valency = static_cast<long long>(g.incident_edges(v.id).size() +
                                       g.incident_arrows(v.id).size());
    c.chi = 2 - 2 * to_longlong(v.genus) - c.valency;
    c.is_node = c.chi < 0;
    out[v.id] = c;
  }
  return out;
}

std::vector<std::string> node_ids(const ResolutionGraph& g) {
  std::vector<std::string> out;
  for (const auto& [id, c] : classify(g))
    if (c.is_node) out.push_back(id);
  return out;
}

const char* to_string(BambooKind k) {
  switch (k) {
    case BambooKind::interior: return "interior";
    case BambooKind::boundary: return "boundary";
    case BambooKind::loop: return "loop";
  }
  return "?";
}

namespace {

struct Walk {
  std::vector<std::string> chain;
  std::vector<std::size_t> edges;
  enum class End { node, arrow, leaf } end;
  std::string arrow_id;
};

// Follows a chain of valency-2 vertices starting at `from` along edge
// `first`. Ends at a node, at an arrow-bearing vertex, or at a leaf.
Walk follow(const ResolutionGraph& g, const std::map<std::string, VertexClass>& cls,
            const std::string& from, std::size_t first, std::vector<char>& used) {
  Walk w;
  w.chain.push_back(from);
  std::string cur = from;
  std::size_t e = first;
  for (;;) {
    used[e] = 1;
    w.edges.push_back(e);
    const REdge& edge = g.edges()[e];
    cur = (edge.a == cur) ? edge.b : edge.a;
    w.chain.push_back(cur);
    if (cls.at(cur).is_node) {
      w.end = Walk::End::node;
      return w;
    }
    const auto& arrows = g.incident_arrows(cur);
    if (!arrows.empty()) {
      // non-node with an arrow has valency 2 = one edge + one arrow
      w.end = Walk::End::arrow;
      w.arrow_id = g.arrows()[arrows.front()].id;
      return w;
    }
    const auto& inc = g.incident_edges(cur);
    if (inc.size() == 1) {
      w.end = Walk::End::leaf;
      return w;
    }
    // valency 2: continue along the other edge (for a loop edge the two
    // incident slots carry the same index, so compare against `e` works)
    std::size_t next = inc[0] == e ? inc[1] : inc[0];
    e = next;
  }
}

}  // namespace

GraphSkeleton skeleton(const ResolutionGraph& g) {
  auto cls = classify(g);
  std::vector<std::string> nodes = node_ids(g);
  if (nodes.empty())
    validation_error("NoNode", "graph has no node (no vertex with chi < 0)");

  GraphSkeleton sk;
  std::vector<char> used(g.edges().size(), 0);
  std::vector<Bamboo> raw;

  for (const std::string& n : nodes) {
    for (std::size_t e : g.incident_edges(n)) {
      if (used[e]) continue;
      Walk w = follow(g, cls, n, e, used);
      if (w.end == Walk::End::leaf) {
        sk.dead_branches.push_back({n, w.chain, w.edges});
      } else {
        Bamboo b;
        b.chain = w.chain;
        b.edge_indices = w.edges;
        if (w.end == Walk::End::arrow) {
          b.kind = BambooKind::boundary;
          b.arrow_id = w.arrow_id;
        } else {
          b.kind = w.chain.front() == w.chain.back() ? BambooKind::loop : BambooKind::interior;
        }
        raw.push_back(std::move(b));
      }
    }
    // arrows based directly at the node are boundary bamboos of length 0
    for (std::size_t a : g.incident_arrows(n)) {
      Bamboo b;
      b.kind = BambooKind::boundary;
      b.chain = {n};
      b.arrow_id = g.arrows()[a].id;
      raw.push_back(std::move(b));
    }
  }

  for (std::size_t e = 0; e < used.size(); ++e)
    if (!used[e])
      validation_error("UnreachableEdge", "edge not assigned to any bamboo or dead branch");

  // Canonical orientation and ids. Interior bamboos run from the
  // lexicographically smaller endpoint; parallel bamboos get ~k suffixes.
  for (Bamboo& b : raw) {
    if (b.kind == BambooKind::interior && b.chain.back() < b.chain.front()) {
      std::reverse(b.chain.begin(), b.chain.end());
      std::reverse(b.edge_indices.begin(), b.edge_indices.end());
    }
    if (b.kind == BambooKind::loop) {
      std::vector<std::string> rev(b.chain.rbegin(), b.chain.rend());
      if (rev < b.chain) {
        b.chain = rev;
        std::reverse(b.edge_indices.begin(), b.edge_indices.end());
      }
    }
    b.id = b.kind == BambooKind::boundary ? *b.arrow_id
                                          : b.chain.front() + "-" + b.chain.back();
  }
  std::map<std::string, std::vector<Bamboo*>> groups;
  for (Bamboo& b : raw) groups[b.id].push_back(&b);
  for (auto& [base, members] : groups) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end(), [](const Bamboo* x, const Bamboo* y) {
      if (x->chain != y->chain) return x->chain < y->chain;
      return x->edge_indices < y->edge_indices;
    });
    for (std::size_t k = 0; k < members.size(); ++k)
      members[k]->id = base + "~" + std::to_string(k + 1);
  }
  std::sort(raw.begin(), raw.end(),
            [](const Bamboo& x, const Bamboo& y) { return x.id < y.id; });
  sk.bamboos = std::move(raw);
  std::sort(sk.dead_branches.begin(), sk.dead_branches.end(),
            [](const DeadBranch& x, const DeadBranch& y) { return x.chain < y.chain; });
  return sk;
}

std::vector<Bamboo> bamboos(const ResolutionGraph& g) { return skeleton(g).bamboos; }

std::vector<DeadBranch> dead_branches(const ResolutionGraph& g, const std::string& node) {
  std::vector<DeadBranch> out;
  for (DeadBranch& d : skeleton(g).dead_branches)
    if (d.node == node) out.push_back(std::move(d));
  return out;
}

}  // namespace qform
