#include "qform/quadform.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qform/errors.hpp"

namespace qform {

ChainBasis make_basis(const NTGraph& g,
                      const std::vector<std::pair<std::string, OneChain>>& named) {
  ChainBasis b;
  std::set<std::string> seen;
  for (const auto& [name, chain] : named) {
    if (!seen.insert(name).second)
      validation_error("DuplicateId", "duplicate chain name '" + name + "'");
    if (!is_relative_chain(g, chain))
      validation_error("InvalidChain",
                       "chain '" + name + "' has boundary away from the arrow ends");
    b.names.push_back(name);
    b.chains.push_back(chain);
    b.absolute.push_back(is_absolute_cycle(g, chain));
  }
  return b;
}

namespace {

// Tree structure from a BFS over the pieces; edge ties broken by id so the
// result only depends on the graph, not on declaration order.
struct SpanningTree {
  std::string root;
  // parent edge of a non-root piece, and whether the edge points toward the
  // parent (+1: from == child) or away (-1)
  std::map<std::string, std::pair<std::string, int>> up;
  std::map<std::string, std::string> parent;
  std::set<std::string> tree_edges;
};

SpanningTree bfs_tree(const NTGraph& g) {
  SpanningTree t;
  std::map<std::string, std::vector<const NTEdge*>> incident;
  for (const NTEdge& e : g.edges()) {
    incident[e.from].push_back(&e);
    if (e.to != e.from) incident[e.to].push_back(&e);
  }
  for (auto& [pid, list] : incident)
    std::sort(list.begin(), list.end(),
              [](const NTEdge* a, const NTEdge* b) { return a->id < b->id; });

  t.root = g.pieces().front().id;
  for (const Piece& p : g.pieces()) t.root = std::min(t.root, p.id);

  std::set<std::string> visited{t.root};
  std::deque<std::string> queue{t.root};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    for (const NTEdge* e : incident[v]) {
      const std::string& w = e->from == v ? e->to : e->from;
      if (visited.count(w)) continue;
      visited.insert(w);
      t.tree_edges.insert(e->id);
      t.parent[w] = v;
      t.up[w] = {e->id, e->from == w ? +1 : -1};
      queue.push_back(w);
    }
  }
  return t;
}

// Adds the oriented tree path from x to y into the chain.
void add_tree_path(const SpanningTree& t, const std::string& x, const std::string& y,
                   OneChain& c) {
  auto depth = [&](std::string p) {
    int d = 0;
    while (p != t.root) {
      p = t.parent.at(p);
      ++d;
    }
    return d;
  };
  std::string a = x, b = y;
  int da = depth(a), db = depth(b);
  OneChain up_part, down_part;
  while (da > db) {
    const auto& [eid, dir] = t.up.at(a);
    up_part.add(eid, dir);
    a = t.parent.at(a);
    --da;
  }
  while (db > da) {
    const auto& [eid, dir] = t.up.at(b);
    down_part.add(eid, -dir);
    b = t.parent.at(b);
    --db;
  }
  while (a != b) {
    const auto& [ea, dira] = t.up.at(a);
    up_part.add(ea, dira);
    a = t.parent.at(a);
    const auto& [eb, dirb] = t.up.at(b);
    down_part.add(eb, -dirb);
    b = t.parent.at(b);
  }
  for (const auto& [id, k] : up_part.coeff) c.add(id, k);
  for (const auto& [id, k] : down_part.coeff) c.add(id, k);
}

}  // namespace

ChainBasis default_basis(const NTGraph& g) {
  SpanningTree t = bfs_tree(g);
  std::vector<std::pair<std::string, OneChain>> named;

  std::vector<const NTEdge*> non_tree;
  for (const NTEdge& e : g.edges())
    if (!t.tree_edges.count(e.id)) non_tree.push_back(&e);
  std::sort(non_tree.begin(), non_tree.end(),
            [](const NTEdge* a, const NTEdge* b) { return a->id < b->id; });
  for (const NTEdge* e : non_tree) {
    OneChain c;
    c.add(e->id, 1);
    add_tree_path(t, e->to, e->from, c);
    named.emplace_back("cyc." + e->id, std::move(c));
  }

  std::vector<const NTArrow*> arrows;
  for (const NTArrow& a : g.arrows()) arrows.push_back(&a);
  std::sort(arrows.begin(), arrows.end(),
            [](const NTArrow* a, const NTArrow* b) { return a->id < b->id; });
  for (std::size_t i = 1; i < arrows.size(); ++i) {
    OneChain c;
    c.add(arrows.front()->id, -1);
    add_tree_path(t, arrows.front()->piece, arrows[i]->piece, c);
    c.add(arrows[i]->id, 1);
    named.emplace_back("rel." + arrows[i]->id, std::move(c));
  }
  return make_basis(g, named);
}

GramForm gram(const NTGraph& g, const ChainBasis& basis) {
  // rows of B: edges then arrows, declaration order
  std::vector<const std::string*> row_ids;
  std::vector<const Int*> row_screws;
  for (const NTEdge& e : g.edges()) {
    row_ids.push_back(&e.id);
    row_screws.push_back(&e.screw);
  }
  for (const NTArrow& a : g.arrows()) {
    row_ids.push_back(&a.id);
    row_screws.push_back(&a.screw);
  }

  const std::size_t rows = row_ids.size(), cols = basis.chains.size();
  IMat b(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& [id, k] : basis.chains[j].coeff)
      if (!g.is_edge(id) && !g.is_arrow(id))
        validation_error("UnknownEdge", "chain references unknown edge or arrow '" + id + "'");
    for (std::size_t i = 0; i < rows; ++i) b(i, j) = basis.chains[j].at(*row_ids[i]);
  }
  if (rank(b) != cols)
    validation_error("DependentBasis", "basis chains are not Z-linearly independent");

  IMat sb(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) sb(i, j) = *row_screws[i] * b(i, j);

  GramForm f;
  f.names = basis.names;
  f.absolute = basis.absolute;
  f.q = b.transposed() * sb;
  return f;
}

GramForm absolute_block(const GramForm& f) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < f.absolute.size(); ++i)
    if (f.absolute[i]) keep.push_back(i);
  GramForm out;
  out.q = IMat(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.names.push_back(f.names[keep[i]]);
    out.absolute.push_back(true);
    for (std::size_t j = 0; j < keep.size(); ++j) out.q(i, j) = f.q(keep[i], keep[j]);
  }
  return out;
}

std::map<std::string, Int> nilpotent_image(const NTGraph& g, const OneChain& c) {
  std::map<std::string, Int> out;
  for (const auto& [id, k] : c.coeff) {
    Int s;
    if (g.is_edge(id))
      s = g.edge(id).screw;
    else if (g.is_arrow(id))
      s = g.arrow(id).screw;
    else
      validation_error("UnknownEdge", "chain references unknown edge or arrow '" + id + "'");
    out[id] = s * k;
  }
  return out;
}

bool is_even_diagonal(const IMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, i) % 2 != 0) return false;
  return true;
}

bool is_even_absolute(const GramForm& f) { return is_even_diagonal(absolute_block(f).q); }

FormInvariants invariants(const GramForm& f) {
  FormInvariants inv;
  inv.dimension = f.q.rows();
  inv.rank = rank(f.q);
  inv.det = det_bareiss(f.q);
  inv.det_squarefree = squarefree_part(inv.det);
  inv.snf = smith_normal_form(f.q);
  inv.positive_definite = is_positive_definite(f.q);
  inv.even = is_even_diagonal(f.q);
  GramForm abs = absolute_block(f);
  inv.absolute_dimension = abs.q.rows();
  inv.even_absolute = is_even_diagonal(abs.q);
  inv.absolute_det = det_bareiss(abs.q);
  inv.absolute_det_squarefree = squarefree_part(inv.absolute_det);
  inv.absolute_snf = smith_normal_form(abs.q);
  return inv;
}

CompareReport compare(const GramForm& a, const GramForm& b) {
  CompareReport r;
  r.left = invariants(a);
  r.right = invariants(b);
  auto differs = [&](const char* name, bool neq) {
    if (neq) r.distinguished_by.emplace_back(name);
  };
  differs("dimension", r.left.dimension != r.right.dimension);
  differs("rank", r.left.rank != r.right.rank);
  differs("det", r.left.det != r.right.det);
  differs("det_squarefree", r.left.det_squarefree != r.right.det_squarefree);
  differs("snf", r.left.snf != r.right.snf);
  differs("positive_definite", r.left.positive_definite != r.right.positive_definite);
  differs("even", r.left.even != r.right.even);
  differs("absolute_dimension", r.left.absolute_dimension != r.right.absolute_dimension);
  differs("even_absolute", r.left.even_absolute != r.right.even_absolute);
  differs("absolute_det", r.left.absolute_det != r.right.absolute_det);
  differs("absolute_det_squarefree",
          r.left.absolute_det_squarefree != r.right.absolute_det_squarefree);
  differs("absolute_snf", r.left.absolute_snf != r.right.absolute_snf);
  return r;
}

}  // namespace qform
