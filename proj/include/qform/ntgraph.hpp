#pragma once

#include <map>
#include <string>
#include <vector>

#include "qform/numbers.hpp"

namespace qform {

// Nielsen-Thurston / semistable graph: vertices are periodic pieces of the
// fiber, edges are annulus-orbit curves with integer screw weights, arrows
// are boundary curves. The finite-order automorphism acts on each orbit by
// index +1 (mod orbit size).
struct Piece {
  std::string id;
  Int genus = 0;
  std::string orbit;
  long long index = 0;
};

struct NTEdge {
  std::string id;
  std::string from, to;  // reference orientation = declaration order
  Int screw = 1;
  std::string orbit;
  long long index = 0;
};

struct NTArrow {
  std::string id;
  std::string piece;
  Int screw = 1;
  std::string orbit;
  long long index = 0;
};

class NTGraph {
 public:
  NTGraph(std::vector<Piece> pieces, std::vector<NTEdge> edges, std::vector<NTArrow> arrows);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<NTEdge>& edges() const { return edges_; }
  const std::vector<NTArrow>& arrows() const { return arrows_; }

  bool has_piece(const std::string& id) const { return pindex_.count(id) != 0; }
  const Piece& piece(const std::string& id) const;
  /// Edge or arrow screw by id; also classifies which one the id names.
  bool is_edge(const std::string& id) const { return eindex_.count(id) != 0; }
  bool is_arrow(const std::string& id) const { return aindex_.count(id) != 0; }
  const NTEdge& edge(const std::string& id) const;
  const NTArrow& arrow(const std::string& id) const;

  /// b1 of the graph (arrows excluded): |E| - |V| + 1 for connected graphs.
  long long first_betti() const;

  std::map<std::string, std::vector<std::string>> piece_orbits() const;  // orbit -> ids by index
  std::map<std::string, std::vector<std::string>> edge_orbits() const;
  std::map<std::string, std::vector<std::string>> arrow_orbits() const;

 private:
  void validate() const;

  std::vector<Piece> pieces_;
  std::vector<NTEdge> edges_;
  std::vector<NTArrow> arrows_;
  std::map<std::string, std::size_t> pindex_, eindex_, aindex_;
};

// Integer 1-chain on an NT graph, supported on edges and arrows, written
// against each element's reference orientation.
struct OneChain {
  std::map<std::string, Int> coeff;  // id -> coefficient; zeros are absent

  bool is_zero() const { return coeff.empty(); }
  Int at(const std::string& id) const {
    auto it = coeff.find(id);
    return it == coeff.end() ? Int(0) : it->second;
  }
  void add(const std::string& id, const Int& k) {
    if (k == 0) return;
    auto [it, inserted] = coeff.try_emplace(id, k);
    if (!inserted) {
      it->second += k;
      if (it->second == 0) coeff.erase(it);
    }
  }
};

/// True iff the chain references only edges/arrows of g; throws UnknownEdge
/// otherwise when `check` is used via chain_boundary.
/// Boundary of the chain at each piece (arrow tips are free ends).
std::map<std::string, Int> chain_boundary(const NTGraph& g, const OneChain& c);

/// Valid relative chain: boundary vanishes at every piece.
bool is_relative_chain(const NTGraph& g, const OneChain& c);
/// Absolute cycle: relative chain with no arrow support.
bool is_absolute_cycle(const NTGraph& g, const OneChain& c);

struct QuotientGraph {
  std::vector<std::string> vertices;                             // piece-orbit ids, sorted
  std::vector<std::pair<std::string, std::string>> edges;        // per edge-orbit, endpoint orbits
  std::vector<std::string> edge_ids;                             // matching orbit ids
};

QuotientGraph quotient_graph(const NTGraph& g);
bool is_quotient_tree(const NTGraph& g);

}  // namespace qform
