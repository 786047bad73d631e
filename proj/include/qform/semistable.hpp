#pragma once

#include <map>
#include <string>

#include "qform/graph.hpp"
#include "qform/ntgraph.hpp"
#include "qform/screw.hpp"

namespace qform {

// Fiber data over one node: d = number of fiber components over the node's
// curve, chi/r/genus describe each component after amalgamating the node's
// dead branches.
struct PieceData {
  std::string node;
  Int d;
  Int chi_total;
  Int chi_component;
  Int boundary_count;  // r
  Int genus;
};

std::map<std::string, PieceData> piece_data(const ResolutionGraph& g,
                                            const std::map<std::string, Int>& mult,
                                            const ScrewData& screws);

// Builds the semistable / Nielsen-Thurston graph:
//   pieces  (v:j) for j in Z/d_v,
//   edges   (b:j) for j in Z/d_b joining (v, j mod d_v) -- (w, j mod d_w),
//   arrows  (b:j) attached likewise for boundary bamboos,
// with the induced automorphism acting by j -> j+1 on every orbit.
NTGraph build_ntgraph(const ResolutionGraph& g, const std::map<std::string, Int>& mult,
                      const ScrewData& screws);

/// Full pipeline convenience: multiplicities -> screws -> NT graph.
NTGraph semistable_reduction(const ResolutionGraph& g);

}  // namespace qform
