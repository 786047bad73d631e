#pragma once

#include <map>
#include <string>
#include <vector>

#include "qform/graph.hpp"
#include "qform/matrix.hpp"

namespace qform {

// Intersection matrix of the exceptional divisor, indexed by vertex
// declaration order. Diagonal entry = euler + 2*(loops at v); off-diagonal
// (v,w) = number of edges between v and w. The arrow load vector collects
// the total arrow multiplicity based at each vertex.
struct IntersectionData {
  std::vector<std::string> order;  // vertex ids, declaration order
  IMat matrix;
  std::vector<Int> arrow_load;
};

/// Requires every vertex to carry an euler decoration (MissingEuler).
IntersectionData intersection_matrix(const ResolutionGraph& g);

// Solves M*m = -a for the multiplicity system and checks the paper
// invariants: matrix negative definite, solution integral and strictly
// positive, residual exactly zero, and agreement with any mult decorations.
std::map<std::string, Int> solve_multiplicities(const ResolutionGraph& g);

/// Multiplicities from decorations when present, otherwise from the solver;
/// if both decorations exist the solver result is cross-checked.
std::map<std::string, Int> multiplicities(const ResolutionGraph& g);

}  // namespace qform
