#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qform/matrix.hpp"
#include "qform/ntgraph.hpp"

namespace qform {

// Named integer chains forming a basis of H_1(G_ss, D; Z) (or a sublattice).
// Members with no arrow support and empty boundary are absolute cycles.
struct ChainBasis {
  std::vector<std::string> names;
  std::vector<OneChain> chains;
  std::vector<bool> absolute;
};

/// Validates chains against the graph (UnknownEdge / InvalidChain) and
/// classifies the absolute members. Independence is checked by gram().
ChainBasis make_basis(const NTGraph& g, const std::vector<std::pair<std::string, OneChain>>& named);

/// Deterministic spanning-tree basis: one fundamental cycle per non-tree
/// edge, then one relative chain -a0 + tree path + ai per extra arrow.
/// BFS root = lexicographically least piece id, ties broken by edge id.
ChainBasis default_basis(const NTGraph& g);

struct GramForm {
  std::vector<std::string> names;
  std::vector<bool> absolute;
  IMat q;  // Q~ = B^T diag(s) B
};

/// Gram matrix of the screw form in the given basis. Throws DependentBasis
/// if the chains are linearly dependent.
GramForm gram(const NTGraph& g, const ChainBasis& basis);

/// Restriction to the absolute members.
GramForm absolute_block(const GramForm& f);

/// N(chain) as a multiple of each orbit curve: id -> s_e * coefficient.
std::map<std::string, Int> nilpotent_image(const NTGraph& g, const OneChain& c);

bool is_even_diagonal(const IMat& m);
bool is_even_absolute(const GramForm& f);

struct FormInvariants {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  Int det;
  Int det_squarefree;
  std::vector<Int> snf;
  bool positive_definite = true;
  bool even = true;           // every diagonal entry even
  std::size_t absolute_dimension = 0;
  bool even_absolute = true;  // absolute block diagonal even
  Int absolute_det;
  Int absolute_det_squarefree;
  std::vector<Int> absolute_snf;
};

FormInvariants invariants(const GramForm& f);

struct CompareReport {
  FormInvariants left, right;
  std::vector<std::string> distinguished_by;  // empty = not distinguished
  bool distinguished() const { return !distinguished_by.empty(); }
};

/// Invariant-level comparison only; never claims full Z-equivalence.
CompareReport compare(const GramForm& a, const GramForm& b);

}  // namespace qform
