#pragma once

#include <map>
#include <string>
#include <vector>

#include "qform/graph.hpp"
#include "qform/numbers.hpp"

namespace qform {

// Screw data of one annulus orbit: d = constant gcd along the bamboo,
// scn = scn(h, C) from the twist formula, s = scn(h^e, T) = (e/d) * scn.
struct BambooScrew {
  std::string bamboo_id;
  BambooKind kind;
  Int d;
  Rat scn;
  Int s;
};

struct ScrewData {
  Int e;  // lcm of the node multiplicities
  std::vector<BambooScrew> per_bamboo;  // sorted by bamboo id

  const BambooScrew& at(const std::string& bamboo_id) const;
};

/// lcm of the multiplicities of the nodes. Throws NoNode.
Int exponent_e(const ResolutionGraph& g, const std::map<std::string, Int>& mult);

/// Twist formula for one multiplicity chain m_0..m_k (boundary bamboos
/// append the arrow multiplicity as m_k). Checks gcd constancy and the
/// integrality/positivity of s.
BambooScrew screw_of_chain(const std::string& id, BambooKind kind,
                           const std::vector<Int>& mults, const Int& e);

ScrewData compute_screws(const ResolutionGraph& g, const std::map<std::string, Int>& mult);

}  // namespace qform
