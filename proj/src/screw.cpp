#include "qform/screw.hpp"

#include <algorithm>

#include "qform/errors.hpp"

namespace qform {

const BambooScrew& ScrewData::at(const std::string& bamboo_id) const {
  auto it = std::find_if(per_bamboo.begin(), per_bamboo.end(),
                         [&](const BambooScrew& b) { return b.bamboo_id == bamboo_id; });
  if (it == per_bamboo.end())
    validation_error("UnknownBamboo", "no screw data for bamboo '" + bamboo_id + "'");
  return *it;
}

Int exponent_e(const ResolutionGraph& g, const std::map<std::string, Int>& mult) {
  std::vector<std::string> nodes = node_ids(g);
  if (nodes.empty()) validation_error("NoNode", "graph has no node (no vertex with chi < 0)");
  Int e = 1;
  for (const std::string& n : nodes) e = lcm(e, mult.at(n));
  return e;
}

BambooScrew screw_of_chain(const std::string& id, BambooKind kind,
                           const std::vector<Int>& mults, const Int& e) {
  if (mults.size() < 2)
    validation_error("InvalidBamboo", "bamboo '" + id + "' needs at least two multiplicities");
  Int d = gcd(mults[0], mults[1]);
  Rat sum = 0;
  for (std::size_t i = 0; i + 1 < mults.size(); ++i) {
    if (gcd(mults[i], mults[i + 1]) != d)
      invariant_error("NonConstantGcd",
                      "gcd of consecutive multiplicities is not constant along bamboo '" + id + "'");
    sum += Rat(1) / Rat(mults[i] * mults[i + 1]);
  }
  BambooScrew out;
  out.bamboo_id = id;
  out.kind = kind;
  out.d = d;
  out.scn = Rat(d * d) * sum;
  Rat s = Rat(e * d) * sum;
  if (!is_integer(s) || s <= 0 || e % d != 0)
    invariant_error("NonIntegralScrew", "screw of '" + id + "' rescales to " + rat_string(s) +
                                            ", not a positive integer");
  out.s = qform::numerator(s);
  return out;
}

ScrewData compute_screws(const ResolutionGraph& g, const std::map<std::string, Int>& mult) {
  ScrewData out;
  out.e = exponent_e(g, mult);
  for (const Bamboo& b : bamboos(g)) {
    std::vector<Int> mults;
    for (const std::string& v : b.chain) mults.push_back(mult.at(v));
    if (b.kind == BambooKind::boundary) {
      // the arrow acts as the final vertex of the chain
      for (const RArrow& a : g.arrows())
        if (a.id == *b.arrow_id) mults.push_back(a.mult);
    }
    out.per_bamboo.push_back(screw_of_chain(b.id, b.kind, mults, out.e));
  }
  return out;
}

}  // namespace qform
