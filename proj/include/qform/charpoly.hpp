#pragma once

#include <map>
#include <string>
#include <vector>

#include "qform/graph.hpp"
#include "qform/ntgraph.hpp"

namespace qform {

// Rational function of the shape prod_n (t^n - 1)^{k_n}, the natural form
// for monodromy characteristic polynomials.
class FactoredCyclo {
 public:
  FactoredCyclo() = default;
  explicit FactoredCyclo(std::map<Int, Int> factors);

  /// Multiplies by (t^n - 1)^k and re-canonicalizes.
  void mul(const Int& n, const Int& k);

  const std::map<Int, Int>& factors() const { return factors_; }
  Int degree() const;
  bool is_one() const { return factors_.empty(); }

  /// Coefficients (ascending degree) of the expanded product. Throws
  /// NonPolynomial when the denominator does not divide the numerator.
  std::vector<Int> expand() const;

  /// "(t^6-1)^1 (t^1-1)^-1", factors by descending n; "1" when empty.
  std::string str() const;

  friend FactoredCyclo operator*(const FactoredCyclo& a, const FactoredCyclo& b);
  friend bool operator==(const FactoredCyclo& a, const FactoredCyclo& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::map<Int, Int> factors_;
};

/// Characteristic polynomial of the monodromy on H_1(F):
/// (t^d - 1) * prod_v (t^{m_v} - 1)^{-chi_v}, d = gcd of arrow multiplicities.
/// Requires all genus decorations zero (NonRationalVertex).
FactoredCyclo delta(const ResolutionGraph& g, const std::map<std::string, Int>& mult);

/// Milnor number = deg delta = d + sum_v (-chi_v) m_v.
Int milnor_number(const ResolutionGraph& g, const std::map<std::string, Int>& mult);

/// Characteristic polynomial of the induced automorphism on H_1(G_ss):
/// (t-1) * prod_{edge orbits} (t^{|orbit|}-1) / prod_{piece orbits} (t^{|orbit|}-1),
/// arrows excluded. Exactness of the division and degree = b_1 are verified
/// (NonPolynomialDelta2).
FactoredCyclo delta2(const NTGraph& g);

/// Number of Jordan blocks of the homological monodromy = b_1(G_ss).
Int jordan_block_count(const NTGraph& g);

}  // namespace qform
