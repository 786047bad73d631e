#include "qform/charpoly.hpp"

#include <sstream>

#include "qform/errors.hpp"

namespace qform {

FactoredCyclo::FactoredCyclo(std::map<Int, Int> factors) : factors_(std::move(factors)) {
  for (auto it = factors_.begin(); it != factors_.end();) {
    if (it->first <= 0) invariant_error("NonPolynomial", "factor exponent base must be positive");
    it = it->second == 0 ? factors_.erase(it) : std::next(it);
  }
}

void FactoredCyclo::mul(const Int& n, const Int& k) {
  if (n <= 0) invariant_error("NonPolynomial", "factor exponent base must be positive");
  if (k == 0) return;
  auto [it, inserted] = factors_.try_emplace(n, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) factors_.erase(it);
  }
}

Int FactoredCyclo::degree() const {
  Int d = 0;
  for (const auto& [n, k] : factors_) d += n * k;
  return d;
}

FactoredCyclo operator*(const FactoredCyclo& a, const FactoredCyclo& b) {
  FactoredCyclo r = a;
  for (const auto& [n, k] : b.factors_) r.mul(n, k);
  return r;
}

namespace {

// p *= (t^n - 1)
void mul_cyclo(std::vector<Int>& p, long long n) {
  std::vector<Int> r(p.size() + static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + static_cast<std::size_t>(n)] += p[i];
    r[i] -= p[i];
  }
  p = std::move(r);
}

// p /= (t^n - 1), exact; false when a nonzero remainder appears
bool div_cyclo(std::vector<Int>& p, long long n) {
  if (p.size() <= static_cast<std::size_t>(n)) return false;
  std::vector<Int> q(p.size() - static_cast<std::size_t>(n));
  for (std::size_t i = p.size(); i-- > static_cast<std::size_t>(n);) {
    Int c = p[i];
    if (c == 0) continue;
    q[i - static_cast<std::size_t>(n)] = c;
    p[i] = 0;
    p[i - static_cast<std::size_t>(n)] += c;
  }
  for (const Int& c : p)
    if (c != 0) return false;
  p = std::move(q);
  return true;
}

}  // namespace

std::vector<Int> FactoredCyclo::expand() const {
  std::vector<Int> p{1};
  for (const auto& [n, k] : factors_)
    for (Int i = 0; i < k; ++i) mul_cyclo(p, to_longlong(n));
  for (const auto& [n, k] : factors_)
    for (Int i = 0; i > k; --i)
      if (!div_cyclo(p, to_longlong(n)))
        invariant_error("NonPolynomial", "factored product " + str() + " is not a polynomial");
  return p;
}

std::string FactoredCyclo::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (!first) os << " ";
    first = false;
    os << "(t^" << it->first << "-1)^" << it->second;
  }
  return os.str();
}

FactoredCyclo delta(const ResolutionGraph& g, const std::map<std::string, Int>& mult) {
  for (const RVertex& v : g.vertices())
    if (v.genus != 0)
      validation_error("NonRationalVertex",
                       "vertex '" + v.id + "' has positive genus; delta needs g_v = 0");
  if (g.arrows().empty())
    validation_error("NoArrow", "delta needs at least one arrowhead");
  auto cls = classify(g);
  Int d = 0;
  for (const RArrow& a : g.arrows()) d = gcd(d, a.mult);
  FactoredCyclo f;
  f.mul(d, 1);
  for (const RVertex& v : g.vertices()) f.mul(mult.at(v.id), -cls.at(v.id).chi);
  return f;
}

Int milnor_number(const ResolutionGraph& g, const std::map<std::string, Int>& mult) {
  return delta(g, mult).degree();
}

FactoredCyclo delta2(const NTGraph& g) {
  FactoredCyclo f;
  f.mul(1, 1);
  for (const auto& [oid, members] : g.edge_orbits()) f.mul(Int(members.size()), 1);
  for (const auto& [oid, members] : g.piece_orbits()) f.mul(Int(members.size()), -1);
  Int b1 = g.first_betti();
  if (f.degree() != b1)
    invariant_error("NonPolynomialDelta2", "delta2 degree does not match b1");
  try {
    f.expand();
  } catch (const Error&) {
    invariant_error("NonPolynomialDelta2", "delta2 " + f.str() + " is not a polynomial");
  }
  return f;
}

Int jordan_block_count(const NTGraph& g) { return Int(g.first_betti()); }

}  // namespace qform
