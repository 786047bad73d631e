#include "qform/multiplicity.hpp"

#include "qform/errors.hpp"

namespace qform {

IntersectionData intersection_matrix(const ResolutionGraph& g) {
  if (!g.all_euler())
    validation_error("MissingEuler", "every vertex needs an euler decoration");
  const std::size_t n = g.vertices().size();
  IntersectionData d;
  d.matrix = IMat(n, n);
  d.arrow_load.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    d.order.push_back(g.vertices()[i].id);
    d.matrix(i, i) = *g.vertices()[i].euler;
  }
  for (const REdge& e : g.edges()) {
    std::size_t i = g.vertex_index(e.a), j = g.vertex_index(e.b);
    if (i == j)
      d.matrix(i, i) += 2;  // a loop contributes two local branches
    else {
      d.matrix(i, j) += 1;
      d.matrix(j, i) += 1;
    }
  }
  for (const RArrow& a : g.arrows()) d.arrow_load[g.vertex_index(a.vertex)] += a.mult;
  return d;
}

std::map<std::string, Int> solve_multiplicities(const ResolutionGraph& g) {
  IntersectionData d = intersection_matrix(g);
  if (!is_negative_definite(d.matrix))
    validation_error("NotNegativeDefinite", "intersection matrix is not negative definite");

  const std::size_t n = d.order.size();
  std::vector<Int> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = -d.arrow_load[i];
  std::vector<Rat> x = solve_linear(d.matrix, rhs);
  // negative definiteness already guarantees invertibility
  std::map<std::string, Int> m;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_integer(x[i]))
      invariant_error("NonIntegralSolution",
                      "multiplicity of '" + d.order[i] + "' is " + rat_string(x[i]));
    Int v = qform::numerator(x[i]);
    if (v <= 0)
      invariant_error("NonPositiveSolution",
                      "multiplicity of '" + d.order[i] + "' is not positive");
    m[d.order[i]] = v;
  }

  // residual re-check: M*m + a = 0 exactly
  for (std::size_t i = 0; i < n; ++i) {
    Int acc = d.arrow_load[i];
    for (std::size_t j = 0; j < n; ++j) acc += d.matrix(i, j) * m.at(d.order[j]);
    if (acc != 0) invariant_error("ResidualNonzero", "multiplicity system residual is nonzero");
  }

  for (const RVertex& v : g.vertices())
    if (v.mult && *v.mult != m.at(v.id))
      invariant_error("DecorationMismatch", "solved multiplicity of '" + v.id +
                                                "' disagrees with its mult decoration");
  return m;
}

std::map<std::string, Int> multiplicities(const ResolutionGraph& g) {
  if (g.all_euler()) return solve_multiplicities(g);
  return g.mult_decorations();
}

}  // namespace qform
