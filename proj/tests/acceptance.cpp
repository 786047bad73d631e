// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen from the published tables and from
// independent oracles (cofactor-expansion determinants, rational
// elimination); see the unit tests for the oracle-first derivations.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "qform/charpoly.hpp"
#include "qform/errors.hpp"
#include "qform/io.hpp"
#include "qform/matrix.hpp"
#include "qform/multiplicity.hpp"
#include "qform/quadform.hpp"
#include "qform/screw.hpp"
#include "qform/semistable.hpp"

using namespace qform;

namespace {

int failures = 0;
std::string data_dir = QFORM_TEST_DATA_DIR;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << number << " " << name;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

template <typename F>
void criterion(int number, const std::string& name, F body) {
  try {
    std::string detail;
    bool ok = body(detail);
    report(number, name, ok, detail);
  } catch (const std::exception& e) {
    report(number, name, false, e.what());
  }
}

std::string slurp(const std::string& name) {
  std::ifstream in(data_dir + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("missing data file " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ResolutionGraph rg(const std::string& name) { return parse_resolution(slurp(name), name); }
NTGraph nt(const std::string& name) { return parse_ntgraph(slurp(name), name); }

GramForm paper_gram(const std::string& ntfile, const std::string& chainfile) {
  NTGraph g = nt(ntfile);
  return gram(g, make_basis(g, parse_chains(slurp(chainfile), g, chainfile)));
}

IMat from(const std::vector<std::vector<long long>>& rows) {
  IMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

bool expect(std::string& detail, bool cond, const std::string& what) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

// independent determinant oracle: memoized cofactor expansion along rows
Int det_cofactor(const IMat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<Int> det_of(std::size_t(1) << n, 0);
  det_of[0] = 1;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    Int acc = 0;
    int sign = (k - 1) % 2 == 0 ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      acc += sign * m(static_cast<std::size_t>(k - 1), j) * det_of[mask & ~(1u << j)];
      sign = -sign;
    }
    det_of[mask] = acc;
  }
  return det_of[(1u << n) - 1];
}

FactoredCyclo cyclo(std::initializer_list<std::pair<long long, long long>> fs) {
  std::map<Int, Int> m;
  for (auto [base, k] : fs) m[base] = k;
  return FactoredCyclo(m);
}

IMat random_unimodular(std::size_t n, std::mt19937& rng) {
  IMat u = IMat::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<int> idx(0, static_cast<int>(n) - 1), coef(-2, 2), op(0, 2);
  for (int step = 0; step < 10; ++step) {
    auto i = static_cast<std::size_t>(idx(rng));
    auto j = static_cast<std::size_t>(idx(rng));
    if (i == j) continue;
    switch (op(rng)) {
      case 0: {
        int c = coef(rng);
        for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
        break;
      }
      case 1:
        for (std::size_t k = 0; k < n; ++k) std::swap(u(i, k), u(j, k));
        break;
      default:
        for (std::size_t k = 0; k < n; ++k) u(i, k) = -u(i, k);
        break;
    }
  }
  return u;
}

const std::vector<std::vector<long long>> sss_a_matrix = {
    {52, 0, 26, 0, 0, 0, -26, 0, 13, 0},
    {0, 182, -91, 0, 0, 0, 0, 0, 0, 0},
    {26, -91, 222, -91, -14, 0, -13, 0, -7, -7},
    {0, 0, -91, 182, 0, 0, 0, 0, -91, 0},
    {0, 0, -14, 0, 28, 0, 0, 0, 7, 14},
    {0, 0, 0, 0, 0, 156, -78, 0, 0, 0},
    {-26, 0, -13, 0, 0, -78, 182, -78, -13, 0},
    {0, 0, 0, 0, 0, 0, -78, 156, -78, 0},
    {13, 0, -7, -91, 7, 0, -13, -78, 231, -42},
    {0, 0, -7, 0, 14, 0, 0, 0, -42, 98}};
const std::vector<std::vector<long long>> sss_b_matrix = {
    {40, 0, 26, 0, 0, 0, -20, 7, 0, 0},
    {0, 182, -91, 0, 0, 0, 0, 0, 0, 0},
    {26, -91, 222, -91, -14, 0, -13, -7, -7, 0},
    {0, 0, -91, 182, 0, 0, 0, -91, 0, 0},
    {0, 0, -14, 0, 40, 0, 0, 7, 20, 0},
    {0, 0, 0, 0, 0, 156, -78, 0, 0, 0},
    {-20, 0, -13, 0, 0, -78, 140, -49, 0, 0},
    {7, 0, -7, -91, 7, 0, -49, 189, -42, 0},
    {0, 0, -7, 0, 20, 0, 0, -42, 140, -78},
    {0, 0, 0, 0, 0, 0, 0, 0, -78, 156}};

void criterion_1() {
  criterion(1, "golden-gram-matrices", [&](std::string& d) {
    bool ok = true;
    ok &= expect(d,
                 paper_gram("acampo1.nt1", "acampo1_nt.chain1").q ==
                     from({{2, -1, 0, 0, 0, 1},
                           {-1, 2, -1, 0, 0, 0},
                           {0, -1, 2, -1, 0, 0},
                           {0, 0, -1, 2, -1, 0},
                           {0, 0, 0, -1, 2, 0},
                           {1, 0, 0, 0, 0, 3}}),
                 "6x6 matrix");
    ok &= expect(
        d,
        paper_gram("acampo2.nt1", "acampo2_nt.chain1").q ==
            from({{42, -21, 0, 21}, {-21, 46, -21, 2}, {0, -21, 42, 0}, {21, 2, 0, 43}}),
        "4x4 matrix");
    ok &= expect(d,
                 paper_gram("decomp.nt1", "decomp_nt.chain1").q == from({{2, 0, 1, 0, 0},
                                                                         {0, 2, 0, 0, 1},
                                                                         {1, 0, 11, -7, 0},
                                                                         {0, 0, -7, 14, -7},
                                                                         {0, 1, 0, -7, 11}}),
                 "5x5 matrix");
    ok &= expect(d, paper_gram("sss_a.nt1", "sss_a.chain1").q == from(sss_a_matrix),
                 "first 10x10 matrix");
    ok &= expect(d, paper_gram("sss_b.nt1", "sss_b.chain1").q == from(sss_b_matrix),
                 "second 10x10 matrix");
    ok &= expect(d, paper_gram("si.nt1", "si.chain1").q == from({{2, 0, 1}, {0, 1, 0}, {1, 0, 2}}),
                 "3x3 matrix");
    // the same matrices through the full pipeline from the resolution graphs
    for (auto [rgf, chf, exp] :
         {std::tuple{"acampo1.rg1", "acampo1.chain1", "acampo1"},
          std::tuple{"acampo2.rg1", "acampo2.chain1", "acampo2"},
          std::tuple{"decomp.rg1", "decomp.chain1", "decomp"},
          std::tuple{"si.rg1", "si_rg.chain1", "si"}}) {
      NTGraph g = semistable_reduction(rg(rgf));
      GramForm f = gram(g, make_basis(g, parse_chains(slurp(chf), g, chf)));
      GramForm ref = exp == std::string("acampo1")
                         ? paper_gram("acampo1.nt1", "acampo1_nt.chain1")
                     : exp == std::string("acampo2")
                         ? paper_gram("acampo2.nt1", "acampo2_nt.chain1")
                     : exp == std::string("decomp") ? paper_gram("decomp.nt1", "decomp_nt.chain1")
                                                    : paper_gram("si.nt1", "si.chain1");
      ok &= expect(d, f.q == ref.q, std::string("pipeline gram for ") + rgf);
    }
    return ok;
  });
}

void criterion_2() {
  criterion(2, "screw-numbers", [&](std::string& d) {
    bool ok = true;
    auto check = [&](const ScrewData& s, const std::string& id, const Rat& scn, long long sv) {
      ok &= expect(d, s.at(id).scn == scn && s.at(id).s == sv, "screw " + id);
    };
    ResolutionGraph a1 = rg("acampo1.rg1");
    ScrewData s1 = compute_screws(a1, multiplicities(a1));
    check(s1, "a-b", Rat(1, 13), 1);
    check(s1, "da", Rat(1, 78), 1);
    check(s1, "db", Rat(1, 78), 1);

    ResolutionGraph a2 = rg("acampo2.rg1");
    ScrewData s2 = compute_screws(a2, multiplicities(a2));
    check(s2, "dl", Rat(1, 42), 10);
    check(s2, "dr", Rat(1, 42), 10);
    check(s2, "la-lb", Rat(1, 210), 1);
    check(s2, "ra-rb", Rat(1, 210), 1);
    // formula value 1/5 for the central orbit; the printed 1/10 is
    // inconsistent with its own s = 21 (see README notes)
    check(s2, "la-ra", Rat(1, 5), 21);

    ResolutionGraph a3 = rg("decomp.rg1");
    ScrewData s3 = compute_screws(a3, multiplicities(a3));
    check(s3, "dl", Rat(1, 14), 3);
    check(s3, "dr", Rat(1, 14), 3);
    check(s3, "dcl", Rat(1, 6), 7);
    check(s3, "dcr", Rat(1, 6), 7);
    check(s3, "la-u", Rat(1, 21), 1);
    check(s3, "ra-u", Rat(1, 21), 1);

    ResolutionGraph si = rg("si.rg1");
    ScrewData s4 = compute_screws(si, multiplicities(si));
    check(s4, "v-v", Rat(1, 1), 1);
    check(s4, "a1", Rat(1, 1), 1);
    check(s4, "a2", Rat(1, 1), 1);
    check(s4, "a3", Rat(1, 1), 1);
    return ok;
  });
}

void criterion_3() {
  criterion(3, "exponents", [&](std::string& d) {
    bool ok = true;
    auto e_of = [&](const std::string& f) {
      ResolutionGraph g = rg(f);
      return exponent_e(g, multiplicities(g));
    };
    ok &= expect(d, e_of("acampo1.rg1") == 78, "e(acampo1)");
    ok &= expect(d, e_of("acampo2.rg1") == 420, "e(acampo2)");
    ok &= expect(d, e_of("decomp.rg1") == 42, "e(decomp)");
    ok &= expect(d, e_of("sss_a.rg1") == 1092, "e(sss_a)");
    ok &= expect(d, e_of("sss_b.rg1") == 1092, "e(sss_b)");
    return ok;
  });
}

void criterion_4() {
  criterion(4, "semistable-graphs", [&](std::string& d) {
    bool ok = true;
    auto genera = [](const NTGraph& g) {
      std::multiset<long long> out;
      for (const Piece& p : g.pieces()) out.insert(to_longlong(p.genus));
      return out;
    };
    auto edge_pair_counts = [](const NTGraph& g) {
      std::map<std::pair<std::string, std::string>, int> c;
      for (const NTEdge& e : g.edges())
        ++c[{std::min(e.from, e.to), std::max(e.from, e.to)}];
      std::multiset<int> out;
      for (auto& [p, n] : c) out.insert(n);
      return out;
    };

    NTGraph g1 = semistable_reduction(rg("acampo1.rg1"));
    ok &= expect(d, genera(g1) == std::multiset<long long>{30, 30}, "acampo1 genera");
    ok &= expect(d, g1.edges().size() == 6 && g1.arrows().size() == 2, "acampo1 edges");
    ok &= expect(d, edge_pair_counts(g1) == std::multiset<int>{6}, "acampo1 parallel class");

    NTGraph g2 = semistable_reduction(rg("acampo2.rg1"));
    ok &= expect(d, genera(g2) == std::multiset<long long>{2, 2, 2, 2, 10, 10}, "acampo2 genera");
    ok &= expect(d, g2.edges().size() == 8, "acampo2 edge count");
    ok &= expect(d, edge_pair_counts(g2) == std::multiset<int>{1, 1, 1, 1, 2, 2},
                 "acampo2 two doubles plus four singles");

    NTGraph g3 = semistable_reduction(rg("decomp.rg1"));
    ok &= expect(d, genera(g3) == std::multiset<long long>{3, 3, 4}, "decomp genera");
    ok &= expect(d, edge_pair_counts(g3) == std::multiset<int>{2, 2}, "decomp double edges");

    for (const char* f : {"sss_a.rg1", "sss_b.rg1"}) {
      NTGraph g4 = semistable_reduction(rg(f));
      ok &= expect(d, genera(g4) == std::multiset<long long>{2, 2, 2, 2, 6, 6, 6, 6},
                   std::string(f) + " genera");
      ok &= expect(d, g4.edges().size() == 12 && g4.arrows().size() == 6,
                   std::string(f) + " sizes");
    }
    return ok;
  });
}

void criterion_5() {
  criterion(5, "characteristic-polynomials", [&](std::string& d) {
    bool ok = true;
    auto a1 = rg("acampo1.rg1");
    auto m1 = multiplicities(a1);
    ok &= expect(d, delta(a1, m1) == cyclo({{1, 1}, {78, 2}, {13, -2}}), "delta acampo1");
    ok &= expect(d, milnor_number(a1, m1) == 131, "mu acampo1");
    ok &= expect(d, delta2(semistable_reduction(a1)) == cyclo({{6, 1}, {1, -1}}),
                 "delta2 acampo1");

    auto a2 = rg("acampo2.rg1");
    auto m2 = multiplicities(a2);
    ok &= expect(d, delta(a2, m2) == cyclo({{1, 1}, {20, 2}, {42, 2}, {10, -2}, {21, -2}}),
                 "delta acampo2");
    ok &= expect(d, milnor_number(a2, m2) == 63, "mu acampo2");
    ok &= expect(d, delta2(semistable_reduction(a2)) == cyclo({{4, 1}, {1, -1}}),
                 "delta2 acampo2");

    auto a3 = rg("decomp.rg1");
    auto m3 = multiplicities(a3);
    ok &= expect(d, delta(a3, m3) == cyclo({{1, 1}, {14, 2}, {6, 2}, {7, -2}}), "delta decomp");
    ok &= expect(d, milnor_number(a3, m3) == 27, "mu decomp");
    // permutation-action value (t+1)^2; divergence from the printed (t-1)^2
    // documented in the README
    ok &= expect(d, delta2(semistable_reduction(a3)) == cyclo({{2, 2}, {1, -2}}),
                 "delta2 decomp");

    for (const char* f : {"sss_a.rg1", "sss_b.rg1"}) {
      auto g = rg(f);
      auto m = multiplicities(g);
      ok &= expect(d, delta(g, m) == cyclo({{1, 1}, {12, 2}, {14, 2}, {26, 2}, {13, -2}}),
                   std::string("delta ") + f);
      ok &= expect(d, milnor_number(g, m) == 79, std::string("mu ") + f);
      ok &= expect(d, delta2(semistable_reduction(g)) == cyclo({{2, 2}, {4, 1}, {1, -3}}),
                   std::string("delta2 ") + f);
    }
    return ok;
  });
}

void criterion_6() {
  criterion(6, "distinguishing-power", [&](std::string& d) {
    bool ok = true;
    GramForm fa = paper_gram("sss_a.nt1", "sss_a.chain1");
    GramForm fb = paper_gram("sss_b.nt1", "sss_b.chain1");

    // frozen values from the pre-build cofactor oracle, recomputed here
    Int det_a("73631181074944566528"), det_b("79601276837777909760");
    ok &= expect(d, det_cofactor(fa.q) == det_a, "cofactor det left");
    ok &= expect(d, det_cofactor(fb.q) == det_b, "cofactor det right");
    ok &= expect(d, det_bareiss(fa.q) == det_a && det_bareiss(fb.q) == det_b, "bareiss dets");
    ok &= expect(d, !is_perfect_square(det_a * det_b), "det ratio not a square");

    IMat aa = absolute_block(fa).q, ab = absolute_block(fb).q;
    Int da5 = det_cofactor(aa), db5 = det_cofactor(ab);
    ok &= expect(d, da5 == Int("5353368384") && db5 == Int("5787425280"), "absolute dets");
    ok &= expect(d, !is_perfect_square(da5 * db5), "absolute det ratio not a square");

    CompareReport r = compare(fa, fb);
    auto has = [&](const char* name) {
      return std::find(r.distinguished_by.begin(), r.distinguished_by.end(), name) !=
             r.distinguished_by.end();
    };
    ok &= expect(d, r.distinguished(), "verdict distinguished");
    ok &= expect(d, has("det_squarefree"), "full form det mod squares");
    ok &= expect(d, has("absolute_det_squarefree"), "absolute block det mod squares");
    return ok;
  });
}

void criterion_7() {
  criterion(7, "theta-chain-family", [&](std::string& d) {
    bool ok = true;
    // parametric entries at P1 = a+b+48 = 64, P2 = (a+28)(b+20) = 1023
    IMat want = from({{22506, -11253, 0, 11253},
                      {-11253, 29138, -11253, 3316},
                      {0, -11253, 22506, 0},
                      {11253, 3316, 0, 19049}});
    GramForm f5 = paper_gram("dbm_a5_b11.nt1", "dbm.chain1");
    GramForm f3 = paper_gram("dbm_a3_b13.nt1", "dbm.chain1");
    ok &= expect(d, f5.q == want, "matrix at (5,11)");
    ok &= expect(d, f3.q == want, "matrix at (3,13)");
    ok &= expect(d, f5.q == f3.q, "matrices equal");
    return ok;
  });
}

void criterion_8() {
  criterion(8, "property-suites", [&](std::string& d) {
    bool ok = true;

    const std::vector<std::string> resolutions = {
        "cusp.rg1",   "acampo1.rg1",    "acampo2.rg1",    "decomp.rg1", "sss_a.rg1",
        "sss_b.rg1",  "si.rg1",         "si_min.rg1",     "dbm_a5_b11.rg1",
        "dbm_a3_b13.rg1"};

    // positive definiteness of the screw form for every valid resolution input
    for (const std::string& f : resolutions) {
      NTGraph g = semistable_reduction(rg(f));
      GramForm form = gram(g, default_basis(g));
      ok &= expect(d, is_positive_definite(form.q), "positive definite " + f);
      // absolute-block evenness whenever the quotient is a tree
      if (is_quotient_tree(g))
        ok &= expect(d, is_even_absolute(form), "absolute evenness " + f);
    }
    // non-evenness of the multitwist form (non-tree quotient)
    GramForm si = paper_gram("si.nt1", "si.chain1");
    ok &= expect(d, !invariants(si).even && !invariants(si).even_absolute,
                 "multitwist form not even");

    // congruence invariance under 200 random unimodular changes per golden form
    std::mt19937 rng(20260809);
    for (const auto& [ntf, chf] :
         std::vector<std::pair<std::string, std::string>>{{"acampo1.nt1", "acampo1_nt.chain1"},
                                                          {"acampo2.nt1", "acampo2_nt.chain1"},
                                                          {"decomp.nt1", "decomp_nt.chain1"},
                                                          {"si.nt1", "si.chain1"},
                                                          {"sss_a.nt1", "sss_a.chain1"},
                                                          {"sss_b.nt1", "sss_b.chain1"},
                                                          {"dbm_a5_b11.nt1", "dbm.chain1"}}) {
      GramForm f = paper_gram(ntf, chf);
      FormInvariants base = invariants(f);
      for (int t = 0; t < 200; ++t) {
        IMat u = random_unimodular(f.q.rows(), rng);
        IMat q = u.transposed() * f.q * u;
        bool same = det_bareiss(q) == base.det && smith_normal_form(q) == base.snf &&
                    is_positive_definite(q) == base.positive_definite;
        if (!same) {
          ok &= expect(d, false, "congruence invariance " + ntf);
          break;
        }
      }
    }

    // screw integrality and the rescaling identity s = (e/d) scn
    for (const std::string& f : resolutions) {
      ResolutionGraph g = rg(f);
      auto m = multiplicities(g);
      ScrewData s = compute_screws(g, m);
      for (const BambooScrew& b : s.per_bamboo) {
        ok &= expect(d, b.s > 0 && Rat(b.s) == Rat(s.e) / Rat(b.d) * b.scn,
                     "screw identity " + f + "/" + b.bamboo_id);
        ok &= expect(d, s.e % b.d == 0, "d divides e " + f);
      }
    }

    // multiplicity residual M*m + a = 0 on euler-decorated inputs
    for (const std::string& f : resolutions) {
      ResolutionGraph g = rg(f);
      if (!g.all_euler()) continue;
      IntersectionData id = intersection_matrix(g);
      auto m = solve_multiplicities(g);
      for (std::size_t i = 0; i < id.order.size(); ++i) {
        Int acc = id.arrow_load[i];
        for (std::size_t j = 0; j < id.order.size(); ++j)
          acc += id.matrix(i, j) * m.at(id.order[j]);
        ok &= expect(d, acc == 0, "residual " + f);
      }
    }

    // round-trip parsing on all golden files
    for (const std::string& f : resolutions) {
      std::string text = serialize_resolution(rg(f));
      ok &= expect(d, serialize_resolution(parse_resolution(text, f)) == text, "round trip " + f);
    }
    for (const char* f : {"acampo1.nt1", "acampo2.nt1", "decomp.nt1", "si.nt1", "sss_a.nt1",
                          "sss_b.nt1", "dbm_a5_b11.nt1", "dbm_a3_b13.nt1"}) {
      std::string text = serialize_ntgraph(nt(f));
      ok &= expect(d, serialize_ntgraph(parse_ntgraph(text, f)) == text,
                   std::string("round trip ") + f);
    }

    // gram matrix product vs direct double sum on all NT graphs with <= 6 edges
    for (const char* f : {"acampo1.nt1", "decomp.nt1", "si.nt1"}) {
      NTGraph g = nt(f);
      if (g.edges().size() > 6) continue;
      ChainBasis basis = default_basis(g);
      GramForm form = gram(g, basis);
      for (std::size_t i = 0; i < basis.chains.size(); ++i)
        for (std::size_t j = 0; j < basis.chains.size(); ++j) {
          Int acc = 0;
          for (const NTEdge& e : g.edges())
            acc += e.screw * basis.chains[i].at(e.id) * basis.chains[j].at(e.id);
          for (const NTArrow& a : g.arrows())
            acc += a.screw * basis.chains[i].at(a.id) * basis.chains[j].at(a.id);
          ok &= expect(d, form.q(i, j) == acc, std::string("double-sum oracle ") + f);
        }
    }
    return ok;
  });
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) data_dir = argv[1];
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures != 0) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
