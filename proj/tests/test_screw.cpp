#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qform/errors.hpp"
#include "qform/multiplicity.hpp"
#include "qform/screw.hpp"
#include "support.hpp"

using namespace qform;

namespace {

ScrewData screws_of(const char* file) {
  ResolutionGraph g = testutil::load_rg(file);
  return compute_screws(g, multiplicities(g));
}

std::vector<Int> ints(std::initializer_list<long long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("exponent e on the worked examples") {
  ResolutionGraph a = testutil::load_rg("acampo1.rg1");
  CHECK(exponent_e(a, multiplicities(a)) == 78);
  ResolutionGraph b = testutil::load_rg("acampo2.rg1");
  CHECK(exponent_e(b, multiplicities(b)) == 420);
  ResolutionGraph c = testutil::load_rg("decomp.rg1");
  CHECK(exponent_e(c, multiplicities(c)) == 42);
  ResolutionGraph d = testutil::load_rg("sss_a.rg1");
  CHECK(exponent_e(d, multiplicities(d)) == 1092);
  ResolutionGraph e = testutil::load_rg("sss_b.rg1");
  CHECK(exponent_e(e, multiplicities(e)) == 1092);
}

TEST_CASE("twist formula on single chains") {
  // central bamboo of the double cusp: d = 6, scn = 1/13, s = 1
  BambooScrew s = screw_of_chain("c", BambooKind::interior, ints({78, 12, 78}), 78);
  CHECK(s.d == 6);
  CHECK(s.scn == Rat(1, 13));
  CHECK(s.s == 1);

  // boundary bamboo (42, arrow): scn = 1/42, s = 10 at e = 420
  s = screw_of_chain("b", BambooKind::boundary, ints({42, 1}), 420);
  CHECK(s.scn == Rat(1, 42));
  CHECK(s.s == 10);

  // central (20, 8, 20): d = 4, scn = 1/5 by the formula, s = 21
  s = screw_of_chain("c3", BambooKind::interior, ints({20, 8, 20}), 420);
  CHECK(s.d == 4);
  CHECK(s.scn == Rat(1, 5));
  CHECK(s.s == 21);

  // loop (1, 2, 1) at e = 1: scn = 1/2 + 1/2 = 1, s = 1
  s = screw_of_chain("l", BambooKind::loop, ints({1, 2, 1}), 1);
  CHECK(s.scn == 1);
  CHECK(s.s == 1);
}

TEST_CASE("gcd must be constant along the chain") {
  CHECK_THROWS_AS(screw_of_chain("x", BambooKind::interior, ints({4, 2, 3}), 12), Error);
  try {
    screw_of_chain("x", BambooKind::interior, ints({4, 2, 3}), 12);
  } catch (const Error& e) {
    CHECK(e.code() == "NonConstantGcd");
    CHECK(e.kind() == ErrorKind::invariant);
  }
}

TEST_CASE("non-integral rescale is a hard error") {
  // chain (3, 5) with e = 15: d = 1, s = 15/15 = 1 fine; with e = 5: s = 1/3
  CHECK_THROWS_AS(screw_of_chain("x", BambooKind::interior, ints({3, 5}), 5), Error);
  try {
    screw_of_chain("x", BambooKind::interior, ints({3, 5}), 5);
  } catch (const Error& e) {
    CHECK(e.code() == "NonIntegralScrew");
  }
}

TEST_CASE("per-bamboo screws of the worked examples") {
  ScrewData a = screws_of("acampo1.rg1");
  CHECK(a.e == 78);
  CHECK(a.at("a-b").scn == Rat(1, 13));
  CHECK(a.at("a-b").s == 1);
  CHECK(a.at("da").scn == Rat(1, 78));
  CHECK(a.at("da").s == 1);
  CHECK(a.at("db").s == 1);

  ScrewData b = screws_of("acampo2.rg1");
  CHECK(b.e == 420);
  CHECK(b.at("la-ra").s == 21);
  CHECK(b.at("la-lb").scn == Rat(1, 210));
  CHECK(b.at("la-lb").s == 1);
  CHECK(b.at("dl").scn == Rat(1, 42));
  CHECK(b.at("dl").s == 10);

  ScrewData c = screws_of("decomp.rg1");
  CHECK(c.e == 42);
  CHECK(c.at("dl").scn == Rat(1, 14));
  CHECK(c.at("dl").s == 3);
  CHECK(c.at("dcl").scn == Rat(1, 6));
  CHECK(c.at("dcl").s == 7);
  CHECK(c.at("la-u").scn == Rat(1, 21));
  CHECK(c.at("la-u").s == 1);

  ScrewData si = screws_of("si.rg1");
  CHECK(si.e == 1);
  CHECK(si.at("v-v").s == 1);
  CHECK(si.at("v-v").kind == BambooKind::loop);
  CHECK(si.at("a1").s == 1);

  // SSS: central 91, 26-side 7, 14-side 13, boundaries 42 and 78
  ScrewData sa = screws_of("sss_a.rg1");
  CHECK(sa.at("qa-qb").s == 91);
  CHECK(sa.at("na1-qa").s == 7);
  CHECK(sa.at("nb1-qb").s == 13);
  CHECK(sa.at("ea1").s == 42);
  CHECK(sa.at("eb1a").s == 78);

  // theta-chain family member (5,11)
  ScrewData d5 = screws_of("dbm_a5_b11.rg1");
  CHECK(d5.e == 143220);
  CHECK(d5.at("m20-m28").s == 11253);
  CHECK(d5.at("l-m28").s == 775);
  CHECK(d5.at("m20-r").s == 2541);
  CHECK(d5.at("al").s == 2170);
  CHECK(d5.at("ar").s == 2310);

  ScrewData d3 = screws_of("dbm_a3_b13.rg1");
  CHECK(d3.e == 143220);
  CHECK(d3.at("m20-m28").s == 11253);
  CHECK(d3.at("l-m28").s == 495);
  CHECK(d3.at("m20-r").s == 2821);
  CHECK(d3.at("al").s == 2310);
  CHECK(d3.at("ar").s == 2170);
}

TEST_CASE("blow-up subdivision keeps scn invariant") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> md(1, 30), len(1, 4), pick(0, 100);
  for (int t = 0; t < 200; ++t) {
    // random chain with constant gcd: scale a coprime-ish chain
    int k = len(rng);
    std::vector<Int> mults{md(rng)};
    for (int i = 0; i < k; ++i) mults.push_back(md(rng));
    Int d0 = gcd(mults[0], mults[1]);
    bool constant = true;
    for (std::size_t i = 0; i + 1 < mults.size(); ++i)
      if (gcd(mults[i], mults[i + 1]) != d0) constant = false;
    if (!constant) continue;

    Rat sum = 0;
    for (std::size_t i = 0; i + 1 < mults.size(); ++i)
      sum += Rat(1) / Rat(mults[i] * mults[i + 1]);
    Rat base = Rat(d0 * d0) * sum;  // independent evaluation of the formula

    // one blow-up: (m_i, m_{i+1}) -> (m_i, m_i + m_{i+1}, m_{i+1})
    std::size_t pos = static_cast<std::size_t>(pick(rng)) % (mults.size() - 1);
    std::vector<Int> refined(mults.begin(), mults.begin() + pos + 1);
    refined.push_back(mults[pos] + mults[pos + 1]);
    refined.insert(refined.end(), mults.begin() + pos + 1, mults.end());
    // gcd stays constant under a blow-up
    Int e = 1;
    for (const Int& m : mults) e = lcm(e, m);
    BambooScrew s1 = screw_of_chain("a", BambooKind::interior, mults, e);
    BambooScrew s2 = screw_of_chain("b", BambooKind::interior, refined, e);
    CHECK(s1.scn == s2.scn);
    CHECK(s1.s == s2.s);
    CHECK(s1.scn == base);
  }
}
