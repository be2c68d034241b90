#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wfrob/frobenius.hpp"

using namespace wfrob;

namespace {

// Convenience builder: a monomial c * z1^{e1}...zl^{el} * E1^{f1} E2^{f2}
// in the shared chart layout (works for z- and t-chart polynomials alike).
struct Mono {
  Rational c;
  std::vector<int> ze;  // exponents of the polynomial slots 1..l
  int e1 = 0, e2 = 0;
};

LaurentPoly poly(int l, std::initializer_list<Mono> ms) {
  size_t nv = static_cast<size_t>(l) + 4;
  LaurentPoly p(nv);
  for (const auto& m : ms) {
    Expvec e(nv, 0);
    for (size_t i = 0; i < m.ze.size(); ++i) e[i] = m.ze[i];
    e[nv - 2] = m.e1;
    e[nv - 1] = m.e2;
    p.addTerm(e, m.c);
  }
  return p;
}

LaurentPoly bareLog(int l, int which /*1 or 2*/) {
  size_t nv = static_cast<size_t>(l) + 4;
  return LaurentPoly::variable(nv, static_cast<size_t>(l) + (which - 1));
}

}  // namespace

TEST_CASE("flat coordinates reproduce the printed l=2, k=1 example") {
  GroupSpec spec(2, 1);
  OrbitData od = OrbitData::build(spec);
  FlatCoords fc = flatCoordinates(od);
  // t1 = z1 - E2, t2 = z2 + E2 - E1, t3 = z3, t4 = z4
  CHECK(fc.t[1] == poly(2, {{rat(1), {1, 0}}, {rat(-1), {0, 0}, 0, 1}}));
  CHECK(fc.t[2] == poly(2, {{rat(1), {0, 1}},
                            {rat(1), {0, 0}, 0, 1},
                            {rat(-1), {0, 0}, 1, 0}}));
  CHECK(fc.t[3] == bareLog(2, 1));
  CHECK(fc.t[4] == bareLog(2, 2));

  // eta(t) is the pairing that swaps 1<->4 and 2<->3.
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      CHECK(fc.eta_t[i][j] == (i + j == 5 ? rat(1) : rat(0)));
}

TEST_CASE("flat coordinates reproduce the printed l=3 examples") {
  SUBCASE("k=1") {
    GroupSpec spec(3, 1);
    OrbitData od = OrbitData::build(spec);
    FlatCoords fc = flatCoordinates(od);
    // t1 = z1 - E2, t2 = z2 - z3 E1 + E2 + E1^2, t3 = z3 - E1
    CHECK(fc.t[1] == poly(3, {{rat(1), {1, 0, 0}}, {rat(-1), {0, 0, 0}, 0, 1}}));
    CHECK(fc.t[2] == poly(3, {{rat(1), {0, 1, 0}},
                              {rat(-1), {0, 0, 1}, 1, 0},
                              {rat(1), {0, 0, 0}, 0, 1},
                              {rat(1), {0, 0, 0}, 2, 0}}));
    CHECK(fc.t[3] == poly(3, {{rat(1), {0, 0, 1}}, {rat(-1), {0, 0, 0}, 1, 0}}));
  }
  SUBCASE("k=2") {
    GroupSpec spec(3, 2);
    OrbitData od = OrbitData::build(spec);
    FlatCoords fc = flatCoordinates(od);
    // t1 = z1 - E2, t2 = z2 - z1 E2 + E2^2, t3 = z3 - E1 + z1 E2 - E2^2
    CHECK(fc.t[1] == poly(3, {{rat(1), {1, 0, 0}}, {rat(-1), {0, 0, 0}, 0, 1}}));
    CHECK(fc.t[2] == poly(3, {{rat(1), {0, 1, 0}},
                              {rat(-1), {1, 0, 0}, 0, 1},
                              {rat(1), {0, 0, 0}, 0, 2}}));
    CHECK(fc.t[3] == poly(3, {{rat(1), {0, 0, 1}},
                              {rat(-1), {0, 0, 0}, 1, 0},
                              {rat(1), {1, 0, 0}, 0, 1},
                              {rat(-1), {0, 0, 0}, 0, 2}}));
  }
}

TEST_CASE("potential reproduces the printed l=2, k=1 example") {
  GroupSpec spec(2, 1);
  FrobeniusStructure fs = buildFrobenius(OrbitData::build(spec));
  // F = 1/2 t1^2 t4 + t1 t2 t3 + 1/2 t2^2 t3
  //     + e^{t4} - t2 e^{t3} + t2 e^{t4-t3} + 1/2 t2^2 log t2,
  // with e^{t3} = E1, e^{t4-t3} = E2, e^{t4} = E1 E2.
  LaurentPoly expect = poly(2, {{rat(1), {0, 0}, 1, 1},
                                {rat(-1), {0, 1}, 1, 0},
                                {rat(1), {0, 1}, 0, 1}});
  expect += rat(1, 2) * (poly(2, {{rat(1), {2, 0}}}) * bareLog(2, 2));
  expect += poly(2, {{rat(1), {1, 1}}}) * bareLog(2, 1);
  expect += rat(1, 2) * (poly(2, {{rat(1), {0, 2}}}) * bareLog(2, 1));
  CHECK(fs.potential.Fhat == expect);
  CHECK(fs.potential.logCoeff == rat(1, 2));
  CHECK(fs.potential.logVar == 2);
}

TEST_CASE("potential reproduces the printed l=3 examples") {
  SUBCASE("k=1") {
    GroupSpec spec(3, 1);
    FrobeniusStructure fs = buildFrobenius(OrbitData::build(spec));
    // F = 1/2 t1^2 t5 + t1 t2 t4 + 1/2 t2^2 t4 + 1/4 t3^2 t2 + 1/4 t3^2 t1
    //     - 1/96 t3^4 + t3 E1 E2 - t2 t3 E1 + t2 E2 + 1/2 t2 E1^2
    //     + 1/2 t2^2 log t2.
    LaurentPoly expect = poly(3, {{rat(1, 4), {1, 0, 2}},
                                  {rat(1, 4), {0, 1, 2}},
                                  {rat(-1, 96), {0, 0, 4}},
                                  {rat(1), {0, 0, 1}, 1, 1},
                                  {rat(-1), {0, 1, 1}, 1, 0},
                                  {rat(1), {0, 1, 0}, 0, 1},
                                  {rat(1, 2), {0, 1, 0}, 2, 0}});
    expect += rat(1, 2) * (poly(3, {{rat(1), {2, 0, 0}}}) * bareLog(3, 2));
    expect += poly(3, {{rat(1), {1, 1, 0}}}) * bareLog(3, 1);
    expect += rat(1, 2) * (poly(3, {{rat(1), {0, 2, 0}}}) * bareLog(3, 1));
    CHECK(fs.potential.Fhat == expect);
    CHECK(fs.potential.logVar == 2);
  }
  SUBCASE("k=2") {
    GroupSpec spec(3, 2);
    FrobeniusStructure fs = buildFrobenius(OrbitData::build(spec));
    // F = 1/2 t2^2 t5 + t2 t3 t4 + 1/2 t3^2 t4 + 1/4 t1^2 t2 - 1/96 t1^4
    //     + t1 E1 E2 - t3 E1 + t1 t3 E2 - 1/2 t3 E2^2 + 1/2 t3^2 log t3.
    LaurentPoly expect = poly(3, {{rat(1, 4), {2, 1, 0}},
                                  {rat(-1, 96), {4, 0, 0}},
                                  {rat(1), {1, 0, 0}, 1, 1},
                                  {rat(-1), {0, 0, 1}, 1, 0},
                                  {rat(1), {1, 0, 1}, 0, 1},
                                  {rat(-1, 2), {0, 0, 1}, 0, 2}});
    expect += rat(1, 2) * (poly(3, {{rat(1), {0, 2, 0}}}) * bareLog(3, 2));
    expect += poly(3, {{rat(1), {0, 1, 1}}}) * bareLog(3, 1);
    expect += rat(1, 2) * (poly(3, {{rat(1), {0, 0, 2}}}) * bareLog(3, 1));
    CHECK(fs.potential.Fhat == expect);
    CHECK(fs.potential.logVar == 3);
  }
}

TEST_CASE("Euler field components match the printed examples") {
  {
    EulerField e = eulerField(GroupSpec(2, 1), Chart::T);
    CHECK(e.degreePart == std::vector<Rational>{0, 1, 1});
    CHECK(e.cLog1 == rat(1));
    CHECK(e.cLog2 == rat(2));
  }
  {
    EulerField e = eulerField(GroupSpec(3, 1), Chart::T);
    CHECK(e.degreePart == std::vector<Rational>{0, 1, 1, rat(1, 2)});
    CHECK(e.cLog1 == rat(1, 2));
    CHECK(e.cLog2 == rat(3, 2));
  }
  {
    EulerField e = eulerField(GroupSpec(3, 2), Chart::T);
    CHECK(e.degreePart == std::vector<Rational>{0, rat(1, 2), 1, 1});
    CHECK(e.cLog1 == rat(1));
    CHECK(e.cLog2 == rat(3, 2));
  }
}

TEST_CASE("flat-chart Christoffel rows of the intersection form") {
  // Gamma_j^{l+2,i}(t) = d_j delta_j^i.
  for (auto [l, k] : {std::pair{2, 1}, std::pair{3, 2}}) {
    GroupSpec spec(l, k);
    OrbitData od = OrbitData::build(spec);
    FlatCoords fc = flatCoordinates(od);
    Christoffel gt = christoffelT(od, fc);
    DegreeData dd(spec);
    size_t nv = static_cast<size_t>(l) + 4;
    for (int j = 1; j <= l + 2; ++j)
      for (int i = 1; i <= l + 2; ++i) {
        LaurentPoly want =
            (i == j) ? LaurentPoly::constant(nv, dd.d(j)) : LaurentPoly(nv);
        CHECK(gt.at(l + 2, i, j) == want);
      }
  }
}

TEST_CASE("full structure builds with all internal identities, 2<=l<=4") {
  // buildFrobenius verifies exactly, along the way: eta(t) constancy and
  // pairing, the closed rows of g(t), the z(t) round trip, the potential
  // normalization d^3F/dt^k = eta, and quasi-homogeneity.
  for (int l = 2; l <= 4; ++l)
    for (int k = 1; k < l; ++k) {
      CAPTURE(l);
      CAPTURE(k);
      CHECK_NOTHROW(buildFrobenius(OrbitData::build(GroupSpec(l, k))));
    }
}
