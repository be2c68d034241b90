#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wfrob/group.hpp"
#include "wfrob/linalg.hpp"
#include "wfrob/orbit.hpp"

using namespace wfrob;

namespace {

// Build a y/z-chart polynomial (l+4 slots) from (exponent, coeff) pairs.
LaurentPoly P(int l, std::initializer_list<std::pair<Expvec, Rational>> terms) {
  LaurentPoly p(static_cast<size_t>(l) + 4);
  for (const auto& [e, c] : terms) p.addTerm(e, c);
  return p;
}

}  // namespace

TEST_CASE("root data: pairing tables match the printed examples") {
  GroupSpec s2(2, 1);
  RootData r2(s2);
  CHECK(r2.d(1, 1) == rat(2, 3));
  CHECK(r2.d(1, 2) == rat(1, 3));
  CHECK(r2.d(2, 2) == rat(2, 3));

  GroupSpec s3(3, 1);
  RootData r3(s3);
  CHECK(r3.d(1, 1) == rat(3, 4));
  CHECK(r3.d(1, 2) == rat(1, 2));
  CHECK(r3.d(1, 3) == rat(1, 4));
  CHECK(r3.d(2, 2) == rat(1));
  CHECK(r3.d(2, 3) == rat(1, 2));
  CHECK(r3.d(3, 3) == rat(3, 4));

  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) CHECK(r3.d(a, b) == r3.d(b, a));

  // (omega_i, alpha_j) = delta_ij and roots sum to zero componentwise
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      CHECK(r3.dot(r3.omega[i - 1], r3.alpha[j - 1]) == (i == j ? rat(1) : rat(0)));
  for (int j = 1; j <= 3; ++j) {
    Rational s = 0;
    for (const auto& c : r3.alpha[j - 1]) s += c;
    CHECK(s == 0);
  }
}

TEST_CASE("degrees and duality involution") {
  DegreeData d31{GroupSpec(3, 1)};
  CHECK(d31.d(1) == rat(1));
  CHECK(d31.d(2) == rat(1));
  CHECK(d31.d(3) == rat(1, 2));

  DegreeData d32{GroupSpec(3, 2)};
  CHECK(d32.d(1) == rat(1, 2));
  CHECK(d32.d(2) == rat(1));
  CHECK(d32.d(3) == rat(1));

  DegreeData d21{GroupSpec(2, 1)};
  CHECK(d21.d(1) == rat(1));
  CHECK(d21.d(2) == rat(1));

  for (int l = 2; l <= 5; ++l)
    for (int k = 1; k < l; ++k) {
      DegreeData dd{GroupSpec(l, k)};
      CHECK(dd.d(k) == rat(1));
      CHECK(dd.d(k + 1) == rat(1));
      for (int j = 1; j <= l + 2; ++j) {
        if (j <= l && j != k && j != k + 1) CHECK(dd.d(j) < 1);
        CHECK(dd.dual(dd.dual(j)) == j);
        CHECK(dd.d(j) + dd.d(dd.dual(j)) == rat(1));
      }
    }
}

TEST_CASE("generators: prefactor exponents match the printed y_j (l=2, k=1)") {
  QContext C{GroupSpec(2, 1)};
  // y^1 = e^{(2 pi i/3)(2 x_3 + x_4)} sigma_1: marker exponents (2, 1)
  auto lead = C.ytilde[1].leading();
  CHECK(lead.first[C.nq] == 2);
  CHECK(lead.first[C.nq + 1] == 1);
  // y^2: marker exponents (1, 2)
  auto lead2 = C.ytilde[2].leading();
  CHECK(lead2.first[C.nq] == 1);
  CHECK(lead2.first[C.nq + 1] == 2);
  CHECK(C.ytilde[1].termCount() == 3);
  CHECK(C.ytilde[2].termCount() == 3);
}

TEST_CASE("metric g(y) reproduces the printed 4x4 matrix for (l,k)=(2,1)") {
  const int l = 2;
  auto g = metricGY(GroupSpec(2, 1));
  // slots: y1 y2 | bare3 bare4 | E1 E2
  CHECK(g.at(0, 0) == P(l, {{{0, 1, 0, 0, 1, 0}, rat(2)}}));       // 2 y2 E1
  CHECK(g.at(0, 1) == P(l, {{{0, 0, 0, 0, 1, 1}, rat(3)}}));       // 3 E1 E2
  CHECK(g.at(0, 2) == P(l, {{{1, 0, 0, 0, 0, 0}, rat(1)}}));       // y1
  CHECK(g.at(0, 3).isZero());
  CHECK(g.at(1, 1) == P(l, {{{1, 0, 0, 0, 0, 1}, rat(2)}}));       // 2 y1 E2
  CHECK(g.at(1, 3) == P(l, {{{0, 1, 0, 0, 0, 0}, rat(1)}}));       // y2
  CHECK(g.at(2, 2) == P(l, {{{0, 0, 0, 0, 0, 0}, rat(2)}}));
  CHECK(g.at(2, 3) == P(l, {{{0, 0, 0, 0, 0, 0}, rat(-1)}}));
  CHECK(g.at(3, 3) == P(l, {{{0, 0, 0, 0, 0, 0}, rat(2)}}));
}

TEST_CASE("eta(y) reproduces the printed matrix for (l,k)=(2,1)") {
  const int l = 2;
  GroupSpec s(2, 1);
  auto eta = etaY(s, metricGY(s));
  CHECK(eta.at(0, 0) == P(l, {{{0, 0, 0, 0, 1, 0}, rat(2)}}));  // 2 E1
  CHECK(eta.at(1, 1) == P(l, {{{0, 0, 0, 0, 0, 1}, rat(2)}}));  // 2 E2
  CHECK(eta.at(0, 2) == P(l, {{{0, 0, 0, 0, 0, 0}, rat(1)}}));
  CHECK(eta.at(1, 3) == P(l, {{{0, 0, 0, 0, 0, 0}, rat(1)}}));
  CHECK(eta.at(0, 1).isZero());
  CHECK(eta.at(0, 3).isZero());
  CHECK(eta.at(2, 2).isZero());
  CHECK(eta.at(2, 3).isZero());
  CHECK(eta.at(3, 3).isZero());
}

TEST_CASE("metric g(y) spot entries for (l,k)=(3,1) and (3,2)") {
  const int l = 3;
  {
    auto g = metricGY(GroupSpec(3, 1));
    // g11 = 2 y2 E1 ; g13 = 4 E1 E2 ; g33 = -1/2 (y3)^2 + 2 y2
    CHECK(g.at(0, 0) == P(l, {{{0, 1, 0, 0, 0, 1, 0}, rat(2)}}));
    CHECK(g.at(0, 2) == P(l, {{{0, 0, 0, 0, 0, 1, 1}, rat(4)}}));
    CHECK(g.at(1, 1) == P(l, {{{1, 0, 1, 0, 0, 0, 1}, rat(2)},
                              {{0, 0, 0, 0, 0, 1, 2}, rat(4)}}));
    CHECK(g.at(2, 2) == P(l, {{{0, 0, 2, 0, 0, 0, 0}, rat(-1, 2)},
                              {{0, 1, 0, 0, 0, 0, 0}, rat(2)}}));
    CHECK(g.at(2, 4) == P(l, {{{0, 0, 1, 0, 0, 0, 0}, rat(1, 2)}}));
  }
  {
    auto g = metricGY(GroupSpec(3, 2));
    CHECK(g.at(0, 0) == P(l, {{{2, 0, 0, 0, 0, 0, 0}, rat(-1, 2)},
                              {{0, 1, 0, 0, 0, 0, 0}, rat(2)}}));
    CHECK(g.at(3, 3) == P(l, {{{0, 0, 0, 0, 0, 0, 0}, rat(3, 2)}}));
    CHECK(g.at(0, 1) == P(l, {{{0, 0, 1, 0, 0, 1, 0}, rat(3)}}));
    CHECK(g.at(2, 2) == P(l, {{{0, 1, 0, 0, 0, 0, 1}, rat(2)}}));
  }
}

TEST_CASE("eta(y) spot entry and block structure for (l,k)=(3,1)") {
  const int l = 3;
  GroupSpec s(3, 1);
  auto eta = etaY(s, metricGY(s));
  CHECK(eta.at(1, 2) == P(l, {{{0, 0, 0, 0, 0, 0, 1}, rat(3)}}));  // 3 E2
  // eta^{a,l+1} = delta_{a,k}, eta^{a,l+2} = delta_{a,k+1}
  for (int a = 1; a <= l; ++a) {
    CHECK(eta.at(a - 1, l) ==
          (a == s.k ? LaurentPoly::constant(l + 4, 1) : LaurentPoly(l + 4)));
    CHECK(eta.at(a - 1, l + 1) ==
          (a == s.k + 1 ? LaurentPoly::constant(l + 4, 1) : LaurentPoly(l + 4)));
  }
  // cross-branch block vanishes: eta^{1,j} = 0 for j = 2..l (branch {1} vs rest)
  CHECK(eta.at(0, 1).isZero());
  CHECK(eta.at(0, 2).isZero());
}

TEST_CASE("det eta(y) is a nonzero rational constant") {
  FreeRing ring;
  for (auto [l, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
    GroupSpec s(l, k);
    auto eta = etaY(s, metricGY(s));
    auto det = determinant(ring, eta);
    REQUIRE(!det.isZero());
    CHECK(det.termCount() == 1);
    CHECK(det.leading().first == Expvec(static_cast<size_t>(l) + 4, 0));
  }
}

TEST_CASE("double Lie derivative along e annihilates g and Gamma") {
  for (auto [l, k] : {std::pair{2, 1}, {3, 2}}) {
    GroupSpec s(l, k);
    ChartInfo ci(s, Chart::Y);
    auto g = metricGY(s);
    for (size_t i = 0; i < g.rows; ++i)
      for (size_t j = 0; j < g.cols; ++j)
        CHECK(ci.lieUnity(ci.lieUnity(g.at(i, j))).isZero());
    auto gam = christoffelY(s, g);
    for (int i = 1; i <= l + 2; ++i)
      for (int j = 1; j <= l + 2; ++j)
        for (int m = 1; m <= l + 2; ++m)
          CHECK(ci.lieUnity(ci.lieUnity(gam.at(i, j, m))).isZero());
  }
}

TEST_CASE("christoffel: (l,k)=(2,1) closed entry and symmetrized derivative") {
  GroupSpec s(2, 1);
  auto g = metricGY(s);
  auto gam = christoffelY(s, g);  // ctor asserts dg = Gamma + Gamma^T exactly
  // Gamma_3^{11} = 1/2 d g^{11}/d y^3 = y^2 E1
  CHECK(gam.at(1, 1, 3) == P(2, {{{0, 1, 0, 0, 1, 0}, rat(1)}}));
  // Gamma^{i,l+1} and Gamma^{i,l+2} vanish identically
  for (int i = 1; i <= 4; ++i)
    for (int m = 1; m <= 4; ++m) {
      CHECK(gam.at(i, 3, m).isZero());
      CHECK(gam.at(i, 4, m).isZero());
    }
}

TEST_CASE("christoffel satisfies the covariance identity of the metric pair") {
  // 2 g^{sm} Gamma_m^{ij} = g^{im} d_m g^{js} + g^{sm} d_m g^{ji} - g^{jm} d_m g^{is}
  for (auto [l, k] : {std::pair{2, 1}, {3, 1}}) {
    GroupSpec s(l, k);
    ChartInfo ci(s, Chart::Y);
    auto g = metricGY(s);
    auto gam = christoffelY(s, g);
    const int n = l + 2;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int ss = 1; ss <= n; ++ss) {
          LaurentPoly lhs(static_cast<size_t>(l) + 4), rhs(static_cast<size_t>(l) + 4);
          for (int m = 1; m <= n; ++m) {
            lhs += rat(2) * (g.at(ss - 1, m - 1) * gam.at(i, j, m));
            rhs += g.at(i - 1, m - 1) * ci.deriv(g.at(j - 1, ss - 1), m);
            rhs += g.at(ss - 1, m - 1) * ci.deriv(g.at(j - 1, i - 1), m);
            rhs -= g.at(j - 1, m - 1) * ci.deriv(g.at(i - 1, ss - 1), m);
          }
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("z-chart: printed eta(z) entries and closed facts") {
  const int l = 3;
  {
    GroupSpec s(3, 1);
    auto eta_z = metricToZ(s, etaY(s, metricGY(s)));
    // slots: z1 z2 z3 | bare | E1=e^{z4}, E2=e^{z5-z4}
    CHECK(eta_z.at(0, 0) == P(l, {{{0, 0, 0, 0, 0, 0, 1}, rat(2)}}));   // 2 E2
    CHECK(eta_z.at(0, 1) == P(l, {{{0, 0, 0, 0, 0, 0, 1}, rat(-2)}}));  // -2 E2
    CHECK(eta_z.at(1, 1) == P(l, {{{0, 0, 0, 0, 0, 0, 1}, rat(2)},
                                  {{0, 0, 1, 0, 0, 1, 0}, rat(2)}}));
    CHECK(eta_z.at(1, 2) == P(l, {{{0, 0, 0, 0, 0, 1, 0}, rat(3)}}));   // 3 E1
    CHECK(eta_z.at(2, 2) == P(l, {{{0, 0, 0, 0, 0, 0, 0}, rat(2)}}));
    CHECK(eta_z.at(1, 3) == LaurentPoly::constant(l + 4, 1));
    CHECK(eta_z.at(0, 4) == LaurentPoly::constant(l + 4, 1));
  }
  {
    GroupSpec s(3, 2);
    auto eta_z = metricToZ(s, etaY(s, metricGY(s)));
    CHECK(eta_z.at(0, 1) == P(l, {{{0, 0, 0, 0, 0, 0, 1}, rat(3)}}));   // 3 E2
    CHECK(eta_z.at(0, 0) == P(l, {{{0, 0, 0, 0, 0, 0, 0}, rat(2)}}));
    CHECK(eta_z.at(2, 2) == P(l, {{{1, 0, 0, 0, 0, 0, 1}, rat(2)},
                                  {{0, 0, 0, 0, 0, 1, 0}, rat(2)}}));
    CHECK(eta_z.at(2, 3) == LaurentPoly::constant(l + 4, 1));
    CHECK(eta_z.at(1, 4) == LaurentPoly::constant(l + 4, 1));
  }
}

TEST_CASE("z-chart christoffel transform keeps the symmetrization identity") {
  GroupSpec s(2, 1);
  auto g = metricGY(s);
  auto gz = metricToZ(s, g);
  assertZChartRows(s, gz);
  auto gamz = christoffelToZ(s, christoffelY(s, g));
  ChartInfo ci(s, Chart::Z);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int m = 1; m <= 4; ++m)
        CHECK(ci.deriv(gz.at(i - 1, j - 1), m) == gamz.at(i, j, m) + gamz.at(j, i, m));
}

TEST_CASE("numeric invariance of the generators") {
  for (auto [l, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 3}, {5, 2}}) {
    double dev = invarianceSpotcheck(GroupSpec(l, k), 0xC0FFEE + l * 16 + k);
    CHECK(dev < 1e-10);
  }
}
