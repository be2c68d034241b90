#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wfrob/lg.hpp"

using namespace wfrob;

TEST_CASE("orbit point to superpotential coefficients") {
  GroupSpec spec(2, 1);
  std::vector<Complex> yt = {0, 1, 1, 1, 1};  // 1-based
  LGPoint p = fromOrbitPoint(spec, yt);
  CHECK(std::abs(p.a[1] - Complex(-1)) < 1e-15);
  CHECK(std::abs(p.a[2] - Complex(1)) < 1e-15);
  CHECK(std::abs(p.a[3] - Complex(-1)) < 1e-15);
  CHECK(std::abs(p.a[4] - Complex(1)) < 1e-15);

  // a_{l+2} = ytilde_{l+1} for any spec
  GroupSpec s32(3, 2);
  std::vector<Complex> y2 = {0, {0.3, 0.1}, {1.2, 0}, {0.7, -0.2},
                             {0.9, 0.4}, {1.1, -0.3}};
  CHECK(fromOrbitPoint(s32, y2).a[5] == y2[4]);

  yt[3] = 0;  // ytilde_{l+1} = 0
  CHECK_THROWS_AS(fromOrbitPoint(spec, yt), ZeroCoordinate);
}

TEST_CASE("critical points: count l+2 and tiny lambda' residual") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (auto [l, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    GroupSpec spec(l, k);
    int accepted = 0, tried = 0;
    while (accepted < 100 && tried < 150) {
      ++tried;
      std::vector<Complex> x(l + 2);
      for (auto& c : x) c = Complex(uni(rng), 0.15 * (2 * uni(rng) - 1));
      LGPoint p = fromOrbitPoint(spec, evalYTilde(spec, x));
      try {
        CriticalData crit = criticalPoints(p);
        ++accepted;
        CHECK(crit.U.size() == static_cast<size_t>(l + 2));
        CHECK(crit.lamPrimeResidual < 1e-12);
      } catch (const DegenerateCritical&) {
      }
    }
    CHECK(accepted == 100);
  }
}

TEST_CASE("phi factorization round trip") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  GroupSpec spec(3, 2);
  for (int t = 0; t < 5; ++t) {
    std::vector<Complex> x(5);
    for (auto& c : x) c = Complex(uni(rng), 0.1 * (2 * uni(rng) - 1));
    CHECK_NOTHROW(factorizePhi(spec, x));
  }
}

TEST_CASE("residue formula vs contour quadrature, negative control") {
  GroupSpec spec(3, 1);
  std::vector<Complex> x = {{0.31, 0.05}, {0.77, -0.04}, {0.13, 0.08},
                            {0.55, -0.02}, {0.42, 0.06}};
  LGPoint p = fromOrbitPoint(spec, evalYTilde(spec, x));
  CriticalData crit = criticalPoints(p);
  CHECK(residueMetrics(p, crit).quadRelErr < 1e-8);

  CriticalData bad = crit;
  bad.lam2[0] *= 1.01;  // corrupt one second derivative
  CHECK(residueMetrics(p, bad).quadRelErr > 1e-4);
}

TEST_CASE("local isomorphism checks at seeded samples") {
  for (auto [l, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    CAPTURE(l);
    CAPTURE(k);
    OrbitData od = OrbitData::build(GroupSpec(l, k));
    LGReport rep = theoremMain2Check(od, 42, 20);
    CHECK(rep.samples == 20);
    CHECK(rep.eulerExact);
    CHECK(rep.worstLamPrime < 1e-12);
    CHECK(rep.worstQuad < 1e-8);
    CHECK(rep.worstAm26 < 1e-9);
    CHECK(rep.worstPairing < 1e-9);
    CHECK(rep.worstPullback < 1e-8);
    CHECK(rep.worstAssoc < 1e-7);
    CHECK(rep.worstShift < 1e-6);
    CHECK(rep.rejected * 5 <= rep.samples + rep.rejected);
    CHECK(rep.pass());
  }
}
