#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "wfrob/frobenius.hpp"

namespace wfrob {

/// Outcome of one named check. Exact checks report residual 0 and
/// exact = true; numeric checks report the worst absolute residual.
struct CheckResult {
  std::string name;
  bool pass = false;
  bool exact = false;
  double residual = 0.0;
};

struct CheckReport {
  std::vector<CheckResult> checks;
  bool allPass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Third derivatives of the potential in flat coordinates, including the
/// logarithmic contribution 1/t^{k+1} at the triple index (k+1,k+1,k+1).
/// `low` holds c_{ijm}; `up` holds c^i_{jm} with the first index raised by
/// the constant flat metric.
struct StructureConstants {
  GroupSpec spec;
  Christoffel low;  // at(i,j,m) = c_{ijm}, totally symmetric
  Christoffel up;   // at(i,j,m) = c^i_{jm}
};

StructureConstants structureConstants(const FrobeniusStructure& fs);

/// Associativity: for all j, p the multiplication matrices
/// (A_j)^i_m = c^i_{jm} commute, as exact Laurent-polynomial identities;
/// also evaluated numerically at 3 seeded random points.
CheckReport wdvvCheck(const FrobeniusStructure& fs,
                      const StructureConstants& sc, uint64_t seed = 42);

/// g^{ab} equals the Euler-Lie derivative of the raised Hessian of F,
/// entrywise exactly (with the constant contribution of the log term at
/// (l+1, l+1)).
CheckReport intersectionCheck(const FrobeniusStructure& fs);

/// Unity is d/dt^k: c^a_{kb} = delta^a_b exactly, and [E, e] = -e.
CheckReport unityEulerCheck(const FrobeniusStructure& fs,
                            const StructureConstants& sc);

/// Numeric flatness of the pencil g + lambda * eta at seeded random complex
/// points: curvature via 4th-order finite differences of the covariant
/// metric, tolerance `tol` (default 1e-6). Points whose pencil matrix has
/// condition number above 1e8 are resampled.
CheckReport pencilFlatnessNumeric(const OrbitData& od, uint64_t seed,
                                  const std::vector<std::complex<double>>& lambdas,
                                  int points = 5, double tol = 1e-6);

}  // namespace wfrob
