#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wfrob/frobenius.hpp"

namespace wfrob {

using Complex = std::complex<double>;

struct ZeroCoordinate : std::runtime_error {
  ZeroCoordinate() : std::runtime_error("marker coordinate is zero") {}
};
struct DegenerateCritical : std::runtime_error {
  explicit DegenerateCritical(const std::string& w) : std::runtime_error(w) {}
};
struct MismatchBeyondTolerance : std::runtime_error {
  explicit MismatchBeyondTolerance(const std::string& w)
      : std::runtime_error(w) {}
};

/// Numeric orbit-map: torus point x (0-based, l+2 entries) to the values
/// (ytilde_1, ..., ytilde_{l+2}) (returned 1-based).
std::vector<Complex> evalYTilde(const GroupSpec& spec,
                                const std::vector<Complex>& x);

/// A superpotential lambda(phi) = (e^{i phi} - a_{l+2})^{-1}
/// (e^{i(k+1)phi} + a_1 e^{ik phi} + ... + a_{l+1} e^{i(k-l)phi}),
/// stored by its coefficients a[1..l+2] (1-based).
struct LGPoint {
  GroupSpec spec;
  std::vector<Complex> a;
};

/// The covering map from orbit coordinates to superpotential coefficients.
LGPoint fromOrbitPoint(const GroupSpec& spec,
                       const std::vector<Complex>& ytilde);

/// lambda as a function of u = e^{i phi}.
Complex lambdaAt(const LGPoint& p, Complex u);
/// d lambda / d a_j at fixed u (1 <= j <= l+2).
Complex dLambdaDa(const LGPoint& p, int j, Complex u);
/// u d lambda / d u (the phi-derivative is i times this).
Complex uLambdaU(const LGPoint& p, Complex u);

/// Critical points U_alpha = e^{i psi_alpha} of lambda, their critical
/// values and second phi-derivatives.
struct CriticalData {
  std::vector<Complex> U;     // 0-based, l+2 entries
  std::vector<Complex> u;     // critical values lambda(U_alpha)
  std::vector<Complex> lam2;  // lambda''(psi_alpha)
  double lamPrimeResidual = 0;
};
CriticalData criticalPoints(const LGPoint& p);

/// Residue metrics pulled back to the coefficient coordinates a_1..a_{l+2}
/// (covariant matrices), with a contour-quadrature cross-check of the
/// diagonal residue formulas.
struct ResidueMetrics {
  std::vector<std::vector<Complex>> etaA, gA;  // 0-based (l+2)x(l+2)
  double quadRelErr = 0;
};
ResidueMetrics residueMetrics(const LGPoint& p, const CriticalData& c);

/// The phi-coordinates of the factorized superpotential, built from x; the
/// construction is verified against the coefficient route at random test
/// values of u (throws MismatchBeyondTolerance on disagreement).
struct PhiChart {
  std::vector<Complex> phi;  // 1-based phi[1..l+2]
};
PhiChart factorizePhi(const GroupSpec& spec, const std::vector<Complex>& x,
                      double tol = 1e-10);

/// Closed-form residue identity: the double-pole sums equal
/// delta_{ab} - 1/k, -1/k, or -1 - 1/k according to the index pattern.
/// Returns the maximum absolute deviation.
double am26Check(const LGPoint& p, const CriticalData& c, const PhiChart& ph);

/// Pairings of the varpi 1-forms computed from the residue side against
/// their closed values. Returns maximum absolute deviation.
double piPairingCheck(const GroupSpec& spec, const LGPoint& p,
                      const CriticalData& c, const PhiChart& ph);

/// Finite-difference check that the unity shift of the superpotential
/// (a_k += c, a_{k+1} -= c a_{l+2}) maps the intersection form to the flat
/// metric in canonical coordinates. Returns max relative deviation.
double shiftUnityCheck(const LGPoint& p);

/// Numerical associativity of the Frobenius multiplication obtained from
/// the residue structure constants in a-coordinates. Returns the largest
/// commutator entry.
double associativityCheck(const LGPoint& p, const CriticalData& c);

/// Exact rational check that the orbit-space Euler field pushes forward to
/// E = sum (j/k) a_j d/da_j + (1/k) a_{l+2} d/da_{l+2}.
bool eulerPushforwardExact(const GroupSpec& spec);

/// One sampled point of the comparison; rejected attempts carry only the
/// flag.
struct LGSample {
  int sample = 0;
  bool rejected = false;
  double lamPrime = 0, quad = 0, am26 = 0, pairing = 0, pullback = 0,
         assoc = 0, shift = 0;
};

/// Aggregate verification of the local isomorphism between the orbit-space
/// structure and the superpotential structure at seeded random points.
struct LGReport {
  int samples = 0;
  int rejected = 0;
  std::vector<LGSample> records;
  double worstLamPrime = 0;
  double worstQuad = 0;
  double worstAm26 = 0;
  double worstPairing = 0;
  double worstPullback = 0;
  double worstAssoc = 0;
  double worstShift = 0;
  bool eulerExact = false;

  bool pass() const {
    return eulerExact && worstLamPrime < 1e-12 && worstQuad < 1e-8 &&
           worstAm26 < 1e-9 && worstPairing < 1e-9 && worstPullback < 1e-8 &&
           worstAssoc < 1e-7 && worstShift < 1e-6 &&
           rejected * 5 <= samples + rejected;
  }
};
LGReport theoremMain2Check(const OrbitData& od, uint64_t seed, int samples);

}  // namespace wfrob
