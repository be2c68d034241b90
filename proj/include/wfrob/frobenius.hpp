#pragma once

#include "wfrob/chart.hpp"
#include "wfrob/orbit.hpp"

namespace wfrob {

/// All exact orbit-space tensors in both the y- and z-charts.
struct OrbitData {
  GroupSpec spec;
  PolyMatrix g_y, eta_y;
  Christoffel gamma_y;       // Levi-Civita of g, y-chart
  PolyMatrix g_z, eta_z;
  Christoffel gamma_g_z;     // Levi-Civita of g, z-chart
  Christoffel gamma_eta_z;   // Levi-Civita of eta = d(Gamma)/dz^k

  static OrbitData build(const GroupSpec& spec);
};

/// Flat coordinates of eta: t^a = z^a + h^a with h^a a weighted-homogeneous
/// polynomial of degree d_a in the other z's and the markers, normalized so
/// that dt^a/dz^b has identity linear part; t^{l+1} = z^{l+1},
/// t^{l+2} = z^{l+2}.
struct FlatCoords {
  GroupSpec spec;
  std::vector<LaurentPoly> t;     // 1-based t[1..l+2], z-chart polynomials
  std::vector<LaurentPoly> h;     // 1-based h[1..l]
  std::vector<LaurentPoly> zOfT;  // 1-based z[1..l+2], t-chart polynomials
  std::vector<std::vector<Rational>> eta_t;  // constant flat metric, 1-based
};

FlatCoords flatCoordinates(const OrbitData& od);

/// The WDVV potential: F = Fhat + (1/2) (t^{k+1})^2 log t^{k+1}.
/// Fhat is a weighted-homogeneous degree-2 Laurent polynomial in the t-chart
/// slots; the log coefficient is rigidly 1/2.
struct Potential {
  GroupSpec spec;
  LaurentPoly Fhat;
  Rational logCoeff;  // always 1/2
  int logVar;         // always k+1
};

/// Full Frobenius structure data in the flat chart.
struct FrobeniusStructure {
  GroupSpec spec;
  FlatCoords flat;
  PolyMatrix g_t;  // intersection form, t-chart
  std::vector<std::vector<Rational>> eta_t;      // contravariant, 1-based
  std::vector<std::vector<Rational>> eta_low;    // covariant inverse, 1-based
  Potential potential;
};

/// Intersection form in the t-chart, obtained by the contravariant
/// transform through t(z) and the graded inversion z(t). Asserts the closed
/// rows g^{a,l+2}(t) = d_a t^a and the constant lower-right block.
PolyMatrix metricGT(const OrbitData& od, const FlatCoords& fc);

/// Levi-Civita coefficients of g in the t-chart.
Christoffel christoffelT(const OrbitData& od, const FlatCoords& fc);

/// Reconstruct the potential from g(t): fixes the rigid cubic skeleton and
/// the log term, solves the linear system g^{ab} = L_E F^{ab} for the
/// degree-2 homogeneous correction, and verifies the normalization
/// d^3F/dt^k dt^i dt^j = eta_ij and the quasi-homogeneity identity exactly.
Potential solvePotential(const OrbitData& od, const FlatCoords& fc,
                         const PolyMatrix& g_t);

FrobeniusStructure buildFrobenius(const OrbitData& od);

/// Euler field components: entries 1..l are the coefficients of v^a d/dv^a
/// (i.e. d_a), plus the two constant components on the logarithmic slots.
struct EulerField {
  std::vector<Rational> degreePart;  // 1-based, d_1..d_l
  Rational cLog1, cLog2;
};
EulerField eulerField(const GroupSpec& spec, Chart chart);

}  // namespace wfrob
