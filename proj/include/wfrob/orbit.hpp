#pragma once

#include "wfrob/chart.hpp"
#include "wfrob/group.hpp"
#include "wfrob/linalg.hpp"

namespace wfrob {

/// Working context for exact computations in the Fourier variables
/// q_1..q_{l+1} (modulo q_1*...*q_{l+1} = 1) with two marker slots U1, U2
/// tracking the exponents of u_r = e^{2 pi i x_{l+r}/(l+1)}. The invariant
/// generators are
///   ytilde_j = u1^{(l+1) d_{j,k}} u2^{(l+1) d_{j,k+1}} sigma_j(q),  j <= l,
///   ytilde_{l+1} = u1^{l+1},  ytilde_{l+2} = u2^{l+1}.
struct QContext {
  GroupSpec spec;
  RootData roots;
  DegreeData degs;
  size_t nq;    // l+1 permuted slots
  size_t nvq;   // nq + 2 marker slots
  QRing ring;
  std::vector<LaurentPoly> ytilde;  // 1-based: ytilde[1..l+2]

  explicit QContext(const GroupSpec& s);

  /// Logarithmic derivation D_a = (1/2 pi i) d/dx_a acting diagonally on
  /// q-chart monomials, a = 1..l+2.
  LaurentPoly D(int a, const LaurentPoly& p) const;

  /// Convert an invariant q-chart polynomial to the y-chart (l+4 slots):
  /// symmetric reduction per marker group plus conversion of net u-exponents
  /// to integral E1, E2 powers.
  LaurentPoly toYChart(const LaurentPoly& p) const;
};

struct NonPolynomialResult : std::logic_error {
  using std::logic_error::logic_error;
};

/// Contravariant 3-tensor Gamma_m^{ij} stored densely over 1-based indices.
struct Christoffel {
  int n = 0;  // l+2
  std::vector<LaurentPoly> v;
  Christoffel() = default;
  Christoffel(int n_, size_t nvars)
      : n(n_), v(static_cast<size_t>(n_) * n_ * n_, LaurentPoly(nvars)) {}
  LaurentPoly& at(int i, int j, int m) {
    return v.at(((static_cast<size_t>(i) - 1) * n + (j - 1)) * n + (m - 1));
  }
  const LaurentPoly& at(int i, int j, int m) const {
    return v.at(((static_cast<size_t>(i) - 1) * n + (j - 1)) * n + (m - 1));
  }
};

/// Intersection form g^{ij}(y) on the orbit space, 1-based indices stored in
/// an (l+2)x(l+2) PolyMatrix over the y-chart slots. Asserts the closed rows
/// g^{j,l+1} = zeta_j d_j y^j etc. and weighted homogeneity.
PolyMatrix metricGY(const GroupSpec& spec);

/// Flat metric eta^{ij}(y) = L_e g^{ij}(y), e = d/dy^k + d/dy^{k+1}.
PolyMatrix etaY(const GroupSpec& spec, const PolyMatrix& g);

/// Contravariant Levi-Civita coefficients Gamma_m^{ij}(y) of the
/// intersection form, extracted exactly from the defining identity through
/// second derivatives. Asserts polynomiality, weighted homogeneity and the
/// symmetrization identity dg^{ij}/dy^m = Gamma_m^{ij} + Gamma_m^{ji}.
Christoffel christoffelY(const GroupSpec& spec, const PolyMatrix& g);

/// Change of coordinates y -> z: z^k = y^k, z^{k+1} = y^{k+1} - y^k,
/// z^{l+1} = y^{l+2}, z^{l+2} = y^{l+1} + y^{l+2}, identity elsewhere.
/// Contravariant transform with the constant Jacobian; markers swap.
LaurentPoly entryToZ(const GroupSpec& spec, const LaurentPoly& p);
PolyMatrix metricToZ(const GroupSpec& spec, const PolyMatrix& g_y);

/// Assert the closed z-chart rows of the intersection form:
/// g^{k,l+1}(z) = 0, g^{k,l+2}(z) = z^k, g^{l+2,l+2}(z) = l/(k(l-k)).
void assertZChartRows(const GroupSpec& spec, const PolyMatrix& gz);
Christoffel christoffelToZ(const GroupSpec& spec, const Christoffel& gamma_y);

/// Numeric invariance spot-check of the generators ytilde under a random
/// Weyl permutation, a coroot translation, and the two marked shifts.
/// Returns the maximal relative deviation over all generators.
double invarianceSpotcheck(const GroupSpec& spec, uint64_t seed);

}  // namespace wfrob
