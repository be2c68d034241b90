#pragma once

#include <stdexcept>
#include <vector>

#include "wfrob/rational.hpp"

namespace wfrob {

/// Parameters of the extended affine Weyl group of type A_l with the two
/// marked nodes k, k+1 on the Dynkin diagram.
struct GroupSpec {
  int l = 0;
  int k = 0;

  GroupSpec(int l_, int k_) : l(l_), k(k_) {
    if (l < 2 || k < 1 || k >= l)
      throw std::invalid_argument("require l >= 2 and 1 <= k < l");
  }
  int m() const { return l - k; }
};

/// Simple roots, fundamental weights, and their pairing table for A_l in the
/// (l+1)-dimensional ambient space with the standard Euclidean product.
struct RootData {
  int l;
  std::vector<std::vector<Rational>> alpha;  // alpha[j-1], j = 1..l
  std::vector<std::vector<Rational>> omega;  // omega[j-1], j = 1..l

  explicit RootData(const GroupSpec& spec) : l(spec.l) {
    const int n = l + 1;
    alpha.assign(l, std::vector<Rational>(n, 0));
    omega.assign(l, std::vector<Rational>(n, 0));
    for (int j = 1; j <= l; ++j) {
      alpha[j - 1][j - 1] = 1;
      alpha[j - 1][j] = -1;
      // omega_j = e_1 + ... + e_j - (j/(l+1)) * (e_1 + ... + e_{l+1})
      for (int i = 0; i < n; ++i) {
        omega[j - 1][i] = (i < j ? rat(1) : rat(0)) - rat(j, n);
      }
    }
  }

  /// d_{a,b} = (omega_a, omega_b) = min(a,b) * (l+1-max(a,b)) / (l+1).
  Rational d(int a, int b) const {
    int mn = std::min(a, b), mx = std::max(a, b);
    return rat(static_cast<long>(mn) * (l + 1 - mx), l + 1);
  }

  Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
    Rational s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
  }
};

/// Indicator of the first branch of the marked diagram: 1 for j <= k.
inline int zeta(const GroupSpec& spec, int j) { return j <= spec.k ? 1 : 0; }

/// Quasi-homogeneity degrees of the generators and the duality involution
/// pairing degrees to 1.
struct DegreeData {
  GroupSpec spec;
  std::vector<Rational> deg;  // deg[j], j = 1..l+2 (index 0 unused)

  explicit DegreeData(const GroupSpec& s) : spec(s), deg(s.l + 3, Rational(0)) {
    for (int j = 1; j <= s.l; ++j)
      deg[j] = (j <= s.k) ? rat(j, s.k) : rat(s.l - j + 1, s.m());
    // deg[l+1] = deg[l+2] = 0 already
  }

  Rational d(int j) const { return deg.at(j); }

  /// Involution j -> j* with d_j + d_{j*} = 1, extending k* = l+1,
  /// (k+1)* = l+2, (l+1)* = k, (l+2)* = k+1 through both branches.
  int dual(int j) const {
    const int l = spec.l, k = spec.k;
    if (j == k) return l + 1;
    if (j == k + 1) return l + 2;
    if (j == l + 1) return k;
    if (j == l + 2) return k + 1;
    if (j < k) return k - j;
    return l + k + 2 - j;  // k+1 < j <= l
  }
};

}  // namespace wfrob
