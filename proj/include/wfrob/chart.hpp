#pragma once

#include "wfrob/group.hpp"
#include "wfrob/laurent.hpp"

namespace wfrob {

/// Coordinate charts on the orbit space. All three use the same slot layout
/// ( l+4 slots ):
///   0 .. l-1 : the polynomial coordinates v^1..v^l (y^j, z^j or t^j)
///   l, l+1   : the bare logarithmic coordinates v^{l+1}, v^{l+2} (weight 0;
///              appear only transiently)
///   l+2, l+3 : the exponential markers E1, E2.
/// In the y-chart E1 = e^{y^{l+1}}, E2 = e^{y^{l+2}}. In the z- and t-charts
/// E1 = e^{z^{l+1}}, E2 = e^{z^{l+2}-z^{l+1}} (the markers swap under the
/// y->z change of coordinates).
enum class Chart { Y, Z, T };

struct ChartInfo {
  GroupSpec spec;
  Chart chart;

  ChartInfo(const GroupSpec& s, Chart c) : spec(s), chart(c) {}

  size_t nv() const { return static_cast<size_t>(spec.l) + 4; }
  size_t slotE1() const { return static_cast<size_t>(spec.l) + 2; }
  size_t slotE2() const { return static_cast<size_t>(spec.l) + 3; }

  /// Per-slot quasi-homogeneity weights.
  std::vector<Rational> weights() const {
    DegreeData dd(spec);
    std::vector<Rational> w(nv(), Rational(0));
    for (int j = 1; j <= spec.l; ++j) w[j - 1] = dd.d(j);
    if (chart == Chart::Y) {
      w[slotE1()] = rat(1, spec.k);
      w[slotE2()] = rat(1, spec.m());
    } else {
      w[slotE1()] = rat(1, spec.m());
      w[slotE2()] = rat(1, spec.k);
    }
    return w;
  }

  /// Partial derivative with respect to coordinate i (1-based, 1..l+2),
  /// including the action on the exponential markers.
  LaurentPoly deriv(const LaurentPoly& p, int i) const {
    const int l = spec.l;
    if (i >= 1 && i <= l) return p.derivative(static_cast<size_t>(i - 1));
    if (i == l + 1) {
      auto marker = (chart == Chart::Y)
          ? p.scaleTerms([this](const Expvec& e) { return Rational(e[slotE1()]); })
          : p.scaleTerms([this](const Expvec& e) {
              return Rational(e[slotE1()] - e[slotE2()]);
            });
      return p.derivative(static_cast<size_t>(l)) + marker;
    }
    if (i == l + 2) {
      return p.derivative(static_cast<size_t>(l) + 1) +
             p.scaleTerms([this](const Expvec& e) { return Rational(e[slotE2()]); });
    }
    throw std::out_of_range("coordinate index");
  }

  /// Lie derivative along the unity vector field e = d/dy^k + d/dy^{k+1}
  /// (which is d/dz^k in the z- and t-charts).
  LaurentPoly lieUnity(const LaurentPoly& p) const {
    if (chart == Chart::Y) return deriv(p, spec.k) + deriv(p, spec.k + 1);
    return deriv(p, spec.k);
  }

  /// Components of the Euler vector field on the two logarithmic slots:
  /// (1/k, 1/(l-k)) in the y-chart, (1/(l-k), l/(k(l-k))) in the z/t-charts.
  std::pair<Rational, Rational> eulerLogComponents() const {
    if (chart == Chart::Y) return {rat(1, spec.k), rat(1, spec.m())};
    return {rat(1, spec.m()), rat(spec.l, static_cast<long>(spec.k) * spec.m())};
  }

  /// Lie derivative along the Euler vector field
  /// E = sum_a d_a v^a d/dv^a + c1 d/dv^{l+1} + c2 d/dv^{l+2}.
  /// On terms free of the bare logarithmic slots this multiplies each term
  /// by its weighted degree.
  LaurentPoly lieEuler(const LaurentPoly& p) const {
    DegreeData dd(spec);
    auto [c1, c2] = eulerLogComponents();
    LaurentPoly r(p.nvars());
    for (int a = 1; a <= spec.l; ++a) {
      LaurentPoly d = deriv(p, a);
      if (d.isZero()) continue;
      Expvec sh(nv(), 0);
      sh[a - 1] = 1;
      r += dd.d(a) * d.shifted(sh);
    }
    r += c1 * deriv(p, spec.l + 1);
    r += c2 * deriv(p, spec.l + 2);
    return r;
  }
};

}  // namespace wfrob
