#include "wfrob/orbit.hpp"

#include <complex>
#include <random>

#include "wfrob/symreduce.hpp"

namespace wfrob {

namespace {

// (l+1) * d_{j,k} as an exact integer.
int32_t scaledPairing(int l, int j, int k) {
  int mn = std::min(j, k), mx = std::max(j, k);
  return static_cast<int32_t>(mn * (l + 1 - mx));
}

}  // namespace

QContext::QContext(const GroupSpec& s)
    : spec(s), roots(s), degs(s),
      nq(static_cast<size_t>(s.l) + 1),
      nvq(nq + 2),
      ring(nq),
      ytilde(static_cast<size_t>(s.l) + 3, LaurentPoly(nq + 2)) {
  const int l = spec.l, k = spec.k;
  for (int j = 1; j <= l; ++j) {
    Expvec shift(nvq, 0);
    shift[nq] = scaledPairing(l, j, k);
    shift[nq + 1] = scaledPairing(l, j, k + 1);
    ytilde[j] = elementarySymmetric(nvq, nq, static_cast<size_t>(j)).shifted(shift);
  }
  Expvec u1(nvq, 0), u2(nvq, 0);
  u1[nq] = l + 1;
  u2[nq + 1] = l + 1;
  ytilde[l + 1] = LaurentPoly::monomial(u1, rat(1));
  ytilde[l + 2] = LaurentPoly::monomial(u2, rat(1));
}

LaurentPoly QContext::D(int a, const LaurentPoly& p) const {
  const int l = spec.l;
  if (a >= 1 && a <= l) {
    // q_b = e^{2 pi i v_b}, v_b = x_b - x_{b-1}, v_{l+1} = -x_l: the
    // multiplier is the a-th minus the (a+1)-th q-exponent, and it does not
    // depend on the representative modulo q_1...q_{l+1} = 1.
    return p.scaleTerms([a](const Expvec& e) { return Rational(e[a - 1] - e[a]); });
  }
  if (a == l + 1)
    return p.scaleTerms([this, l](const Expvec& e) { return rat(e[nq], l + 1); });
  if (a == l + 2)
    return p.scaleTerms([this, l](const Expvec& e) { return rat(e[nq + 1], l + 1); });
  throw std::out_of_range("derivation index");
}

LaurentPoly QContext::toYChart(const LaurentPoly& p) const {
  const int l = spec.l, k = spec.k;
  const size_t nvy = static_cast<size_t>(l) + 4;
  // Group terms by marker exponents, then reduce each group symmetrically.
  std::map<std::pair<int32_t, int32_t>, LaurentPoly> groups;
  for (const auto& [e, c] : p.terms()) {
    auto key = std::make_pair(e[nq], e[nq + 1]);
    auto it = groups.find(key);
    if (it == groups.end())
      it = groups.emplace(key, LaurentPoly(nvq)).first;
    Expvec qe = e;
    qe[nq] = 0;
    qe[nq + 1] = 0;
    it->second.addTerm(std::move(qe), c);
  }
  LaurentPoly out(nvy);
  for (const auto& [key, qpart] : groups) {
    LaurentPoly red = symReduce(qpart, l);  // sigma exponents in slots 0..l-1
    for (const auto& [se, c] : red.terms()) {
      int32_t p1 = key.first, p2 = key.second;
      for (int j = 1; j <= l; ++j) {
        p1 -= se[j - 1] * scaledPairing(l, j, k);
        p2 -= se[j - 1] * scaledPairing(l, j, k + 1);
      }
      if (p1 % (l + 1) != 0 || p2 % (l + 1) != 0)
        throw std::logic_error("non-integral exponential-marker exponent");
      Expvec ye(nvy, 0);
      for (int j = 1; j <= l; ++j) ye[j - 1] = se[j - 1];
      ye[nvy - 2] = p1 / (l + 1);
      ye[nvy - 1] = p2 / (l + 1);
      out.addTerm(std::move(ye), c);
    }
  }
  return out;
}

namespace {

// D_a ytilde_i for all i,a in 1..l+2, with the two logarithmic coordinate
// rows y^{l+1}, y^{l+2} whose derivatives are Kronecker constants.
std::vector<std::vector<LaurentPoly>> buildDY(const QContext& C) {
  const int l = C.spec.l, n = l + 2;
  std::vector<std::vector<LaurentPoly>> DY(
      n + 1, std::vector<LaurentPoly>(n + 1, LaurentPoly(C.nvq)));
  for (int i = 1; i <= l; ++i)
    for (int a = 1; a <= n; ++a) DY[i][a] = C.D(a, C.ytilde[i]);
  DY[l + 1][l + 1] = LaurentPoly::one(C.nvq);
  DY[l + 2][l + 2] = LaurentPoly::one(C.nvq);
  return DY;
}

struct TauBlock {
  Rational t11, t12, t22;
  explicit TauBlock(const GroupSpec& s)
      : t11(rat(s.k + 1, s.k)), t12(rat(-1)), t22(rat(s.m() + 1, s.m())) {}
};

void assertHomogeneous(const GroupSpec& spec, Chart chart, const LaurentPoly& p,
                       const Rational& target, const char* what) {
  ChartInfo ci(spec, chart);
  if (!isWeightedHomogeneous(p, ci.weights(), target))
    throw std::logic_error(std::string(what) + ": weighted homogeneity violated");
}

}  // namespace

PolyMatrix metricGY(const GroupSpec& spec) {
  QContext C(spec);
  const int l = spec.l, k = spec.k, n = l + 2;
  auto DY = buildDY(C);
  TauBlock tau(spec);
  PolyMatrix g(n, n, static_cast<size_t>(l) + 4);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      LaurentPoly acc(C.nvq);
      for (int a = 1; a <= l; ++a)
        for (int b = 1; b <= l; ++b) {
          if (DY[i][a].isZero() || DY[j][b].isZero()) continue;
          acc -= C.roots.d(a, b) * C.ring.mul(DY[i][a], DY[j][b]);
        }
      acc += tau.t11 * C.ring.mul(DY[i][l + 1], DY[j][l + 1]);
      acc += tau.t12 * (C.ring.mul(DY[i][l + 1], DY[j][l + 2]) +
                        C.ring.mul(DY[i][l + 2], DY[j][l + 1]));
      acc += tau.t22 * C.ring.mul(DY[i][l + 2], DY[j][l + 2]);
      LaurentPoly e = C.toYChart(C.ring.normalize(acc));
      g.at(i - 1, j - 1) = e;
      g.at(j - 1, i - 1) = e;
    }

  // Closed-form rows and homogeneity, asserted exactly.
  const size_t nvy = static_cast<size_t>(l) + 4;
  DegreeData dd(spec);
  for (int j = 1; j <= l; ++j) {
    LaurentPoly yj = LaurentPoly::variable(nvy, static_cast<size_t>(j - 1));
    if (g.at(j - 1, l) != (zeta(spec, j) ? dd.d(j) : Rational(0)) * yj)
      throw std::logic_error("metricGY: row l+1 mismatch");
    if (g.at(j - 1, l + 1) != (zeta(spec, j) ? Rational(0) : dd.d(j)) * yj)
      throw std::logic_error("metricGY: row l+2 mismatch");
  }
  if (g.at(l, l) != LaurentPoly::constant(nvy, rat(k + 1, k)) ||
      g.at(l, l + 1) != LaurentPoly::constant(nvy, rat(-1)) ||
      g.at(l + 1, l + 1) != LaurentPoly::constant(nvy, rat(spec.m() + 1, spec.m())))
    throw std::logic_error("metricGY: tau block mismatch");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      assertHomogeneous(spec, Chart::Y, g.at(i - 1, j - 1), dd.d(i) + dd.d(j),
                        "metricGY");
  return g;
}

PolyMatrix etaY(const GroupSpec& spec, const PolyMatrix& g) {
  ChartInfo ci(spec, Chart::Y);
  PolyMatrix eta(g.rows, g.cols, static_cast<size_t>(spec.l) + 4);
  for (size_t i = 0; i < g.rows; ++i)
    for (size_t j = 0; j < g.cols; ++j)
      eta.at(i, j) = ci.lieUnity(g.at(i, j));
  return eta;
}

Christoffel christoffelY(const GroupSpec& spec, const PolyMatrix& g) {
  QContext C(spec);
  const int l = spec.l, n = l + 2;
  auto DY = buildDY(C);
  TauBlock tau(spec);

  // Second logarithmic derivatives of the polynomial generators.
  // DDY[j][b][r] = D_b D_r ytilde_j; the log-coordinate rows vanish.
  std::vector<std::vector<std::vector<LaurentPoly>>> DDY(
      l + 1, std::vector<std::vector<LaurentPoly>>(
                 n + 1, std::vector<LaurentPoly>(n + 1, LaurentPoly(C.nvq))));
  for (int j = 1; j <= l; ++j)
    for (int r = 1; r <= n; ++r) {
      LaurentPoly dr = C.D(r, C.ytilde[j]);
      for (int b = 1; b <= n; ++b) DDY[j][b][r] = C.D(b, dr);
    }

  // Right-hand sides R^{ij}_r of Gamma_m^{ij} D_r y^m = R^{ij}_r; zero for
  // j > l because y^{l+1}, y^{l+2} have constant first derivatives.
  auto rhs = [&](int i, int j, int r) {
    LaurentPoly acc(C.nvq);
    if (j > l) return acc;
    for (int a = 1; a <= l; ++a) {
      if (DY[i][a].isZero()) continue;
      for (int b = 1; b <= l; ++b)
        acc -= C.roots.d(a, b) * C.ring.mul(DY[i][a], DDY[j][b][r]);
    }
    if (!DY[i][l + 1].isZero()) {
      acc += tau.t11 * C.ring.mul(DY[i][l + 1], DDY[j][l + 1][r]);
      acc += tau.t12 * C.ring.mul(DY[i][l + 1], DDY[j][l + 2][r]);
    }
    if (!DY[i][l + 2].isZero()) {
      acc += tau.t12 * C.ring.mul(DY[i][l + 2], DDY[j][l + 1][r]);
      acc += tau.t22 * C.ring.mul(DY[i][l + 2], DDY[j][l + 2][r]);
    }
    return C.ring.normalize(acc);
  };

  // Shared l x l Jacobian system over the rows r = 1..l; every (i,j) pair is
  // one augmented right-hand-side column.
  PolyMatrix J(l, l, C.nvq);
  for (int r = 1; r <= l; ++r)
    for (int m = 1; m <= l; ++m) J.at(r - 1, m - 1) = C.D(r, C.ytilde[m]);

  std::vector<std::pair<int, int>> cols;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= l; ++j) cols.emplace_back(i, j);
  PolyMatrix B(l, cols.size(), C.nvq);
  std::vector<std::vector<LaurentPoly>> Rtop(cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    auto [i, j] = cols[c];
    for (int r = 1; r <= l; ++r) B.at(r - 1, c) = rhs(i, j, r);
  }
  FractionSolution sol = bareissSolve(C.ring, J, B);

  Christoffel gam(n, static_cast<size_t>(l) + 4);
  DegreeData dd(spec);
  ChartInfo ci(spec, Chart::Y);
  for (size_t c = 0; c < cols.size(); ++c) {
    auto [i, j] = cols[c];
    std::vector<LaurentPoly> gq(static_cast<size_t>(n) + 1, LaurentPoly(C.nvq));
    for (int m = 1; m <= l; ++m) {
      auto q = C.ring.div(sol.num.at(m - 1, c), sol.den);
      if (!q)
        throw NonPolynomialResult("christoffelY: division left a remainder");
      gq[m] = *q;
    }
    // Rows r = l+1, l+2 determine the two remaining unknowns directly:
    // D_{l+1} ytilde_m = d_{m,k} ytilde_m and D_{l+1} y^{l+1} = 1.
    for (int extra = 1; extra <= 2; ++extra) {
      int r = l + extra;
      LaurentPoly acc = rhs(i, j, r);
      for (int m = 1; m <= l; ++m)
        acc -= C.ring.mul(gq[m], C.D(r, C.ytilde[m]));
      gq[l + extra] = C.ring.normalize(acc);
    }
    for (int m = 1; m <= n; ++m) {
      LaurentPoly e = C.toYChart(gq[m]);
      assertHomogeneous(spec, Chart::Y, e, dd.d(i) + dd.d(j) - dd.d(m),
                        "christoffelY");
      for (const auto& [ex, co] : e.terms())
        if (ex[l + 2] < 0 || ex[l + 3] < 0)
          throw std::logic_error("christoffelY: negative marker exponent");
      gam.at(i, j, m) = e;
    }
  }
  // Symmetrization identity dg^{ij}/dy^m = Gamma_m^{ij} + Gamma_m^{ji}.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int m = 1; m <= n; ++m)
        if (ci.deriv(g.at(i - 1, j - 1), m) != gam.at(i, j, m) + gam.at(j, i, m))
          throw std::logic_error("christoffelY: metric-derivative identity failed");
  return gam;
}

namespace {

// Constant Jacobians of the y -> z change of coordinates: A[alpha][i] =
// dz^alpha/dy^i and Ainv[m][gamma] = dy^m/dz^gamma (1-based).
std::vector<std::vector<Rational>> zJacobian(const GroupSpec& s, bool inverse) {
  const int l = s.l, k = s.k, n = l + 2;
  std::vector<std::vector<Rational>> A(n + 1, std::vector<Rational>(n + 1, 0));
  for (int i = 1; i <= n; ++i) A[i][i] = 1;
  if (!inverse) {
    A[k + 1][k] = -1;
    A[l + 1][l + 1] = 0;
    A[l + 1][l + 2] = 1;
    A[l + 2][l + 1] = 1;
    A[l + 2][l + 2] = 1;
  } else {
    // y^{k+1} = z^k + z^{k+1}; y^{l+1} = z^{l+2} - z^{l+1}; y^{l+2} = z^{l+1}
    A[k + 1][k] = 1;
    A[l + 1][l + 1] = -1;
    A[l + 1][l + 2] = 1;
    A[l + 2][l + 1] = 1;
    A[l + 2][l + 2] = 0;
  }
  return A;
}

}  // namespace

LaurentPoly entryToZ(const GroupSpec& spec, const LaurentPoly& p) {
  const int l = spec.l, k = spec.k;
  const size_t nv = static_cast<size_t>(l) + 4;
  // Swap the two marker slots (E1 <-> E2 under the change of chart), then
  // substitute y^{k+1} = z^k + z^{k+1}. Bare log slots must not appear.
  LaurentPoly swapped(nv);
  for (const auto& [e, c] : p.terms()) {
    if (e[l] != 0 || e[l + 1] != 0)
      throw std::logic_error("entryToZ: bare logarithmic coordinate present");
    Expvec ne = e;
    std::swap(ne[nv - 2], ne[nv - 1]);
    swapped.addTerm(std::move(ne), c);
  }
  std::vector<std::optional<LaurentPoly>> repl(nv);
  repl[k] = LaurentPoly::variable(nv, static_cast<size_t>(k - 1)) +
            LaurentPoly::variable(nv, static_cast<size_t>(k));
  return substitute(swapped, repl);
}

PolyMatrix metricToZ(const GroupSpec& spec, const PolyMatrix& g_y) {
  const int l = spec.l, n = l + 2;
  const size_t nv = static_cast<size_t>(l) + 4;
  auto A = zJacobian(spec, false);
  PolyMatrix gz(n, n, nv);
  for (int al = 1; al <= n; ++al)
    for (int be = 1; be <= n; ++be) {
      LaurentPoly acc(nv);
      for (int i = 1; i <= n; ++i) {
        if (A[al][i] == 0) continue;
        for (int j = 1; j <= n; ++j) {
          if (A[be][j] == 0) continue;
          acc += A[al][i] * A[be][j] * g_y.at(i - 1, j - 1);
        }
      }
      gz.at(al - 1, be - 1) = entryToZ(spec, acc);
    }
  return gz;
}

void assertZChartRows(const GroupSpec& spec, const PolyMatrix& gz) {
  const int l = spec.l, k = spec.k;
  const size_t nv = static_cast<size_t>(l) + 4;
  LaurentPoly zk = LaurentPoly::variable(nv, static_cast<size_t>(k - 1));
  if (!gz.at(k - 1, l).isZero() || gz.at(k - 1, l + 1) != zk ||
      gz.at(l + 1, l + 1) !=
          LaurentPoly::constant(nv, rat(l, static_cast<long>(k) * spec.m())))
    throw std::logic_error("z-chart closed rows of g mismatch");
}

Christoffel christoffelToZ(const GroupSpec& spec, const Christoffel& gamma_y) {
  const int n = spec.l + 2;
  const size_t nv = static_cast<size_t>(spec.l) + 4;
  auto A = zJacobian(spec, false);
  auto Ainv = zJacobian(spec, true);
  Christoffel gz(n, nv);
  for (int al = 1; al <= n; ++al)
    for (int be = 1; be <= n; ++be)
      for (int ga = 1; ga <= n; ++ga) {
        LaurentPoly acc(nv);
        for (int i = 1; i <= n; ++i) {
          if (A[al][i] == 0) continue;
          for (int j = 1; j <= n; ++j) {
            if (A[be][j] == 0) continue;
            for (int m = 1; m <= n; ++m) {
              if (Ainv[m][ga] == 0) continue;
              acc += A[al][i] * A[be][j] * Ainv[m][ga] * gamma_y.at(i, j, m);
            }
          }
        }
        gz.at(al, be, ga) = entryToZ(spec, acc);
      }
  return gz;
}

double invarianceSpotcheck(const GroupSpec& spec, uint64_t seed) {
  using C = std::complex<double>;
  const int l = spec.l, k = spec.k;
  const double twoPi = 2.0 * 3.14159265358979323846;
  RootData roots(spec);

  auto evalY = [&](const std::vector<C>& x) {
    // x has l+2 entries (1-based below via x[a-1])
    std::vector<C> q(l + 1);
    for (int a = 1; a <= l; ++a) {
      C v = x[a - 1] - (a >= 2 ? x[a - 2] : C(0));
      q[a - 1] = std::exp(C(0, 1) * twoPi * v);
    }
    q[l] = std::exp(C(0, 1) * twoPi * (-x[l - 1]));
    std::vector<C> out(l + 3);
    // elementary symmetric values via the product of (1 + q_a t)
    std::vector<C> sig(l + 2, C(0));
    sig[0] = 1;
    for (int a = 0; a <= l; ++a)
      for (int j = std::min(a + 1, l + 1); j >= 1; --j) sig[j] += sig[j - 1] * q[a];
    for (int j = 1; j <= l; ++j) {
      C pre = std::exp(C(0, 1) * twoPi *
                       (to_double(roots.d(j, k)) * x[l] +
                        to_double(roots.d(j, k + 1)) * x[l + 1]));
      out[j] = pre * sig[j];
    }
    out[l + 1] = std::exp(C(0, 1) * twoPi * x[l]);
    out[l + 2] = std::exp(C(0, 1) * twoPi * x[l + 1]);
    return out;
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<C> x(l + 2);
  for (auto& xv : x) xv = C(uni(rng), 0.3 * uni(rng));
  auto base = evalY(x);

  double dev = 0;
  auto record = [&](const std::vector<C>& y) {
    for (int j = 1; j <= l + 2; ++j)
      dev = std::max(dev, std::abs(y[j] - base[j]) / (1.0 + std::abs(base[j])));
  };

  // (1) random permutation of the Fourier variables (finite Weyl action)
  {
    std::vector<C> v(l + 1);
    for (int a = 1; a <= l; ++a) v[a - 1] = x[a - 1] - (a >= 2 ? x[a - 2] : C(0));
    v[l] = -x[l - 1];
    std::shuffle(v.begin(), v.end(), rng);
    std::vector<C> xp = x;
    C acc(0);
    for (int a = 1; a <= l; ++a) {
      acc += v[a - 1];
      xp[a - 1] = acc;
    }
    record(evalY(xp));
  }
  // (2) coroot translation: x_j += 1 for a random j <= l
  {
    std::vector<C> xp = x;
    std::uniform_int_distribution<int> pick(1, l);
    xp[pick(rng) - 1] += 1.0;
    record(evalY(xp));
  }
  // (3) marked shift by omega_k with x_{l+1} -> x_{l+1} - 1
  {
    std::vector<C> xp = x;
    for (int a = 1; a <= l; ++a) xp[a - 1] += to_double(roots.d(a, k));
    xp[l] -= 1.0;
    record(evalY(xp));
  }
  // (4) marked shift by omega_{k+1} with x_{l+2} -> x_{l+2} - 1
  {
    std::vector<C> xp = x;
    for (int a = 1; a <= l; ++a) xp[a - 1] += to_double(roots.d(a, k + 1));
    xp[l + 1] -= 1.0;
    record(evalY(xp));
  }
  return dev;
}

}  // namespace wfrob
