#include "wfrob/frobenius.hpp"

#include <map>

#include "wfrob/symreduce.hpp"

namespace wfrob {

namespace {

// Collect the linear system "base + sum_mu c_mu col_mu == 0" (polynomial
// identity) into rational rows indexed by monomials, appending to M, rhs.
void appendPolyEquations(const LaurentPoly& base,
                         const std::vector<LaurentPoly>& cols,
                         std::vector<std::vector<Rational>>& M,
                         std::vector<Rational>& rhs) {
  std::map<Expvec, size_t, GradedLexLess> rowOf;
  size_t firstRow = M.size();
  auto rowFor = [&](const Expvec& e) {
    auto it = rowOf.find(e);
    if (it == rowOf.end()) {
      it = rowOf.emplace(e, M.size()).first;
      M.emplace_back(cols.size(), Rational(0));
      rhs.emplace_back(0);
    }
    return it->second;
  };
  for (const auto& [e, c] : base.terms()) rhs[rowFor(e)] -= c;
  for (size_t mu = 0; mu < cols.size(); ++mu)
    for (const auto& [e, c] : cols[mu].terms()) M[rowFor(e)][mu] = c;
  (void)firstRow;
}

// Monomials of the given weighted degree in a subset of slots.
std::vector<Expvec> basisOnSlots(const ChartInfo& ci,
                                 const std::vector<size_t>& slots,
                                 const Rational& target) {
  auto w = ci.weights();
  std::vector<Rational> sub;
  sub.reserve(slots.size());
  for (size_t s : slots) sub.push_back(w[s]);
  std::vector<Expvec> out;
  for (const Expvec& e : weightedBasis(sub, target)) {
    Expvec full(ci.nv(), 0);
    for (size_t i = 0; i < slots.size(); ++i) full[slots[i]] = e[i];
    out.push_back(std::move(full));
  }
  return out;
}

bool isPureLinearZ(const Expvec& e, int l) {
  int nz = 0, where = -1;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) {
      ++nz;
      where = static_cast<int>(i);
    }
  return nz == 1 && where < l && e[where] == 1;
}

// Covariant (inverse) metric of a constant-determinant polynomial matrix:
// adjugate divided by the constant determinant.
PolyMatrix covariantOfConstantDet(const PolyMatrix& m) {
  FreeRing ring;
  LaurentPoly det = determinant(ring, m);
  if (det.isZero() || det.termCount() != 1 ||
      det.leading().first != Expvec(m.e[0].nvars(), 0))
    throw std::logic_error("metric determinant is not a nonzero constant");
  Rational inv = 1 / det.leading().second;
  PolyMatrix low = adjugate(ring, m);
  for (auto& p : low.e) p *= inv;
  return low;
}

}  // namespace

OrbitData OrbitData::build(const GroupSpec& spec) {
  OrbitData od{spec, {}, {}, {}, {}, {}, {}, {}};
  od.g_y = metricGY(spec);
  od.eta_y = etaY(spec, od.g_y);
  od.gamma_y = christoffelY(spec, od.g_y);
  od.g_z = metricToZ(spec, od.g_y);
  assertZChartRows(spec, od.g_z);
  od.eta_z = metricToZ(spec, od.eta_y);
  od.gamma_g_z = christoffelToZ(spec, od.gamma_y);
  ChartInfo ci(spec, Chart::Z);
  const int n = spec.l + 2;
  od.gamma_eta_z = Christoffel(n, ci.nv());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int m = 1; m <= n; ++m)
        od.gamma_eta_z.at(i, j, m) = ci.deriv(od.gamma_g_z.at(i, j, m), spec.k);
  return od;
}

FlatCoords flatCoordinates(const OrbitData& od) {
  const GroupSpec& spec = od.spec;
  const int l = spec.l, n = l + 2;
  ChartInfo ci(spec, Chart::Z);
  const size_t nv = ci.nv();
  DegreeData dd(spec);

  PolyMatrix etaLow = covariantOfConstantDet(od.eta_z);

  // Q_{ij}^m = sum_s eta_{is} gamma_j^{sm}: coefficients of the flatness PDE
  // d_i d_j t + Q_{ij}^m d_m t = 0.
  std::vector<LaurentPoly> Q(static_cast<size_t>(n) * n * n, LaurentPoly(nv));
  auto Qat = [&](int i, int j, int m) -> LaurentPoly& {
    return Q[((static_cast<size_t>(i) - 1) * n + (j - 1)) * n + (m - 1)];
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int m = 1; m <= n; ++m) {
        LaurentPoly acc(nv);
        for (int s = 1; s <= n; ++s)
          acc += etaLow.at(i - 1, s - 1) * od.gamma_eta_z.at(s, m, j);
        Qat(i, j, m) = acc;
      }

  auto applyPde = [&](const LaurentPoly& u) {
    // returns the list of all (i,j) equations applied to u
    std::vector<LaurentPoly> eqs;
    std::vector<LaurentPoly> du(n + 1, LaurentPoly(nv));
    for (int m = 1; m <= n; ++m) du[m] = ci.deriv(u, m);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        LaurentPoly e = ci.deriv(du[i], j);
        for (int m = 1; m <= n; ++m) {
          if (du[m].isZero() || Qat(i, j, m).isZero()) continue;
          e += Qat(i, j, m) * du[m];
        }
        eqs.push_back(std::move(e));
      }
    return eqs;
  };

  FlatCoords fc{spec, {}, {}, {}, {}};
  fc.t.assign(n + 1, LaurentPoly(nv));
  fc.h.assign(l + 1, LaurentPoly(nv));
  fc.zOfT.assign(n + 1, LaurentPoly(nv));

  for (int a = 1; a <= l; ++a) {
    std::vector<size_t> slots;
    for (int b = 1; b <= l; ++b)
      if (b != a) slots.push_back(static_cast<size_t>(b - 1));
    slots.push_back(ci.slotE1());
    slots.push_back(ci.slotE2());
    std::vector<Expvec> monos;
    for (auto& e : basisOnSlots(ci, slots, dd.d(a)))
      if (!isPureLinearZ(e, l)) monos.push_back(std::move(e));

    LaurentPoly za = LaurentPoly::variable(nv, static_cast<size_t>(a - 1));
    auto baseEq = applyPde(za);
    std::vector<std::vector<LaurentPoly>> colEq;
    colEq.reserve(monos.size());
    for (const auto& m : monos)
      colEq.push_back(applyPde(LaurentPoly::monomial(m, rat(1))));

    std::vector<std::vector<Rational>> M;
    std::vector<Rational> rhs;
    for (size_t eq = 0; eq < baseEq.size(); ++eq) {
      std::vector<LaurentPoly> cols;
      cols.reserve(monos.size());
      for (size_t mu = 0; mu < monos.size(); ++mu) cols.push_back(colEq[mu][eq]);
      appendPolyEquations(baseEq[eq], cols, M, rhs);
    }
    std::vector<Rational> c = solveRationalLinear(std::move(M), std::move(rhs));
    LaurentPoly h(nv);
    for (size_t mu = 0; mu < monos.size(); ++mu) h.addTerm(monos[mu], c[mu]);
    fc.h[a] = h;
    fc.t[a] = za + h;
  }
  fc.t[l + 1] = LaurentPoly::variable(nv, static_cast<size_t>(l));
  fc.t[l + 2] = LaurentPoly::variable(nv, static_cast<size_t>(l) + 1);

  // A posteriori: the push-forward of eta through t(z) must be the constant
  // matrix with the antidiagonal pairing structure.
  fc.eta_t.assign(n + 1, std::vector<Rational>(n + 1, 0));
  for (int al = 1; al <= n; ++al)
    for (int be = 1; be <= n; ++be) {
      LaurentPoly acc(nv);
      for (int aa = 1; aa <= n; ++aa) {
        LaurentPoly da = ci.deriv(fc.t[al], aa);
        if (da.isZero()) continue;
        for (int bb = 1; bb <= n; ++bb) {
          LaurentPoly db = ci.deriv(fc.t[be], bb);
          if (db.isZero()) continue;
          acc += da * db * od.eta_z.at(aa - 1, bb - 1);
        }
      }
      if (acc.isZero()) continue;
      if (acc.termCount() != 1 || acc.leading().first != Expvec(nv, 0))
        throw std::logic_error("flatCoordinates: eta(t) is not constant");
      fc.eta_t[al][be] = acc.leading().second;
    }
  DegreeData deg(spec);
  for (int i = 1; i <= n; ++i) {
    if (fc.eta_t[i][l + 1] != (i == spec.k + 1 ? 1 : 0) ||
        fc.eta_t[i][l + 2] != (i == spec.k ? 1 : 0))
      throw std::logic_error("flatCoordinates: eta(t) rows l+1/l+2 mismatch");
    for (int j = 1; j <= n; ++j)
      if (deg.d(i) + deg.d(j) != 1 && fc.eta_t[i][j] != 0)
        throw std::logic_error("flatCoordinates: eta(t) pairing mismatch");
  }

  // Graded inversion z(t): iterate z^a = t^a - h^a(z) until stable.
  for (int a = 1; a <= l; ++a)
    fc.zOfT[a] = LaurentPoly::variable(nv, static_cast<size_t>(a - 1));
  fc.zOfT[l + 1] = LaurentPoly::variable(nv, static_cast<size_t>(l));
  fc.zOfT[l + 2] = LaurentPoly::variable(nv, static_cast<size_t>(l) + 1);
  for (int iter = 0;; ++iter) {
    if (iter > 64)
      throw std::logic_error("flatCoordinates: z(t) inversion did not settle");
    std::vector<std::optional<LaurentPoly>> repl(nv);
    for (int b = 1; b <= l; ++b) repl[b - 1] = fc.zOfT[b];
    bool stable = true;
    for (int a = 1; a <= l; ++a) {
      LaurentPoly nz =
          LaurentPoly::variable(nv, static_cast<size_t>(a - 1)) -
          substitute(fc.h[a], repl);
      if (nz != fc.zOfT[a]) stable = false;
      fc.zOfT[a] = std::move(nz);
    }
    if (stable) break;
  }
  // Round-trip: t(z(t)) must be the identity.
  {
    std::vector<std::optional<LaurentPoly>> repl(nv);
    for (int b = 1; b <= l; ++b) repl[b - 1] = fc.zOfT[b];
    for (int a = 1; a <= l; ++a)
      if (substitute(fc.t[a], repl) !=
          LaurentPoly::variable(nv, static_cast<size_t>(a - 1)))
        throw std::logic_error("flatCoordinates: z(t) round-trip failed");
  }
  return fc;
}

namespace {

// Substitute the z-slots of a z-chart polynomial by z(t).
LaurentPoly toTChart(const FlatCoords& fc, const LaurentPoly& p) {
  const int l = fc.spec.l;
  std::vector<std::optional<LaurentPoly>> repl(p.nvars());
  for (int b = 1; b <= l; ++b) repl[b - 1] = fc.zOfT[b];
  return substitute(p, repl);
}

}  // namespace

PolyMatrix metricGT(const OrbitData& od, const FlatCoords& fc) {
  const GroupSpec& spec = od.spec;
  const int l = spec.l, n = l + 2;
  ChartInfo ci(spec, Chart::Z);
  ChartInfo ct(spec, Chart::T);
  const size_t nv = ci.nv();
  DegreeData dd(spec);
  PolyMatrix gt(n, n, nv);
  for (int al = 1; al <= n; ++al)
    for (int be = al; be <= n; ++be) {
      LaurentPoly acc(nv);
      for (int aa = 1; aa <= n; ++aa) {
        LaurentPoly da = ci.deriv(fc.t[al], aa);
        if (da.isZero()) continue;
        for (int bb = 1; bb <= n; ++bb) {
          LaurentPoly db = ci.deriv(fc.t[be], bb);
          if (db.isZero()) continue;
          acc += da * db * od.g_z.at(aa - 1, bb - 1);
        }
      }
      LaurentPoly e = toTChart(fc, acc);
      if (!isWeightedHomogeneous(e, ct.weights(), dd.d(al) + dd.d(be)))
        throw std::logic_error("metricGT: homogeneity violated");
      gt.at(al - 1, be - 1) = e;
      gt.at(be - 1, al - 1) = e;
    }
  // Closed rows in the flat chart.
  for (int a = 1; a <= l; ++a)
    if (gt.at(a - 1, l + 1) !=
        dd.d(a) * LaurentPoly::variable(nv, static_cast<size_t>(a - 1)))
      throw std::logic_error("metricGT: g^{a,l+2}(t) != d_a t^a");
  const int k = spec.k, m = spec.m();
  if (gt.at(l, l) != LaurentPoly::constant(nv, rat(m + 1, m)) ||
      gt.at(l, l + 1) != LaurentPoly::constant(nv, rat(1, m)) ||
      gt.at(l + 1, l + 1) !=
          LaurentPoly::constant(nv, rat(l, static_cast<long>(k) * m)))
    throw std::logic_error("metricGT: constant block mismatch");
  // g^{k+1,l+1}(t) = t^k + t^{k+1} + g_0(t) with g_0 free of t^k, t^{k+1}.
  LaurentPoly g0 = gt.at(k, l) -
                   LaurentPoly::variable(nv, static_cast<size_t>(k - 1)) -
                   LaurentPoly::variable(nv, static_cast<size_t>(k));
  for (const auto& [e, c] : g0.terms())
    if (e[k - 1] != 0 || e[k] != 0)
      throw std::logic_error("metricGT: g^{k+1,l+1} structure mismatch");
  return gt;
}

Christoffel christoffelT(const OrbitData& od, const FlatCoords& fc) {
  const GroupSpec& spec = od.spec;
  const int l = spec.l, n = l + 2;
  ChartInfo ciz(spec, Chart::Z);
  ChartInfo cit(spec, Chart::T);
  const size_t nv = ciz.nv();

  // dz^p/dt^gamma, computed in the t-chart from z(t).
  std::vector<std::vector<LaurentPoly>> dzdt(
      n + 1, std::vector<LaurentPoly>(n + 1, LaurentPoly(nv)));
  for (int p = 1; p <= n; ++p)
    for (int ga = 1; ga <= n; ++ga) dzdt[p][ga] = cit.deriv(fc.zOfT[p], ga);

  Christoffel gt(n, nv);
  for (int al = 1; al <= n; ++al)
    for (int be = 1; be <= n; ++be) {
      // inner_p = sum_{i,q} dt^al/dz^i (dt^be/dz^q Gamma^{iq}_p(z)
      //           + g^{iq}(z) d^2 t^be/dz^q dz^p), then to the t-chart.
      std::vector<LaurentPoly> inner(n + 1, LaurentPoly(nv));
      for (int p = 1; p <= n; ++p) {
        LaurentPoly acc(nv);
        for (int i = 1; i <= n; ++i) {
          LaurentPoly dta = ciz.deriv(fc.t[al], i);
          if (dta.isZero()) continue;
          LaurentPoly sum(nv);
          for (int q = 1; q <= n; ++q) {
            LaurentPoly dtb = ciz.deriv(fc.t[be], q);
            if (!dtb.isZero()) sum += dtb * od.gamma_g_z.at(i, q, p);
            LaurentPoly d2 = ciz.deriv(ciz.deriv(fc.t[be], q), p);
            if (!d2.isZero()) sum += od.g_z.at(i - 1, q - 1) * d2;
          }
          acc += dta * sum;
        }
        inner[p] = toTChart(fc, acc);
      }
      for (int ga = 1; ga <= n; ++ga) {
        LaurentPoly acc(nv);
        for (int p = 1; p <= n; ++p) {
          if (inner[p].isZero() || dzdt[p][ga].isZero()) continue;
          acc += inner[p] * dzdt[p][ga];
        }
        gt.at(al, be, ga) = acc;
      }
    }
  return gt;
}

Potential solvePotential(const OrbitData& od, const FlatCoords& fc,
                         const PolyMatrix& g_t) {
  const GroupSpec& spec = od.spec;
  const int l = spec.l, k = spec.k, n = l + 2, m = spec.m();
  ChartInfo ct(spec, Chart::T);
  const size_t nv = ct.nv();

  // Covariant constant eta.
  std::vector<std::vector<Rational>> M0(n, std::vector<Rational>(n, 0)), etaLow;
  {
    std::vector<std::vector<Rational>> big(n, std::vector<Rational>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) big[i][j] = fc.eta_t[i + 1][j + 1];
      big[i][n + i] = 1;
    }
    // Gauss-Jordan inversion of the small constant matrix
    for (int c = 0; c < n; ++c) {
      int piv = c;
      while (piv < n && big[piv][c] == 0) ++piv;
      if (piv == n) throw std::logic_error("eta(t) is singular");
      std::swap(big[piv], big[c]);
      Rational inv = 1 / big[c][c];
      for (int j = 0; j < 2 * n; ++j) big[c][j] *= inv;
      for (int i = 0; i < n; ++i) {
        if (i == c || big[i][c] == 0) continue;
        Rational f = big[i][c];
        for (int j = 0; j < 2 * n; ++j) big[i][j] -= f * big[c][j];
      }
    }
    etaLow.assign(n + 1, std::vector<Rational>(n + 1, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) etaLow[i + 1][j + 1] = big[i][n + j];
  }

  auto slotOf = [&](int a) -> size_t {
    return static_cast<size_t>(a - 1);  // a = l+1 -> bare slot l, etc.
  };
  auto tvar = [&](int a) { return LaurentPoly::variable(nv, slotOf(a)); };

  // Rigid part: cubic skeleton + forced a0-term.
  LaurentPoly rigid(nv);
  rigid += rat(1, 2) * (tvar(k) * tvar(k) * tvar(l + 2));
  for (int a = 1; a <= n; ++a) {
    if (a == k || a == l + 2) continue;
    for (int b = 1; b <= n; ++b) {
      if (b == k || b == l + 2) continue;
      if (etaLow[a][b] == 0) continue;
      rigid += rat(1, 2) * etaLow[a][b] * (tvar(k) * tvar(a) * tvar(b));
    }
  }
  rigid += rat(1, 2) * (tvar(k + 1) * tvar(k + 1) * tvar(l + 1));

  // Ansatz for the homogeneous degree-2 correction H: monomials in
  // {t^1..t^l} minus t^k, plus the markers. The single monomial (t^{k+1})^2
  // is annihilated by every defining equation (its F^{ab} is constant) and
  // by the third-derivative tensor, so it is normalized away.
  std::vector<size_t> slots;
  for (int b = 1; b <= l; ++b)
    if (b != k) slots.push_back(static_cast<size_t>(b - 1));
  slots.push_back(ct.slotE1());
  slots.push_back(ct.slotE2());
  std::vector<Expvec> monos;
  {
    Expvec sq(nv, 0);
    sq[k] = 2;  // (t^{k+1})^2
    for (auto& e : basisOnSlots(ct, slots, rat(2)))
      if (e != sq) monos.push_back(std::move(e));
  }

  // Equation residual g^{ab} - L_E F^{ab} (- log contribution) as a linear
  // function of the ansatz coefficients.
  auto upperHessian = [&](const LaurentPoly& f, int a, int b) {
    // F^{ab} = eta^{ae} eta^{bd} d_e d_f; exploit that eta is constant.
    LaurentPoly acc(nv);
    for (int e = 1; e <= n; ++e) {
      if (fc.eta_t[a][e] == 0) continue;
      LaurentPoly de = ct.deriv(f, e);
      if (de.isZero()) continue;
      for (int d = 1; d <= n; ++d) {
        if (fc.eta_t[b][d] == 0) continue;
        acc += fc.eta_t[a][e] * fc.eta_t[b][d] * ct.deriv(de, d);
      }
    }
    return acc;
  };

  std::vector<std::vector<Rational>> M;
  std::vector<Rational> rhs;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      LaurentPoly base = ct.lieEuler(upperHessian(rigid, a, b)) -
                         g_t.at(a - 1, b - 1);
      if (a == l + 1 && b == l + 1)
        base += LaurentPoly::one(nv);  // L_E of the log term's Hessian entry
      std::vector<LaurentPoly> cols;
      cols.reserve(monos.size());
      for (const auto& mo : monos)
        cols.push_back(ct.lieEuler(
            upperHessian(LaurentPoly::monomial(mo, rat(1)), a, b)));
      appendPolyEquations(base, cols, M, rhs);
    }
  std::vector<Rational> c = solveRationalLinear(std::move(M), std::move(rhs));

  Potential pot{spec, {}, {}, 0};
  pot.Fhat = rigid;
  for (size_t mu = 0; mu < monos.size(); ++mu) pot.Fhat.addTerm(monos[mu], c[mu]);
  pot.logCoeff = rat(1, 2);
  pot.logVar = k + 1;

  // Normalization: d^3F/dt^k dt^i dt^j = eta_ij exactly (the log term has no
  // t^k dependence).
  LaurentPoly dk = ct.deriv(pot.Fhat, k);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (ct.deriv(ct.deriv(dk, i), j) !=
          LaurentPoly::constant(nv, etaLow[i][j]))
        throw std::logic_error("potential: d^3F/dt^k normalization failed");

  // Quasi-homogeneity: L_E Fhat - 2 Fhat is the exact quadratic remainder
  // (the log term absorbs (1/2)(t^{k+1})^2 of the paper-level identity).
  LaurentPoly rem = ct.lieEuler(pot.Fhat) - rat(2) * pot.Fhat;
  LaurentPoly want(nv);
  want += rat(l, 2L * k * m) * (tvar(k) * tvar(k));
  want += rat(1, m) * (tvar(k) * tvar(k + 1));
  want += rat(1, 2L * m) * (tvar(k + 1) * tvar(k + 1));
  if (rem != want)
    throw std::logic_error("potential: quasi-homogeneity identity failed");
  return pot;
}

FrobeniusStructure buildFrobenius(const OrbitData& od) {
  FrobeniusStructure fs{od.spec,
                        flatCoordinates(od),
                        {},
                        {},
                        {},
                        {od.spec, {}, {}, 0}};
  fs.g_t = metricGT(od, fs.flat);
  fs.eta_t = fs.flat.eta_t;
  fs.potential = solvePotential(od, fs.flat, fs.g_t);
  const int n = od.spec.l + 2;
  fs.eta_low.assign(n + 1, std::vector<Rational>(n + 1, 0));
  // reconstruct covariant eta from the normalization check data: invert
  std::vector<std::vector<Rational>> big(n, std::vector<Rational>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) big[i][j] = fs.eta_t[i + 1][j + 1];
    big[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && big[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("eta(t) is singular");
    std::swap(big[piv], big[c]);
    Rational inv = 1 / big[c][c];
    for (int j = 0; j < 2 * n; ++j) big[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || big[i][c] == 0) continue;
      Rational f = big[i][c];
      for (int j = 0; j < 2 * n; ++j) big[i][j] -= f * big[c][j];
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) fs.eta_low[i + 1][j + 1] = big[i][n + j];
  return fs;
}

EulerField eulerField(const GroupSpec& spec, Chart chart) {
  DegreeData dd(spec);
  EulerField e;
  e.degreePart.assign(static_cast<size_t>(spec.l) + 1, Rational(0));
  for (int a = 1; a <= spec.l; ++a) e.degreePart[a] = dd.d(a);
  ChartInfo ci(spec, chart);
  auto [c1, c2] = ci.eulerLogComponents();
  e.cLog1 = c1;
  e.cLog2 = c2;
  return e;
}

}  // namespace wfrob
