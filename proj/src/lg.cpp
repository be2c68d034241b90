#include "wfrob/lg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <random>

namespace wfrob {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
const Complex kI(0, 1);

// Coefficients (low degree first) of the numerator polynomial
// P(u) = u^{l+1} + a_1 u^l + ... + a_{l+1}.
std::vector<Complex> numeratorP(const LGPoint& p) {
  const int l = p.spec.l;
  std::vector<Complex> c(l + 2, Complex(0));
  c[l + 1] = 1;
  for (int j = 1; j <= l + 1; ++j) c[l + 1 - j] = p.a[j];
  return c;
}

Complex evalPoly(const std::vector<Complex>& c, Complex u) {
  Complex r(0);
  for (size_t i = c.size(); i-- > 0;) r = r * u + c[i];
  return r;
}

std::vector<Complex> derivPoly(const std::vector<Complex>& c) {
  std::vector<Complex> d(c.size() > 1 ? c.size() - 1 : 1, Complex(0));
  for (size_t i = 1; i < c.size(); ++i) d[i - 1] = double(i) * c[i];
  return d;
}

// Q(u) = u (u - a) P'(u) - ((m+1) u - m a) P(u): the numerator of
// u dlambda/du after clearing u^m (u - a)^2. Degree l+2, leading
// coefficient k.
std::vector<Complex> criticalPoly(const LGPoint& p) {
  const int l = p.spec.l, m = p.spec.m();
  const Complex a = p.a[l + 2];
  std::vector<Complex> P = numeratorP(p), dP = derivPoly(P);
  std::vector<Complex> Q(l + 3, Complex(0));
  for (size_t i = 0; i < dP.size(); ++i) {
    Q[i + 2] += dP[i];       // u^2 P'
    Q[i + 1] -= a * dP[i];   // -a u P'
  }
  for (size_t i = 0; i < P.size(); ++i) {
    Q[i + 1] -= double(m + 1) * P[i];  // -(m+1) u P
    Q[i] += double(m) * a * P[i];      // + m a P
  }
  return Q;
}

double relDist(Complex x, Complex y) {
  return std::abs(x - y) / std::max(1.0, std::max(std::abs(x), std::abs(y)));
}

}  // namespace

std::vector<Complex> evalYTilde(const GroupSpec& spec,
                                const std::vector<Complex>& x) {
  const int l = spec.l, k = spec.k;
  RootData roots(spec);
  std::vector<Complex> q(l + 1);
  for (int a = 1; a <= l; ++a)
    q[a - 1] = std::exp(kI * kTwoPi * (x[a - 1] - (a >= 2 ? x[a - 2] : 0.0)));
  q[l] = std::exp(kI * kTwoPi * (-x[l - 1]));
  std::vector<Complex> sig(l + 2, Complex(0));
  sig[0] = 1;
  for (int a = 0; a <= l; ++a)
    for (int j = std::min(a + 1, l + 1); j >= 1; --j)
      sig[j] += sig[j - 1] * q[a];
  std::vector<Complex> out(l + 3);
  for (int j = 1; j <= l; ++j)
    out[j] = std::exp(kI * kTwoPi *
                      (to_double(roots.d(j, k)) * x[l] +
                       to_double(roots.d(j, k + 1)) * x[l + 1])) *
             sig[j];
  out[l + 1] = std::exp(kI * kTwoPi * x[l]);
  out[l + 2] = std::exp(kI * kTwoPi * x[l + 1]);
  return out;
}

LGPoint fromOrbitPoint(const GroupSpec& spec,
                       const std::vector<Complex>& ytilde) {
  const int l = spec.l, k = spec.k, m = spec.m();
  if (std::abs(ytilde[l + 1]) == 0 || std::abs(ytilde[l + 2]) == 0)
    throw ZeroCoordinate();
  LGPoint p{spec, std::vector<Complex>(l + 3, Complex(0))};
  double sgn;
  for (int j = 1; j <= k; ++j) {
    sgn = (j % 2 == 0) ? 1.0 : -1.0;
    p.a[j] = sgn * ytilde[j];
  }
  for (int s = 1; s <= m; ++s) {
    int j = k + s;
    sgn = (j % 2 == 0) ? 1.0 : -1.0;
    Complex f = std::pow(ytilde[l + 1], s) * std::pow(ytilde[l + 2], s - 1);
    if (j <= l) p.a[j] = sgn * ytilde[j] * f;
  }
  sgn = ((l + 1) % 2 == 0) ? 1.0 : -1.0;
  p.a[l + 1] =
      sgn * std::pow(ytilde[l + 1], m + 1) * std::pow(ytilde[l + 2], m);
  p.a[l + 2] = ytilde[l + 1];
  return p;
}

Complex lambdaAt(const LGPoint& p, Complex u) {
  const int m = p.spec.m();
  return evalPoly(numeratorP(p), u) /
         (std::pow(u, m) * (u - p.a[p.spec.l + 2]));
}

Complex dLambdaDa(const LGPoint& p, int j, Complex u) {
  const int l = p.spec.l, k = p.spec.k;
  const Complex a = p.a[l + 2];
  if (j <= l + 1) return std::pow(u, double(k + 1 - j)) / (u - a);
  return lambdaAt(p, u) / (u - a);
}

Complex uLambdaU(const LGPoint& p, Complex u) {
  const int m = p.spec.m();
  const Complex a = p.a[p.spec.l + 2];
  return evalPoly(criticalPoly(p), u) / (std::pow(u, m) * (u - a) * (u - a));
}

CriticalData criticalPoints(const LGPoint& p) {
  const int l = p.spec.l, m = p.spec.m(), n = l + 2;
  const Complex a = p.a[l + 2];
  std::vector<Complex> Q = criticalPoly(p);
  std::vector<Complex> dQ = derivPoly(Q);
  Complex lead = Q[n];
  if (std::abs(lead) < 1e-14)
    throw DegenerateCritical("degenerate leading coefficient");

  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -Q[i] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);

  CriticalData crit;
  crit.U.resize(n);
  crit.u.resize(n);
  crit.lam2.resize(n);
  for (int i = 0; i < n; ++i) {
    Complex u = es.eigenvalues()(i);
    for (int it = 0; it < 60; ++it) {
      Complex f = evalPoly(Q, u), df = evalPoly(dQ, u);
      if (std::abs(df) < 1e-300) break;
      Complex step = f / df;
      u -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(u))) break;
    }
    crit.U[i] = u;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      if (relDist(crit.U[i], crit.U[j]) < 1e-8)
        throw DegenerateCritical("coincident critical points");
    if (std::abs(crit.U[i]) < 1e-10 ||
        std::abs(crit.U[i] - a) < 1e-10 * (1.0 + std::abs(a)))
      throw DegenerateCritical("critical point at a pole");
  }
  for (int i = 0; i < n; ++i) {
    Complex U = crit.U[i];
    Complex den = std::pow(U, m) * (U - a) * (U - a);
    crit.lamPrimeResidual = std::max(
        crit.lamPrimeResidual, std::abs(evalPoly(Q, U) / den));
    crit.u[i] = lambdaAt(p, U);
    crit.lam2[i] = -U * evalPoly(dQ, U) / den;
    if (!(std::abs(crit.u[i]) < 1e12) || std::abs(crit.lam2[i]) < 1e-12)
      throw DegenerateCritical("degenerate critical value");
  }
  return crit;
}

ResidueMetrics residueMetrics(const LGPoint& p, const CriticalData& c) {
  const int l = p.spec.l, k = p.spec.k, m = p.spec.m(), n = l + 2;
  const Complex a = p.a[l + 2];
  const double etaSign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
  std::vector<Complex> Q = criticalPoly(p);

  // Envelope Jacobian du_alpha / da_j = (dlambda/da_j)(U_alpha).
  std::vector<std::vector<Complex>> J(n, std::vector<Complex>(n));
  for (int al = 0; al < n; ++al)
    for (int j = 1; j <= n; ++j) J[al][j - 1] = dLambdaDa(p, j, c.U[al]);

  // Zeros of lambda (roots of P): poles of the log-form integrand that the
  // contours must not enclose.
  std::vector<Complex> P = numeratorP(p);
  std::vector<Complex> lamZeros;
  {
    int d = l + 1;
    Eigen::MatrixXcd Cm = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) Cm(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) Cm(i, d - 1) = -P[i];  // P is monic
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Cm, false);
    for (int i = 0; i < d; ++i) lamZeros.push_back(es.eigenvalues()(i));
  }

  ResidueMetrics rm;
  rm.etaA.assign(n, std::vector<Complex>(n, Complex(0)));
  rm.gA.assign(n, std::vector<Complex>(n, Complex(0)));
  std::vector<std::vector<Complex>> etaQ(n, std::vector<Complex>(n, 0)),
      gQ(n, std::vector<Complex>(n, 0));

  for (int al = 0; al < n; ++al) {
    Complex etaDiag = etaSign / c.lam2[al];
    Complex gDiag = -1.0 / (c.u[al] * c.lam2[al]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        rm.etaA[i][j] += etaDiag * J[al][i] * J[al][j];
        rm.gA[i][j] += gDiag * J[al][i] * J[al][j];
      }

    // Contour quadrature of the defining residues around U_alpha.
    double r = 1e300;
    for (int be = 0; be < n; ++be)
      if (be != al) r = std::min(r, std::abs(c.U[be] - c.U[al]));
    r = std::min(0.1 * r, 0.1 * std::abs(c.U[al] - a));
    r = std::min(r, 0.1 * std::abs(c.U[al]));
    for (const Complex& z : lamZeros)
      r = std::min(r, 0.5 * std::abs(c.U[al] - z));
    const int N = 256;
    for (int s = 0; s < N; ++s) {
      Complex u = c.U[al] + r * std::exp(kI * (kTwoPi * s / N));
      Complex w = (u - c.U[al]) / double(N);  // (1/2 pi i) du
      Complex core =
          std::pow(u, m - 1) * (u - a) * (u - a) / evalPoly(Q, u) * w;
      Complex lam = lambdaAt(p, u);
      std::vector<Complex> dl(n);
      for (int j = 1; j <= n; ++j) dl[j - 1] = dLambdaDa(p, j, u);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Complex pr = dl[i] * dl[j];
          etaQ[i][j] += etaSign * (-pr) * core;
          gQ[i][j] += pr * core / lam;
        }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double e1 = std::abs(etaQ[i][j] - rm.etaA[i][j]) /
                  (1.0 + std::abs(rm.etaA[i][j]));
      double e2 =
          std::abs(gQ[i][j] - rm.gA[i][j]) / (1.0 + std::abs(rm.gA[i][j]));
      rm.quadRelErr = std::max(rm.quadRelErr, std::max(e1, e2));
    }
  return rm;
}

PhiChart factorizePhi(const GroupSpec& spec, const std::vector<Complex>& x,
                      double tol) {
  const int l = spec.l, m = spec.m();
  Complex rho = (double(m + 1) * x[l] + double(m) * x[l + 1]) / double(l + 1);
  PhiChart ph;
  ph.phi.assign(l + 3, Complex(0));
  ph.phi[1] = kTwoPi * (rho + x[0]);
  for (int j = 2; j <= l; ++j)
    ph.phi[j] = kTwoPi * (rho + x[j - 1] - x[j - 2]);
  ph.phi[l + 1] = kTwoPi * (rho - x[l - 1]);
  ph.phi[l + 2] = kTwoPi * x[l];

  // Coefficient route: elementary symmetric functions of the phi-roots.
  std::vector<Complex> root(l + 1);
  for (int b = 1; b <= l + 1; ++b) root[b - 1] = std::exp(kI * ph.phi[b]);
  std::vector<Complex> sig(l + 2, Complex(0));
  sig[0] = 1;
  for (int bidx = 0; bidx <= l; ++bidx)
    for (int j = std::min(bidx + 1, l + 1); j >= 1; --j)
      sig[j] += sig[j - 1] * root[bidx];
  LGPoint viaPhi{spec, std::vector<Complex>(l + 3, Complex(0))};
  for (int j = 1; j <= l + 1; ++j)
    viaPhi.a[j] = ((j % 2 == 0) ? 1.0 : -1.0) * sig[j];
  viaPhi.a[l + 2] = std::exp(kI * ph.phi[l + 2]);

  LGPoint viaY = fromOrbitPoint(spec, evalYTilde(spec, x));
  std::mt19937_64 rng(0x5eedf00dULL);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    Complex u;
    do {
      u = Complex(1.1 * uni(rng), 1.1 * uni(rng));
    } while (std::abs(u) < 0.3 || std::abs(u - viaY.a[l + 2]) < 0.2);
    Complex l1 = lambdaAt(viaPhi, u), l2 = lambdaAt(viaY, u);
    if (std::abs(l1 - l2) / (1.0 + std::abs(l2)) > tol)
      throw MismatchBeyondTolerance("phi factorization disagrees with the coefficient route");
  }
  return ph;
}

double am26Check(const LGPoint& p, const CriticalData& c, const PhiChart& ph) {
  const int l = p.spec.l, k = p.spec.k, n = l + 2;
  std::vector<Complex> z(n + 1);
  for (int b = 1; b <= n; ++b) z[b] = std::exp(kI * ph.phi[b]);
  double worst = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      Complex sum(0);
      for (int al = 0; al < n; ++al)
        sum += c.u[al] * c.U[al] * c.U[al] /
               ((z[a] - c.U[al]) * (z[b] - c.U[al]) * c.lam2[al]);
      Complex want;
      if (a <= l + 1 && b <= l + 1)
        want = (a == b ? 1.0 : 0.0) - 1.0 / k;
      else if (a <= l + 1)
        want = -1.0 / k;
      else
        want = -1.0 - 1.0 / k;
      worst = std::max(worst, std::abs(sum - want));
    }
  return worst;
}

double piPairingCheck(const GroupSpec& spec, const LGPoint& p,
                      const CriticalData& c, const PhiChart& ph) {
  const int l = spec.l, k = spec.k, m = spec.m(), n = l + 2;
  std::vector<Complex> z(n + 1);
  for (int b = 1; b <= n; ++b) z[b] = std::exp(kI * ph.phi[b]);

  // d varpi_beta / d u_alpha, rows beta = 1..l+2 (1-based), cols alpha.
  std::vector<std::vector<Complex>> dw(n + 1, std::vector<Complex>(n));
  auto T = [&](int al, Complex zz) {
    return c.U[al] / (kTwoPi * kI * (zz - c.U[al]) * c.lam2[al]);
  };
  for (int al = 0; al < n; ++al) {
    dw[l + 1][al] = T(al, z[l + 2]);
    Complex s(0);
    for (int b = 1; b <= l + 1; ++b) s += T(al, z[b]);
    dw[l + 2][al] = s / double(m) - double(m + 1) / double(m) * T(al, z[l + 2]);
    for (int be = 1; be <= l; ++be)
      dw[be][al] = T(al, z[be]) - double(m + 1) / double(l + 1) * dw[l + 1][al] -
                   double(m) / double(l + 1) * dw[l + 2][al];
  }

  const double fourPi2 = kTwoPi * kTwoPi;  // 4 pi^2
  double worst = 0;
  auto pair = [&](int a, int b) {
    Complex s(0);
    for (int al = 0; al < n; ++al)
      s += (-c.u[al] * c.lam2[al]) * dw[a][al] * dw[b][al];
    return s;
  };
  worst = std::max(worst,
                   std::abs(pair(l + 1, l + 1) + (k + 1.0) / (fourPi2 * k)));
  worst = std::max(worst, std::abs(pair(l + 1, l + 2) - 1.0 / fourPi2));
  worst = std::max(worst,
                   std::abs(pair(l + 2, l + 2) + (m + 1.0) / (fourPi2 * m)));
  for (int b = 1; b <= l; ++b) {
    worst = std::max(worst, std::abs(pair(b, l + 1)));
    worst = std::max(worst, std::abs(pair(b, l + 2)));
    for (int a = 1; a <= l; ++a)
      worst = std::max(
          worst, std::abs(pair(a, b) -
                          ((a == b ? 1.0 : 0.0) - 1.0 / (l + 1)) / fourPi2));
  }
  return worst;
}

double shiftUnityCheck(const LGPoint& p) {
  const int l = p.spec.l, k = p.spec.k, n = l + 2;
  const double h = 1e-3;
  const double sgnK = (k % 2 == 0) ? 1.0 : -1.0;          // (-1)^k
  const double etaSign = -sgnK;                            // (-1)^{k+1}

  auto canonicalGUp = [&](double cshift) {
    LGPoint q = p;
    q.a[k] += cshift;
    q.a[k + 1] -= cshift * q.a[l + 2];
    CriticalData cd = criticalPoints(q);
    // order by critical point (they are invariant under the shift)
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      if (cd.U[a].real() != cd.U[b].real())
        return cd.U[a].real() < cd.U[b].real();
      return cd.U[a].imag() < cd.U[b].imag();
    });
    std::vector<Complex> g(n), eta(n);
    for (int i = 0; i < n; ++i) {
      g[i] = -cd.u[idx[i]] * cd.lam2[idx[i]];
      eta[i] = etaSign * cd.lam2[idx[i]];
    }
    return std::pair(g, eta);
  };
  auto [gp, etaP] = canonicalGUp(h);
  auto [gm, etaM] = canonicalGUp(-h);
  auto [g0, eta0] = canonicalGUp(0);
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    Complex lie = sgnK * (gp[i] - gm[i]) / (2 * h);
    worst = std::max(worst,
                     std::abs(lie - eta0[i]) / (1.0 + std::abs(eta0[i])));
  }
  return worst;
}

double associativityCheck(const LGPoint& p, const CriticalData& c) {
  const int l = p.spec.l, k = p.spec.k, n = l + 2;
  const double etaSign = (k % 2 == 0) ? -1.0 : 1.0;
  std::vector<std::vector<Complex>> J(n, std::vector<Complex>(n));
  for (int al = 0; al < n; ++al)
    for (int j = 1; j <= n; ++j) J[al][j - 1] = dLambdaDa(p, j, c.U[al]);

  Eigen::MatrixXcd etaA = Eigen::MatrixXcd::Zero(n, n);
  for (int al = 0; al < n; ++al)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        etaA(i, j) += etaSign / c.lam2[al] * J[al][i] * J[al][j];
  Eigen::MatrixXcd etaUp = etaA.inverse();

  std::vector<Eigen::MatrixXcd> C(n, Eigen::MatrixXcd::Zero(n, n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int mm = 0; mm < n; ++mm) {
        Complex acc(0);
        for (int s = 0; s < n; ++s) {
          Complex cs(0);
          for (int al = 0; al < n; ++al)
            cs += etaSign / c.lam2[al] * J[al][s] * J[al][j] * J[al][mm];
          acc += etaUp(i, s) * cs;
        }
        C[j](i, mm) = acc;
      }
  double worst = 0;
  for (int j = 0; j < n; ++j)
    for (int q = j + 1; q < n; ++q) {
      Eigen::MatrixXcd comm = C[j] * C[q] - C[q] * C[j];
      worst = std::max(worst, comm.cwiseAbs().maxCoeff());
    }
  return worst;
}

bool eulerPushforwardExact(const GroupSpec& spec) {
  const int l = spec.l, k = spec.k, m = spec.m();
  DegreeData dd(spec);
  Rational c1 = rat(1, k), c2 = rat(1, m);
  for (int j = 1; j <= k; ++j)
    if (dd.d(j) != rat(j, k)) return false;
  for (int s = 1; s <= m; ++s) {
    int j = k + s;
    Rational lhs = (j <= l ? dd.d(j) : rat(0)) + s * c1 + (s - 1) * c2;
    if (j <= l && lhs != rat(j, k)) return false;
  }
  if ((m + 1) * c1 + m * c2 != rat(l + 1, k)) return false;
  return c1 == rat(1, k);
}

LGReport theoremMain2Check(const OrbitData& od, uint64_t seed, int samples) {
  const GroupSpec& spec = od.spec;
  const int l = spec.l, n = l + 2;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  LGReport rep;
  rep.eulerExact = eulerPushforwardExact(spec);
  int attempts = 0;
  while (rep.samples < samples && attempts < 10 * samples) {
    ++attempts;
    std::vector<Complex> x(n);
    for (auto& c : x) c = Complex(uni(rng), 0.15 * (2 * uni(rng) - 1));
    std::vector<Complex> yt = evalYTilde(spec, x);
    LGPoint p = fromOrbitPoint(spec, yt);
    CriticalData crit;
    try {
      crit = criticalPoints(p);
    } catch (const DegenerateCritical&) {
      ++rep.rejected;
      rep.records.push_back({attempts, true, 0, 0, 0, 0, 0, 0, 0});
      continue;
    }
    ++rep.samples;
    LGSample rec;
    rec.sample = attempts;
    rec.lamPrime = crit.lamPrimeResidual;
    rep.worstLamPrime = std::max(rep.worstLamPrime, rec.lamPrime);

    PhiChart ph = factorizePhi(spec, x);
    ResidueMetrics rm = residueMetrics(p, crit);
    rec.quad = rm.quadRelErr;
    rec.am26 = am26Check(p, crit, ph);
    rec.pairing = piPairingCheck(spec, p, crit, ph);
    rec.assoc = associativityCheck(p, crit);
    rec.shift = shiftUnityCheck(p);
    rep.worstQuad = std::max(rep.worstQuad, rec.quad);
    rep.worstAm26 = std::max(rep.worstAm26, rec.am26);
    rep.worstPairing = std::max(rep.worstPairing, rec.pairing);
    rep.worstAssoc = std::max(rep.worstAssoc, rec.assoc);
    rep.worstShift = std::max(rep.worstShift, rec.shift);

    // Pullback comparison in the orbit coordinates. The Jacobian of the
    // covering map in the y-chart (log coordinates on the last two slots).
    std::vector<std::vector<Complex>> Jy(n, std::vector<Complex>(n, 0));
    const int k = spec.k, m = spec.m();
    for (int j = 1; j <= k; ++j) Jy[j - 1][j - 1] = (j % 2 == 0) ? 1 : -1;
    for (int s = 1; s <= m; ++s) {
      int j = k + s;
      if (j <= l) {
        Complex f = std::pow(yt[l + 1], s) * std::pow(yt[l + 2], s - 1);
        Jy[j - 1][j - 1] = ((j % 2 == 0) ? 1.0 : -1.0) * f;
        Jy[l][j - 1] = double(s) * p.a[j];
        Jy[l + 1][j - 1] = double(s - 1) * p.a[j];
      }
    }
    Jy[l][l] = double(m + 1) * p.a[l + 1];
    Jy[l + 1][l] = double(m) * p.a[l + 1];
    Jy[l][l + 1] = p.a[l + 2];

    Eigen::MatrixXcd etaYRes = Eigen::MatrixXcd::Zero(n, n),
                     gYRes = Eigen::MatrixXcd::Zero(n, n);
    for (int pp = 0; pp < n; ++pp)
      for (int qq = 0; qq < n; ++qq)
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            etaYRes(pp, qq) += Jy[pp][i] * Jy[qq][j] * rm.etaA[i][j];
            gYRes(pp, qq) += Jy[pp][i] * Jy[qq][j] * rm.gA[i][j];
          }
    Eigen::MatrixXcd etaYResUp = etaYRes.inverse(),
                     gYResUp = gYRes.inverse();

    // Symbolic side, evaluated at the same point.
    size_t nv = od.g_y.e[0].nvars();
    std::vector<Complex> v(nv);
    for (int j = 1; j <= l; ++j) v[j - 1] = yt[j];
    v[l] = kI * kTwoPi * x[l];
    v[l + 1] = kI * kTwoPi * x[l + 1];
    v[nv - 2] = yt[l + 1];
    v[nv - 1] = yt[l + 2];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Complex gs = evaluate(od.g_y.at(i, j), v);
        Complex es = evaluate(od.eta_y.at(i, j), v);
        rec.pullback = std::max(
            rec.pullback, std::abs(gYResUp(i, j) - gs) / (1.0 + std::abs(gs)));
        rec.pullback =
            std::max(rec.pullback,
                     std::abs(etaYResUp(i, j) - es) / (1.0 + std::abs(es)));
      }
    rep.worstPullback = std::max(rep.worstPullback, rec.pullback);
    rep.records.push_back(rec);
  }
  return rep;
}

}  // namespace wfrob
