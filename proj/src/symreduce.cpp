#include "wfrob/symreduce.hpp"

#include <algorithm>

namespace wfrob {

LaurentPoly elementarySymmetric(size_t nvars, size_t n, size_t j) {
  if (j > n) return LaurentPoly(nvars);
  // e_j = sum over all j-subsets; iterate subsets via combination walk.
  LaurentPoly r(nvars);
  std::vector<size_t> idx(j);
  for (size_t i = 0; i < j; ++i) idx[i] = i;
  if (j == 0) return LaurentPoly::one(nvars);
  while (true) {
    Expvec e(nvars, 0);
    for (size_t i : idx) e[i] = 1;
    r.addTerm(std::move(e), Rational(1));
    // next combination
    size_t i = j;
    while (i-- > 0) {
      if (idx[i] != i + n - j) {
        ++idx[i];
        for (size_t t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
        break;
      }
      if (i == 0) return r;
    }
  }
}

LaurentPoly symReduce(const LaurentPoly& p, int l) {
  const size_t n = static_cast<size_t>(l) + 1;
  const size_t nv = p.nvars();
  if (nv < n) throw std::invalid_argument("symReduce: too few variable slots");

  // Clear negative exponents monomial-wise: multiplying a monomial by
  // (q_1...q_n)^N is the identity in the quotient ring.
  LaurentPoly work(nv);
  for (const auto& [e, c] : p.terms()) {
    for (size_t i = n; i < nv; ++i)
      if (e[i] != 0)
        throw std::invalid_argument("symReduce: nonzero exponent outside q-slots");
    int32_t mn = e[0];
    for (size_t i = 1; i < n; ++i) mn = std::min(mn, e[i]);
    Expvec ne = e;
    if (mn != 0)
      for (size_t i = 0; i < n; ++i) ne[i] -= mn;
    work.addTerm(std::move(ne), c);
  }

  // Symmetry check: invariance under all adjacent transpositions.
  for (size_t s = 0; s + 1 < n; ++s) {
    LaurentPoly swapped(nv);
    for (const auto& [e, c] : work.terms()) {
      Expvec ne = e;
      std::swap(ne[s], ne[s + 1]);
      swapped.addTerm(std::move(ne), c);
    }
    if (!(swapped - work).isZero())
      throw NotSymmetric("not invariant under the transposition (" +
                         std::to_string(s + 1) + " " + std::to_string(s + 2) + ")");
  }

  std::vector<LaurentPoly> elem(n + 1, LaurentPoly(nv));
  for (size_t j = 1; j <= n; ++j) elem[j] = elementarySymmetric(nv, n, j);

  LaurentPoly out(nv);
  size_t guard = 0;
  const size_t kGuardLimit = 2000000;
  while (!work.isZero()) {
    if (++guard > kGuardLimit)
      throw NonTerminating("symReduce: leading-term elimination did not terminate");
    auto [lead, c] = work.leading();
    Expvec lam(lead.begin(), lead.begin() + static_cast<long>(n));
    std::sort(lam.begin(), lam.end(), std::greater<int32_t>());
    // sigma-monomial exponents f_j = lam_j - lam_{j+1}; f_n drops (sigma_n = 1).
    Expvec f(nv, 0);
    LaurentPoly prod = LaurentPoly::one(nv);
    for (size_t j = 0; j + 1 < n; ++j) {
      int32_t fj = lam[j] - lam[j + 1];
      f[j] = fj;
      for (int32_t t = 0; t < fj; ++t) prod = prod * elem[j + 1];
    }
    for (int32_t t = 0; t < lam[n - 1]; ++t) prod = prod * elem[n];
    out.addTerm(std::move(f), c);
    prod *= c;
    work -= prod;
  }
  return out;
}

static void basisDfs(const std::vector<Rational>& w, size_t i, Rational rem,
                     Expvec& cur, std::vector<Expvec>& out) {
  if (i == w.size()) {
    if (rem == 0) out.push_back(cur);
    return;
  }
  Rational r = rem;
  for (int32_t e = 0;; ++e) {
    if (r < 0) break;
    cur[i] = e;
    basisDfs(w, i + 1, r, cur, out);
    r -= w[i];
  }
  cur[i] = 0;
}

std::vector<Expvec> weightedBasis(const std::vector<Rational>& weights,
                                  const Rational& target) {
  for (size_t i = 0; i < weights.size(); ++i)
    if (weights[i] <= 0)
      throw InfiniteBasis("variable " + std::to_string(i) +
                          " has non-positive weight; basis would be infinite");
  if (target < 0) return {};
  std::vector<Expvec> out;
  Expvec cur(weights.size(), 0);
  basisDfs(weights, 0, target, cur, out);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

}  // namespace wfrob
