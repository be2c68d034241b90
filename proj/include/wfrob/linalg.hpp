#pragma once

#include <stdexcept>
#include <vector>

#include "wfrob/laurent.hpp"

namespace wfrob {

/// Rectangular matrix of Laurent polynomials sharing one VarTable.
struct PolyMatrix {
  size_t rows = 0, cols = 0;
  std::vector<LaurentPoly> e;

  PolyMatrix() = default;
  PolyMatrix(size_t r, size_t c, size_t nvars)
      : rows(r), cols(c), e(r * c, LaurentPoly(nvars)) {}

  LaurentPoly& at(size_t i, size_t j) { return e.at(i * cols + j); }
  const LaurentPoly& at(size_t i, size_t j) const { return e.at(i * cols + j); }
};

/// Plain Laurent-ring operations (no relations).
struct FreeRing {
  LaurentPoly normalize(LaurentPoly p) const { return p; }
  LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const { return a * b; }
  std::optional<LaurentPoly> div(const LaurentPoly& a, const LaurentPoly& b) const {
    return exactDivide(a, b);
  }
};

/// The invariant-theory carrier ring: Laurent polynomials in
/// q_1..q_{nq} (first nq slots) modulo the relation q_1*...*q_nq = 1,
/// with any further slots (exponential markers) free. Elements are kept in
/// the canonical form where each monomial's q-exponent minimum is zero;
/// on that form Weyl-invariant functions have literally permutation-symmetric
/// representatives.
struct QRing {
  size_t nq;

  explicit QRing(size_t nq_) : nq(nq_) {}

  LaurentPoly normalize(const LaurentPoly& p) const {
    LaurentPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
      int32_t mn = e[0];
      for (size_t i = 1; i < nq; ++i) mn = std::min(mn, e[i]);
      if (mn == 0) {
        r.addTerm(e, c);
      } else {
        Expvec ne = e;
        for (size_t i = 0; i < nq; ++i) ne[i] -= mn;
        r.addTerm(std::move(ne), c);
      }
    }
    return r;
  }

  LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) const {
    return normalize(a * b);
  }

  /// Exact division in the quotient ring, via the isomorphism with the
  /// Laurent ring in q_1..q_{nq-1} obtained by eliminating q_nq.
  std::optional<LaurentPoly> div(const LaurentPoly& a, const LaurentPoly& b) const {
    auto q = exactDivide(eliminateLast(a), eliminateLast(b));
    if (!q) return std::nullopt;
    return normalize(*q);
  }

 private:
  // Shift each monomial by multiples of (1,..,1) on the q-slots so that the
  // q_nq slot becomes zero.
  LaurentPoly eliminateLast(const LaurentPoly& p) const {
    LaurentPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
      Expvec ne = e;
      int32_t s = ne[nq - 1];
      if (s != 0)
        for (size_t i = 0; i < nq; ++i) ne[i] -= s;
      r.addTerm(std::move(ne), c);
    }
    return r;
  }
};

struct SingularMatrix : std::runtime_error {
  size_t pivot_row, pivot_col;
  SingularMatrix(size_t r, size_t c)
      : std::runtime_error("singular matrix at pivot (" + std::to_string(r) + "," +
                           std::to_string(c) + ")"),
        pivot_row(r), pivot_col(c) {}
};

struct InconsistentSystem : std::runtime_error {
  size_t row;
  explicit InconsistentSystem(size_t r)
      : std::runtime_error("inconsistent linear system at row " + std::to_string(r)),
        row(r) {}
};

/// Solution of A x = B over the fraction field, returned as exact
/// numerators over one common denominator (`den` = det A up to sign).
struct FractionSolution {
  PolyMatrix num;      // n x rhsCols numerators
  LaurentPoly den;     // common denominator
  size_t rank = 0;
};

/// Fraction-free (Bareiss) forward elimination followed by exact
/// back-substitution. A must be square or overdetermined (rows >= cols);
/// for overdetermined systems consistency of the extra rows is verified
/// exactly. Throws SingularMatrix / InconsistentSystem.
template <class Ring>
FractionSolution bareissSolve(const Ring& ring, const PolyMatrix& A,
                              const PolyMatrix& B) {
  if (A.rows != B.rows) throw std::invalid_argument("row mismatch");
  if (A.rows < A.cols) throw std::invalid_argument("underdetermined system");
  const size_t n = A.cols, m = B.cols, rows = A.rows;
  const size_t nv = (A.e.empty() ? (B.e.empty() ? 0 : B.e[0].nvars()) : A.e[0].nvars());

  // Work on the augmented matrix [A | B].
  PolyMatrix W(rows, n + m, nv);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < n; ++j) W.at(i, j) = ring.normalize(A.at(i, j));
    for (size_t j = 0; j < m; ++j) W.at(i, n + j) = ring.normalize(B.at(i, j));
  }

  LaurentPoly prev = LaurentPoly::one(nv);
  for (size_t k = 0; k < n; ++k) {
    // pivot selection: first row with nonzero entry in column k
    size_t piv = k;
    while (piv < rows && W.at(piv, k).isZero()) ++piv;
    if (piv == rows) throw SingularMatrix(k, k);
    if (piv != k)
      for (size_t j = 0; j < n + m; ++j) std::swap(W.at(k, j), W.at(piv, j));
    for (size_t i = k + 1; i < rows; ++i) {
      for (size_t j = k + 1; j < n + m; ++j) {
        LaurentPoly t = ring.mul(W.at(k, k), W.at(i, j)) -
                        ring.mul(W.at(i, k), W.at(k, j));
        auto q = ring.div(t, prev);
        if (!q) throw std::logic_error("Bareiss exact division failed");
        W.at(i, j) = *q;
      }
      W.at(i, k) = LaurentPoly(nv);
    }
    prev = W.at(k, k);
  }
  // Overdetermined rows must have been eliminated to zero entirely.
  for (size_t i = n; i < rows; ++i)
    for (size_t j = n; j < n + m; ++j)
      if (!W.at(i, j).isZero()) throw InconsistentSystem(i);

  // Back-substitution over the fraction field with the common denominator
  // det = W(n-1, n-1): x_i = (det * B_i - sum_{j>i} A_ij * x_j) / A_ii.
  FractionSolution sol;
  sol.rank = n;
  sol.den = W.at(n - 1, n - 1);
  sol.num = PolyMatrix(n, m, nv);
  for (size_t c = 0; c < m; ++c) {
    for (size_t ii = n; ii-- > 0;) {
      LaurentPoly acc = ring.mul(sol.den, W.at(ii, n + c));
      for (size_t j = ii + 1; j < n; ++j)
        acc -= ring.mul(W.at(ii, j), sol.num.at(j, c));
      auto q = ring.div(acc, W.at(ii, ii));
      if (!q) throw std::logic_error("back-substitution exact division failed");
      sol.num.at(ii, c) = *q;
    }
  }
  return sol;
}

/// Determinant by one-step Bareiss (fraction-free).
template <class Ring>
LaurentPoly determinant(const Ring& ring, const PolyMatrix& A) {
  if (A.rows != A.cols) throw std::invalid_argument("determinant of non-square");
  const size_t n = A.rows;
  const size_t nv = A.e.empty() ? 0 : A.e[0].nvars();
  if (n == 0) return LaurentPoly::one(nv);
  PolyMatrix W = A;
  for (auto& p : W.e) p = ring.normalize(p);
  LaurentPoly prev = LaurentPoly::one(nv);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && W.at(piv, k).isZero()) ++piv;
    if (piv == n) return LaurentPoly(nv);  // singular: det = 0
    if (piv != k) {
      sign = -sign;
      for (size_t j = 0; j < n; ++j) std::swap(W.at(k, j), W.at(piv, j));
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        LaurentPoly t = ring.mul(W.at(k, k), W.at(i, j)) -
                        ring.mul(W.at(i, k), W.at(k, j));
        auto q = ring.div(t, prev);
        if (!q) throw std::logic_error("Bareiss exact division failed");
        W.at(i, j) = *q;
      }
    prev = W.at(k, k);
  }
  LaurentPoly d = W.at(n - 1, n - 1);
  if (sign < 0) d *= Rational(-1);
  return d;
}

/// Adjugate matrix via cofactor determinants: adj(A)_{ij} = (-1)^{i+j} M_{ji}.
template <class Ring>
PolyMatrix adjugate(const Ring& ring, const PolyMatrix& A) {
  if (A.rows != A.cols) throw std::invalid_argument("adjugate of non-square");
  const size_t n = A.rows;
  const size_t nv = A.e.empty() ? 0 : A.e[0].nvars();
  PolyMatrix adj(n, n, nv);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      PolyMatrix minor(n - 1, n - 1, nv);
      for (size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = A.at(r, c);
          ++cc;
        }
        ++rr;
      }
      LaurentPoly d = determinant(ring, minor);
      if ((i + j) % 2 == 1) d *= Rational(-1);
      adj.at(i, j) = d;
    }
  return adj;
}

/// Spec-level exact solve A x = b over the polynomial fraction field;
/// returns (numerator, denominator) pairs. Square or overdetermined A.
struct PolyFraction {
  LaurentPoly num, den;
};
std::vector<PolyFraction> solveLinear(const PolyMatrix& A,
                                      const std::vector<LaurentPoly>& b);

struct UnderdeterminedSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact dense rational solve of M x = b with rows >= cols, requiring a
/// unique solution. Throws UnderdeterminedSystem if the rank is deficient
/// and InconsistentSystem if no solution exists.
std::vector<Rational> solveRationalLinear(std::vector<std::vector<Rational>> M,
                                          std::vector<Rational> b);

}  // namespace wfrob
