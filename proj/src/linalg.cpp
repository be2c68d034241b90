#include "wfrob/linalg.hpp"

namespace wfrob {

std::vector<PolyFraction> solveLinear(const PolyMatrix& A,
                                      const std::vector<LaurentPoly>& b) {
  if (b.size() != A.rows) throw std::invalid_argument("rhs size mismatch");
  const size_t nv = A.e.empty() ? (b.empty() ? 0 : b[0].nvars()) : A.e[0].nvars();
  PolyMatrix B(A.rows, 1, nv);
  for (size_t i = 0; i < A.rows; ++i) B.at(i, 0) = b[i];
  FreeRing ring;
  FractionSolution s = bareissSolve(ring, A, B);
  std::vector<PolyFraction> out;
  out.reserve(A.cols);
  for (size_t i = 0; i < A.cols; ++i)
    out.push_back({s.num.at(i, 0), s.den});
  return out;
}

std::vector<Rational> solveRationalLinear(std::vector<std::vector<Rational>> M,
                                          std::vector<Rational> b) {
  const size_t rows = M.size();
  const size_t cols = rows ? M[0].size() : 0;
  if (b.size() != rows) throw std::invalid_argument("rhs size mismatch");
  size_t rank = 0;
  std::vector<size_t> pivotOf(cols, SIZE_MAX);
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[rank]);
    std::swap(b[piv], b[rank]);
    Rational inv = 1 / M[rank][c];
    for (size_t j = c; j < cols; ++j) M[rank][j] *= inv;
    b[rank] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[rank][j];
      b[i] -= f * b[rank];
    }
    pivotOf[c] = rank;
    ++rank;
  }
  for (size_t i = rank; i < rows; ++i)
    if (b[i] != 0) throw InconsistentSystem(i);
  for (size_t c = 0; c < cols; ++c)
    if (pivotOf[c] == SIZE_MAX)
      throw UnderdeterminedSystem("free column " + std::to_string(c));
  std::vector<Rational> x(cols, Rational(0));
  for (size_t c = 0; c < cols; ++c) x[c] = b[pivotOf[c]];
  return x;
}

}  // namespace wfrob
