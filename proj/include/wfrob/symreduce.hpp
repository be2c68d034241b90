#pragma once

#include <stdexcept>

#include "wfrob/laurent.hpp"

namespace wfrob {

struct NotSymmetric : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonTerminating : std::logic_error {
  using std::logic_error::logic_error;
};

/// Rewrite a symmetric Laurent polynomial in q_1..q_{l+1} as a polynomial in
/// the elementary symmetric functions sigma_1..sigma_l, imposing the relation
/// sigma_{l+1} = q_1*...*q_{l+1} = 1. The result lives in the same number of
/// slots; slot j holds the sigma_{j+1-1} exponent and slot l stays zero.
/// Negative exponents are cleared first by multiplying with powers of
/// sigma_{l+1} (legal by the relation).
LaurentPoly symReduce(const LaurentPoly& p, int l);

/// Elementary symmetric polynomial e_j in the first n slots of an
/// nvars-slot polynomial.
LaurentPoly elementarySymmetric(size_t nvars, size_t n, size_t j);

struct InfiniteBasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All exponent vectors e >= 0 with sum_i weights[i]*e[i] == target,
/// in ascending graded-lex order. Every weight must be positive
/// (a weight <= 0 would make the basis infinite).
std::vector<Expvec> weightedBasis(const std::vector<Rational>& weights,
                                  const Rational& target);

}  // namespace wfrob
