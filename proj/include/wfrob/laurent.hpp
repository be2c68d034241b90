#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfrob/rational.hpp"

namespace wfrob {

using Expvec = std::vector<int32_t>;

/// Graded lexicographic order on exponent vectors: compare total degree
/// first, then lexicographically. Works for signed (Laurent) exponents.
struct GradedLexLess {
  bool operator()(const Expvec& a, const Expvec& b) const {
    long da = 0, db = 0;
    for (int32_t e : a) da += e;
    for (int32_t e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Sparse multivariate Laurent polynomial over exact rationals.
/// Invariants: no zero coefficients are stored; every exponent vector has
/// length nvars(). The zero polynomial is the empty map; its degree is the
/// kMinusInfinity sentinel.
class LaurentPoly {
 public:
  static constexpr long kMinusInfinity = std::numeric_limits<long>::min();

  using TermMap = std::map<Expvec, Rational, GradedLexLess>;

  explicit LaurentPoly(size_t nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(size_t nvars, const Rational& c) {
    LaurentPoly p(nvars);
    p.addTerm(Expvec(nvars, 0), c);
    return p;
  }
  static LaurentPoly one(size_t nvars) { return constant(nvars, 1); }
  static LaurentPoly variable(size_t nvars, size_t idx, int32_t power = 1) {
    LaurentPoly p(nvars);
    Expvec e(nvars, 0);
    e.at(idx) = power;
    p.addTerm(e, 1);
    return p;
  }
  static LaurentPoly monomial(Expvec e, const Rational& c) {
    LaurentPoly p(e.size());
    p.addTerm(std::move(e), c);
    return p;
  }

  size_t nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  size_t termCount() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void addTerm(Expvec e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Leading term in graded-lex order. Precondition: not zero.
  const std::pair<const Expvec, Rational>& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    return *terms_.rbegin();
  }

  long totalDegree() const {
    if (terms_.empty()) return kMinusInfinity;
    long d = 0;
    for (int32_t e : terms_.rbegin()->first) d += e;
    return d;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    checkArity(o);
    for (const auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    checkArity(o);
    for (const auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.checkArity(b);
    LaurentPoly r(a.nvars_);
    Expvec e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.addTerm(e, ca * cb);
      }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Multiply every term by the monomial with exponent vector `shift`.
  LaurentPoly shifted(const Expvec& shift) const {
    if (shift.size() != nvars_) throw std::invalid_argument("shift arity");
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Expvec ne = e;
      for (size_t i = 0; i < ne.size(); ++i) ne[i] += shift[i];
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  /// Apply a per-term map term -> coefficient multiplier; drops zeros.
  /// Used to implement Euler-type derivations, which act diagonally on
  /// monomials.
  LaurentPoly scaleTerms(const std::function<Rational(const Expvec&)>& f) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.addTerm(e, c * f(e));
    return r;
  }

  /// Partial derivative with respect to a bare variable slot.
  LaurentPoly derivative(size_t idx) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[idx] == 0) continue;
      Expvec ne = e;
      ne[idx] -= 1;
      r.addTerm(std::move(ne), c * e[idx]);
    }
    return r;
  }

 private:
  void checkArity(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  }

  size_t nvars_;
  TermMap terms_;
};

/// Substitute polynomials for a subset of variables. `repl[i]`, when set,
/// replaces variable i; the exponent of a replaced variable must be
/// nonnegative. Unreplaced variables pass through.
LaurentPoly substitute(const LaurentPoly& p,
                       const std::vector<std::optional<LaurentPoly>>& repl);

/// Evaluate at complex values (one per variable slot).
std::complex<double> evaluate(const LaurentPoly& p,
                              const std::vector<std::complex<double>>& vals);

/// Exact division in the Laurent ring. Returns the quotient if b divides a
/// exactly, otherwise nullopt. b must be nonzero.
std::optional<LaurentPoly> exactDivide(const LaurentPoly& a, const LaurentPoly& b);

/// Weighted degree of a monomial under per-variable rational weights.
inline Rational weightedDegree(const Expvec& e, const std::vector<Rational>& w) {
  Rational d = 0;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) d += w[i] * e[i];
  return d;
}

/// True if every term has weighted degree `target`.
bool isWeightedHomogeneous(const LaurentPoly& p, const std::vector<Rational>& w,
                           const Rational& target);

}  // namespace wfrob
