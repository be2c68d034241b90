#include "wfrob/laurent.hpp"

namespace wfrob {

LaurentPoly substitute(const LaurentPoly& p,
                       const std::vector<std::optional<LaurentPoly>>& repl) {
  if (repl.size() != p.nvars()) throw std::invalid_argument("repl arity mismatch");
  LaurentPoly result(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(p.nvars(), c);
    Expvec passthrough(p.nvars(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!repl[i]) {
        passthrough[i] = e[i];
        continue;
      }
      if (e[i] < 0)
        throw std::domain_error("substitute: negative exponent on replaced variable");
      LaurentPoly pw = *repl[i];
      LaurentPoly acc = LaurentPoly::one(p.nvars());
      int32_t n = e[i];
      // square-and-multiply
      while (n > 0) {
        if (n & 1) acc *= pw;
        n >>= 1;
        if (n) pw *= pw;
      }
      term *= acc;
    }
    result += term.shifted(passthrough);
  }
  return result;
}

std::complex<double> evaluate(const LaurentPoly& p,
                              const std::vector<std::complex<double>>& vals) {
  if (vals.size() != p.nvars()) throw std::invalid_argument("eval arity mismatch");
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> t = to_double(c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      t *= std::pow(vals[i], static_cast<double>(e[i]));
    }
    sum += t;
  }
  return sum;
}

namespace {

// Per-variable minimum exponent over all terms.
Expvec minExponents(const LaurentPoly& p) {
  Expvec m(p.nvars(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

Expvec negated(const Expvec& e) {
  Expvec r = e;
  for (auto& x : r) x = -x;
  return r;
}

}  // namespace

std::optional<LaurentPoly> exactDivide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.isZero()) throw std::domain_error("division by zero polynomial");
  if (a.isZero()) return LaurentPoly(a.nvars());
  // Shift both operands into the honest polynomial ring (all exponents >= 0);
  // the quotient picks up the difference of the two shifts.
  Expvec sa = minExponents(a), sb = minExponents(b);
  LaurentPoly num = a.shifted(negated(sa));
  LaurentPoly den = b.shifted(negated(sb));
  LaurentPoly quot(a.nvars());
  const auto& [eb, cb] = den.leading();
  size_t guard = num.termCount() * den.termCount() + num.termCount() + 16;
  while (!num.isZero()) {
    if (guard-- == 0) return std::nullopt;
    const auto& [ea, ca] = num.leading();
    Expvec q(a.nvars());
    for (size_t i = 0; i < q.size(); ++i) {
      q[i] = ea[i] - eb[i];
      if (q[i] < 0) return std::nullopt;  // leading term not divisible
    }
    Rational qc = ca / cb;
    quot.addTerm(q, qc);
    num -= den.shifted(q) * qc;
  }
  // undo the shifts: quotient gains sa - sb
  Expvec back(a.nvars());
  for (size_t i = 0; i < back.size(); ++i) back[i] = sa[i] - sb[i];
  return quot.shifted(back);
}

bool isWeightedHomogeneous(const LaurentPoly& p, const std::vector<Rational>& w,
                           const Rational& target) {
  for (const auto& [e, c] : p.terms())
    if (weightedDegree(e, w) != target) return false;
  return true;
}

}  // namespace wfrob
