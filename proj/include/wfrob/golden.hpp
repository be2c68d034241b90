#pragma once

#include <stdexcept>
#include <tuple>
#include <vector>

#include "wfrob/frobenius.hpp"

namespace wfrob {
namespace golden {

// Reference data for the three worked low-rank cases (l,k) = (2,1), (3,1),
// (3,2): flat coordinates (z-chart polynomials), the polynomial part of the
// potential (t-chart), the full metric matrices for (2,1), and spot entries
// for l = 3. Transcribed once; used by the example command and the
// acceptance suite.

namespace detail {

struct Mono {
  Rational c;
  std::vector<int> ze;
  int e1 = 0, e2 = 0;
};

inline LaurentPoly poly(int l, std::initializer_list<Mono> ms) {
  size_t nv = static_cast<size_t>(l) + 4;
  LaurentPoly p(nv);
  for (const auto& m : ms) {
    Expvec e(nv, 0);
    for (size_t i = 0; i < m.ze.size(); ++i) e[i] = m.ze[i];
    e[nv - 2] = m.e1;
    e[nv - 1] = m.e2;
    p.addTerm(e, m.c);
  }
  return p;
}

inline LaurentPoly bareLog(int l, int which) {
  size_t nv = static_cast<size_t>(l) + 4;
  return LaurentPoly::variable(nv, static_cast<size_t>(l) + (which - 1));
}

}  // namespace detail

inline bool hasCase(const GroupSpec& s) {
  return (s.l == 2 && s.k == 1) || (s.l == 3 && (s.k == 1 || s.k == 2));
}

/// Flat coordinates t[1..l+2] as z-chart polynomials.
inline std::vector<LaurentPoly> flatCoords(const GroupSpec& s) {
  using namespace detail;
  std::vector<LaurentPoly> t;
  t.emplace_back();  // index 0 unused
  if (s.l == 2 && s.k == 1) {
    t.push_back(poly(2, {{rat(1), {1, 0}}, {rat(-1), {0, 0}, 0, 1}}));
    t.push_back(poly(2, {{rat(1), {0, 1}},
                         {rat(1), {0, 0}, 0, 1},
                         {rat(-1), {0, 0}, 1, 0}}));
    t.push_back(bareLog(2, 1));
    t.push_back(bareLog(2, 2));
    return t;
  }
  if (s.l == 3 && s.k == 1) {
    t.push_back(poly(3, {{rat(1), {1, 0, 0}}, {rat(-1), {0, 0, 0}, 0, 1}}));
    t.push_back(poly(3, {{rat(1), {0, 1, 0}},
                         {rat(-1), {0, 0, 1}, 1, 0},
                         {rat(1), {0, 0, 0}, 0, 1},
                         {rat(1), {0, 0, 0}, 2, 0}}));
    t.push_back(poly(3, {{rat(1), {0, 0, 1}}, {rat(-1), {0, 0, 0}, 1, 0}}));
    t.push_back(bareLog(3, 1));
    t.push_back(bareLog(3, 2));
    return t;
  }
  if (s.l == 3 && s.k == 2) {
    t.push_back(poly(3, {{rat(1), {1, 0, 0}}, {rat(-1), {0, 0, 0}, 0, 1}}));
    t.push_back(poly(3, {{rat(1), {0, 1, 0}},
                         {rat(-1), {1, 0, 0}, 0, 1},
                         {rat(1), {0, 0, 0}, 0, 2}}));
    t.push_back(poly(3, {{rat(1), {0, 0, 1}},
                         {rat(-1), {0, 0, 0}, 1, 0},
                         {rat(1), {1, 0, 0}, 0, 1},
                         {rat(-1), {0, 0, 0}, 0, 2}}));
    t.push_back(bareLog(3, 1));
    t.push_back(bareLog(3, 2));
    return t;
  }
  throw std::invalid_argument("no reference data for this (l,k)");
}

/// The polynomial part of the potential in flat coordinates.
inline LaurentPoly fhat(const GroupSpec& s) {
  using namespace detail;
  if (s.l == 2 && s.k == 1) {
    LaurentPoly f = poly(2, {{rat(1), {0, 0}, 1, 1},
                             {rat(-1), {0, 1}, 1, 0},
                             {rat(1), {0, 1}, 0, 1}});
    f += rat(1, 2) * (poly(2, {{rat(1), {2, 0}}}) * bareLog(2, 2));
    f += poly(2, {{rat(1), {1, 1}}}) * bareLog(2, 1);
    f += rat(1, 2) * (poly(2, {{rat(1), {0, 2}}}) * bareLog(2, 1));
    return f;
  }
  if (s.l == 3 && s.k == 1) {
    LaurentPoly f = poly(3, {{rat(1, 4), {1, 0, 2}},
                             {rat(1, 4), {0, 1, 2}},
                             {rat(-1, 96), {0, 0, 4}},
                             {rat(1), {0, 0, 1}, 1, 1},
                             {rat(-1), {0, 1, 1}, 1, 0},
                             {rat(1), {0, 1, 0}, 0, 1},
                             {rat(1, 2), {0, 1, 0}, 2, 0}});
    f += rat(1, 2) * (poly(3, {{rat(1), {2, 0, 0}}}) * bareLog(3, 2));
    f += poly(3, {{rat(1), {1, 1, 0}}}) * bareLog(3, 1);
    f += rat(1, 2) * (poly(3, {{rat(1), {0, 2, 0}}}) * bareLog(3, 1));
    return f;
  }
  if (s.l == 3 && s.k == 2) {
    LaurentPoly f = poly(3, {{rat(1, 4), {2, 1, 0}},
                             {rat(-1, 96), {4, 0, 0}},
                             {rat(1), {1, 0, 0}, 1, 1},
                             {rat(-1), {0, 0, 1}, 1, 0},
                             {rat(1), {1, 0, 1}, 0, 1},
                             {rat(-1, 2), {0, 0, 1}, 0, 2}});
    f += rat(1, 2) * (poly(3, {{rat(1), {0, 2, 0}}}) * bareLog(3, 2));
    f += poly(3, {{rat(1), {0, 1, 1}}}) * bareLog(3, 1);
    f += rat(1, 2) * (poly(3, {{rat(1), {0, 0, 2}}}) * bareLog(3, 1));
    return f;
  }
  throw std::invalid_argument("no reference data for this (l,k)");
}

namespace detail {

inline PolyMatrix symMatrix(
    int n, size_t nv,
    std::initializer_list<std::tuple<int, int, LaurentPoly>> entries) {
  PolyMatrix m(n, n, nv);
  for (const auto& [i, j, p] : entries) {
    m.at(i - 1, j - 1) = p;
    m.at(j - 1, i - 1) = p;
  }
  return m;
}

}  // namespace detail

/// Full intersection form g(y), y-chart (E1 = e^{y^{l+1}}, E2 = e^{y^{l+2}}).
inline PolyMatrix gY(const GroupSpec& s) {
  using namespace detail;
  if (s.l == 2 && s.k == 1)
    return symMatrix(4, 6,
                     {{1, 1, poly(2, {{rat(2), {0, 1}, 1, 0}})},
                      {1, 2, poly(2, {{rat(3), {0, 0}, 1, 1}})},
                      {1, 3, poly(2, {{rat(1), {1, 0}}})},
                      {2, 2, poly(2, {{rat(2), {1, 0}, 0, 1}})},
                      {2, 4, poly(2, {{rat(1), {0, 1}}})},
                      {3, 3, poly(2, {{rat(2), {0, 0}}})},
                      {3, 4, poly(2, {{rat(-1), {0, 0}}})},
                      {4, 4, poly(2, {{rat(2), {0, 0}}})}});
  if (s.l == 3 && s.k == 1)
    return symMatrix(
        5, 7,
        {{1, 1, poly(3, {{rat(2), {0, 1, 0}, 1, 0}})},
         {1, 2, poly(3, {{rat(3), {0, 0, 1}, 1, 1}})},
         {1, 3, poly(3, {{rat(4), {0, 0, 0}, 1, 1}})},
         {1, 4, poly(3, {{rat(1), {1, 0, 0}}})},
         {2, 2, poly(3, {{rat(2), {1, 0, 1}, 0, 1}, {rat(4), {0, 0, 0}, 1, 2}})},
         {2, 3, poly(3, {{rat(3), {1, 0, 0}, 0, 1}})},
         {2, 5, poly(3, {{rat(1), {0, 1, 0}}})},
         {3, 3, poly(3, {{rat(-1, 2), {0, 0, 2}}, {rat(2), {0, 1, 0}}})},
         {3, 5, poly(3, {{rat(1, 2), {0, 0, 1}}})},
         {4, 4, poly(3, {{rat(2), {0, 0, 0}}})},
         {4, 5, poly(3, {{rat(-1), {0, 0, 0}}})},
         {5, 5, poly(3, {{rat(3, 2), {0, 0, 0}}})}});
  if (s.l == 3 && s.k == 2)
    return symMatrix(
        5, 7,
        {{1, 1, poly(3, {{rat(-1, 2), {2, 0, 0}}, {rat(2), {0, 1, 0}}})},
         {1, 2, poly(3, {{rat(3), {0, 0, 1}, 1, 0}})},
         {1, 3, poly(3, {{rat(4), {0, 0, 0}, 1, 1}})},
         {1, 4, poly(3, {{rat(1, 2), {1, 0, 0}}})},
         {2, 2, poly(3, {{rat(2), {1, 0, 1}, 1, 0}, {rat(4), {0, 0, 0}, 2, 1}})},
         {2, 3, poly(3, {{rat(3), {1, 0, 0}, 1, 1}})},
         {2, 4, poly(3, {{rat(1), {0, 1, 0}}})},
         {3, 3, poly(3, {{rat(2), {0, 1, 0}, 0, 1}})},
         {3, 5, poly(3, {{rat(1), {0, 0, 1}}})},
         {4, 4, poly(3, {{rat(3, 2), {0, 0, 0}}})},
         {4, 5, poly(3, {{rat(-1), {0, 0, 0}}})},
         {5, 5, poly(3, {{rat(2), {0, 0, 0}}})}});
  throw std::invalid_argument("no reference data for this (l,k)");
}

/// Full flat metric eta(y), y-chart.
inline PolyMatrix etaY(const GroupSpec& s) {
  using namespace detail;
  if (s.l == 2 && s.k == 1)
    return symMatrix(4, 6,
                     {{1, 1, poly(2, {{rat(2), {0, 0}, 1, 0}})},
                      {1, 3, poly(2, {{rat(1), {0, 0}}})},
                      {2, 2, poly(2, {{rat(2), {0, 0}, 0, 1}})},
                      {2, 4, poly(2, {{rat(1), {0, 0}}})}});
  if (s.l == 3 && s.k == 1)
    return symMatrix(5, 7,
                     {{1, 1, poly(3, {{rat(2), {0, 0, 0}, 1, 0}})},
                      {1, 4, poly(3, {{rat(1), {0, 0, 0}}})},
                      {2, 2, poly(3, {{rat(2), {0, 0, 1}, 0, 1}})},
                      {2, 3, poly(3, {{rat(3), {0, 0, 0}, 0, 1}})},
                      {2, 5, poly(3, {{rat(1), {0, 0, 0}}})},
                      {3, 3, poly(3, {{rat(2), {0, 0, 0}}})}});
  if (s.l == 3 && s.k == 2)
    return symMatrix(5, 7,
                     {{1, 1, poly(3, {{rat(2), {0, 0, 0}}})},
                      {1, 2, poly(3, {{rat(3), {0, 0, 0}, 1, 0}})},
                      {2, 2, poly(3, {{rat(2), {1, 0, 0}, 1, 0}})},
                      {2, 4, poly(3, {{rat(1), {0, 0, 0}}})},
                      {3, 3, poly(3, {{rat(2), {0, 0, 0}, 0, 1}})},
                      {3, 5, poly(3, {{rat(1), {0, 0, 0}}})}});
  throw std::invalid_argument("no reference data for this (l,k)");
}

/// Full flat metric eta(z) for the two l = 3 cases, z-chart
/// (E1 = e^{z^{l+1}}, E2 = e^{z^{l+2} - z^{l+1}}).
inline PolyMatrix etaZ(const GroupSpec& s) {
  using namespace detail;
  if (s.l == 3 && s.k == 1)
    return symMatrix(
        5, 7,
        {{1, 1, poly(3, {{rat(2), {0, 0, 0}, 0, 1}})},
         {1, 2, poly(3, {{rat(-2), {0, 0, 0}, 0, 1}})},
         {1, 5, poly(3, {{rat(1), {0, 0, 0}}})},
         {2, 2, poly(3, {{rat(2), {0, 0, 0}, 0, 1}, {rat(2), {0, 0, 1}, 1, 0}})},
         {2, 3, poly(3, {{rat(3), {0, 0, 0}, 1, 0}})},
         {2, 4, poly(3, {{rat(1), {0, 0, 0}}})},
         {3, 3, poly(3, {{rat(2), {0, 0, 0}}})}});
  if (s.l == 3 && s.k == 2)
    return symMatrix(
        5, 7,
        {{1, 1, poly(3, {{rat(2), {0, 0, 0}}})},
         {1, 2, poly(3, {{rat(3), {0, 0, 0}, 0, 1}})},
         {1, 3, poly(3, {{rat(-3), {0, 0, 0}, 0, 1}})},
         {2, 2, poly(3, {{rat(2), {1, 0, 0}, 0, 1}})},
         {2, 3, poly(3, {{rat(-2), {1, 0, 0}, 0, 1}})},
         {2, 5, poly(3, {{rat(1), {0, 0, 0}}})},
         {3, 3, poly(3, {{rat(2), {1, 0, 0}, 0, 1}, {rat(2), {0, 0, 0}, 1, 0}})},
         {3, 4, poly(3, {{rat(1), {0, 0, 0}}})}});
  throw std::invalid_argument("no reference data for this (l,k)");
}

}  // namespace golden
}  // namespace wfrob
