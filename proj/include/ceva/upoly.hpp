#pragma once

// Dense univariate polynomial helpers (coefficients low-degree first).
// Just enough machinery for cyclotomic polynomials and arithmetic modulo
// them: multiplication, exact/euclidean division, extended gcd over Q.

#include <vector>

#include "ceva/rational.hpp"

namespace ceva {

using IntPoly = std::vector<Int>;  // c0 + c1 t + ...
using RatPoly = std::vector<Rat>;

inline void upoly_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void upoly_trim(RatPoly& p) {
  while (!p.empty() && rat_is_zero(p.back())) p.pop_back();
}

inline int upoly_deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }
inline int upoly_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

template <class P>
P upoly_mul(const P& a, const P& b) {
  if (a.empty() || b.empty()) return P{};
  P r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  upoly_trim(r);
  return r;
}

// Exact division of integer polynomials; the remainder must be zero.
inline IntPoly upoly_divexact(IntPoly num, const IntPoly& den) {
  upoly_trim(num);
  if (den.empty()) throw std::domain_error("upoly: division by zero polynomial");
  IntPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  while (upoly_deg(num) >= upoly_deg(den)) {
    int shift = upoly_deg(num) - upoly_deg(den);
    Int c = num.back() / den.back();
    if (c * den.back() != num.back()) throw std::domain_error("upoly: inexact division");
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    upoly_trim(num);
  }
  if (!num.empty()) throw std::domain_error("upoly: inexact division (nonzero remainder)");
  return q;
}

// Euclidean division over Q: returns remainder, fills quotient if given.
inline RatPoly upoly_rem(RatPoly num, const RatPoly& den, RatPoly* quot = nullptr) {
  upoly_trim(num);
  RatPoly dn = den;
  upoly_trim(dn);
  if (dn.empty()) throw std::domain_error("upoly: division by zero polynomial");
  RatPoly q(num.size() >= dn.size() ? num.size() - dn.size() + 1 : 0, Rat(0));
  while (upoly_deg(num) >= upoly_deg(dn)) {
    int shift = upoly_deg(num) - upoly_deg(dn);
    Rat c = num.back() / dn.back();
    q[shift] = c;
    for (size_t i = 0; i < dn.size(); ++i) num[shift + i] -= c * dn[i];
    upoly_trim(num);
  }
  if (quot) {
    upoly_trim(q);
    *quot = q;
  }
  return num;
}

// Extended gcd over Q: returns (g, s, t) with s*a + t*b = g, g monic or zero.
struct UPolyXgcd {
  RatPoly g, s, t;
};

inline UPolyXgcd upoly_xgcd(RatPoly a, RatPoly b) {
  RatPoly s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    RatPoly q;
    RatPoly r = upoly_rem(a, b, &q);
    RatPoly s2 = s0, t2 = t0;
    // s2 -= q*s1 ; t2 -= q*t1
    RatPoly qs = upoly_mul(q, s1), qt = upoly_mul(q, t1);
    s2.resize(std::max(s2.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    t2.resize(std::max(t2.size(), qt.size()), Rat(0));
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    upoly_trim(s2);
    upoly_trim(t2);
    a = b;
    b = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : s0) c /= lead;
    for (auto& c : t0) c /= lead;
  }
  return {a, s0, t0};
}

}  // namespace ceva
