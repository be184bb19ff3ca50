#pragma once

// Exact rational arithmetic on top of GMP. Values are kept canonical
// (gcd(|num|, den) = 1, den >= 1) by mpq; parsing canonicalizes explicitly.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ceva {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string int_str(const Int& z) { return z.get_str(); }

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

// lcm of positive denominators, for integer row scaling
inline Int lcm_int(const Int& a, const Int& b) {
  Int g, l;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  l = a / g * b;
  return l;
}

// Field context for Q.  All field contexts share this shape: an element
// type plus the ring/field operations, so generic code (Poly, Mat) can be
// instantiated over Q, Q(zeta_n) and F_p alike.
struct RatField {
  using Elem = Rat;

  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat from_int(long v) const { return Rat(v); }

  Rat add(const Rat& a, const Rat& b) const { return a + b; }
  Rat sub(const Rat& a, const Rat& b) const { return a - b; }
  Rat mul(const Rat& a, const Rat& b) const { return a * b; }
  Rat neg(const Rat& a) const { return -a; }
  Rat inv(const Rat& a) const {
    if (rat_is_zero(a)) throw std::domain_error("division by zero");
    return Rat(1) / a;
  }
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }

  bool is_zero(const Rat& a) const { return rat_is_zero(a); }
  bool eq(const Rat& a, const Rat& b) const { return cmp(a, b) == 0; }
  // total order used for canonical sorting only
  int order(const Rat& a, const Rat& b) const { return cmp(a, b); }

  std::string str(const Rat& a) const { return rat_str(a); }

  bool operator==(const RatField&) const { return true; }
};

}  // namespace ceva
