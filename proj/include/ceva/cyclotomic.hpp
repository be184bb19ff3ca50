#pragma once

// Arithmetic in the n-th cyclotomic field Q(zeta_n), elements written in the
// power basis 1, z, ..., z^(phi(n)-1) modulo the n-th cyclotomic polynomial.
// Working modulo Phi_n (rather than t^n - 1) keeps the structure a field, so
// exact inversion is available for echelon forms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "ceva/rational.hpp"
#include "ceva/upoly.hpp"

namespace ceva {

inline long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Coefficient vector of the n-th cyclotomic polynomial, low degree first:
// Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d.
inline IntPoly cyclotomic_poly(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  if (n == 1) return IntPoly{Int(-1), Int(1)};
  IntPoly num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  IntPoly den{Int(1)};
  for (long d = 1; d < n; ++d)
    if (n % d == 0) den = upoly_mul(den, cyclotomic_poly(d));
  return upoly_divexact(num, den);
}

// An element of Q(zeta_n).  Carries its order so values are self-contained.
struct CycNum {
  long order = 1;
  std::vector<Rat> coords;  // length phi(order)

  bool operator==(const CycNum& o) const {
    if (order != o.order || coords.size() != o.coords.size()) return false;
    for (size_t i = 0; i < coords.size(); ++i)
      if (cmp(coords[i], o.coords[i]) != 0) return false;
    return true;
  }
};

namespace detail {
struct CycTables {
  long n = 1;
  long phi = 1;
  IntPoly modulus;                       // Phi_n
  std::vector<std::vector<Int>> redrow;  // redrow[j] = coords of t^(phi+j) mod Phi_n
  std::vector<std::vector<Rat>> zeta_pow;  // zeta^a for a in [0, n)

  explicit CycTables(long order) : n(order) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    modulus = cyclotomic_poly(n);
    phi = upoly_deg(modulus);
    // t^(phi+j) mod Phi, integer coordinates since Phi is monic over Z
    std::vector<Int> cur(phi, Int(0));  // t^phi mod Phi = -(c0 + ... + c_{phi-1} t^{phi-1})
    for (long i = 0; i < phi; ++i) cur[i] = -modulus[i];
    for (long j = 0; j + 1 < phi; ++j) {
      redrow.push_back(cur);
      // multiply by t, reduce the overflow coefficient
      std::vector<Int> nxt(phi, Int(0));
      Int top = cur[phi - 1];
      for (long i = phi - 1; i >= 1; --i) nxt[i] = cur[i - 1];
      if (top != 0)
        for (long i = 0; i < phi; ++i) nxt[i] -= top * modulus[i];
      cur = nxt;
    }
    // powers of zeta
    std::vector<Rat> e(phi, Rat(0));
    e[0] = 1;
    zeta_pow.push_back(e);
    for (long a = 1; a < n; ++a) {
      // multiply previous by t and reduce
      const std::vector<Rat>& prev = zeta_pow.back();
      std::vector<Rat> nxt(phi, Rat(0));
      Rat top = phi >= 1 ? prev[phi - 1] : Rat(0);
      for (long i = phi - 1; i >= 1; --i) nxt[i] = prev[i - 1];
      if (phi == 1) nxt[0] = 0;
      if (!rat_is_zero(top))
        for (long i = 0; i < phi; ++i) nxt[i] -= top * Rat(modulus[i]);
      zeta_pow.push_back(nxt);
    }
  }
};

inline std::shared_ptr<const CycTables> cyc_tables(long n) {
  static std::map<long, std::shared_ptr<const CycTables>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto t = std::make_shared<const CycTables>(n);
  cache.emplace(n, t);
  return t;
}
}  // namespace detail

// Field context for Q(zeta_n).
struct CycField {
  using Elem = CycNum;

  long n = 1;
  std::shared_ptr<const detail::CycTables> tab;

  CycField() : CycField(1) {}
  explicit CycField(long order) : n(order), tab(detail::cyc_tables(order)) {}

  long phi() const { return tab->phi; }
  const IntPoly& modulus() const { return tab->modulus; }

  CycNum zero() const { return CycNum{n, std::vector<Rat>(phi(), Rat(0))}; }
  CycNum one() const { return from_int(1); }
  CycNum from_int(long v) const {
    auto z = zero();
    z.coords[0] = v;
    return z;
  }
  CycNum from_rat(const Rat& q) const {
    auto z = zero();
    z.coords[0] = q;
    return z;
  }
  CycNum zeta(long a = 1) const {
    a %= n;
    if (a < 0) a += n;
    return CycNum{n, tab->zeta_pow[a]};
  }

  void check(const CycNum& a) const {
    if (a.order != n || static_cast<long>(a.coords.size()) != phi())
      throw std::invalid_argument("cyclotomic order mismatch");
  }

  CycNum add(const CycNum& a, const CycNum& b) const {
    check(a);
    check(b);
    CycNum r = a;
    for (long i = 0; i < phi(); ++i) r.coords[i] += b.coords[i];
    return r;
  }
  CycNum sub(const CycNum& a, const CycNum& b) const {
    check(a);
    check(b);
    CycNum r = a;
    for (long i = 0; i < phi(); ++i) r.coords[i] -= b.coords[i];
    return r;
  }
  CycNum neg(const CycNum& a) const {
    check(a);
    CycNum r = a;
    for (auto& c : r.coords) c = -c;
    return r;
  }
  CycNum mul(const CycNum& a, const CycNum& b) const {
    check(a);
    check(b);
    long p = phi();
    std::vector<Rat> conv(2 * p - 1, Rat(0));
    for (long i = 0; i < p; ++i) {
      if (rat_is_zero(a.coords[i])) continue;
      for (long j = 0; j < p; ++j) {
        if (rat_is_zero(b.coords[j])) continue;
        conv[i + j] += a.coords[i] * b.coords[j];
      }
    }
    std::vector<Rat> out(conv.begin(), conv.begin() + p);
    for (long k = 0; k + p < static_cast<long>(conv.size()) + 0; ++k) {
      const Rat& c = conv[p + k];
      if (rat_is_zero(c)) continue;
      const auto& row = tab->redrow[k];
      for (long i = 0; i < p; ++i)
        if (row[i] != 0) out[i] += c * Rat(row[i]);
    }
    return CycNum{n, std::move(out)};
  }
  CycNum inv(const CycNum& a) const {
    check(a);
    if (is_zero(a)) throw std::domain_error("division by zero in cyclotomic field");
    RatPoly ap(a.coords.begin(), a.coords.end());
    RatPoly mp(modulus().size());
    for (size_t i = 0; i < modulus().size(); ++i) mp[i] = Rat(modulus()[i]);
    auto x = upoly_xgcd(ap, mp);
    // Phi_n irreducible over Q, so gcd is 1 and s is the inverse mod Phi_n
    RatPoly s = upoly_rem(x.s, mp);
    std::vector<Rat> out(phi(), Rat(0));
    for (size_t i = 0; i < s.size(); ++i) out[i] = s[i];
    return CycNum{n, std::move(out)};
  }
  CycNum div(const CycNum& a, const CycNum& b) const { return mul(a, inv(b)); }

  CycNum pow(CycNum base, long e) const {
    if (e < 0) {
      base = inv(base);
      e = -e;
    }
    CycNum r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  bool is_zero(const CycNum& a) const {
    check(a);
    for (const auto& c : a.coords)
      if (!rat_is_zero(c)) return false;
    return true;
  }
  bool eq(const CycNum& a, const CycNum& b) const {
    check(a);
    check(b);
    return a == b;
  }
  bool is_rational(const CycNum& a, Rat* value = nullptr) const {
    check(a);
    for (long i = 1; i < phi(); ++i)
      if (!rat_is_zero(a.coords[i])) return false;
    if (value) *value = a.coords[0];
    return true;
  }
  // total order on elements for canonical sorting (not a field notion)
  int order(const CycNum& a, const CycNum& b) const {
    check(a);
    check(b);
    for (long i = 0; i < phi(); ++i) {
      int c = cmp(a.coords[i], b.coords[i]);
      if (c != 0) return c;
    }
    return 0;
  }

  std::string str(const CycNum& a) const {
    check(a);
    std::string out;
    for (long i = 0; i < phi(); ++i) {
      if (rat_is_zero(a.coords[i])) continue;
      if (!out.empty()) out += " + ";
      out += rat_str(a.coords[i]);
      if (i == 1) out += "*z";
      if (i >= 2) out += "*z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  bool operator==(const CycField& o) const { return n == o.n; }
};

// One linear condition over Q(zeta_n) on rational unknowns, expanded into
// phi(n) rational conditions, one per power-basis coordinate.  A rational
// vector satisfies the input condition iff it satisfies every output row.
inline std::vector<std::vector<Rat>> restrict_scalars(const CycField& F,
                                                      const std::vector<CycNum>& condition) {
  for (const auto& c : condition) F.check(c);
  std::vector<std::vector<Rat>> rows(F.phi(), std::vector<Rat>(condition.size(), Rat(0)));
  for (size_t j = 0; j < condition.size(); ++j)
    for (long i = 0; i < F.phi(); ++i) rows[i][j] = condition[j].coords[i];
  return rows;
}

}  // namespace ceva
