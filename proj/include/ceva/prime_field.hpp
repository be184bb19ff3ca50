#pragma once

// Word-size prime field, used as a fast pre-pass for rank computations.
// With p = 1 (mod n) the n-th roots of unity exist mod p, so cyclotomic
// data maps in via zeta -> w.  Certificates are never emitted from this
// mode; anything certified is recomputed over Q / Q(zeta_n).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceva/cyclotomic.hpp"
#include "ceva/rational.hpp"

namespace ceva {

struct PrimeField {
  using Elem = std::uint64_t;

  std::uint64_t p = 0;
  long n = 1;         // order of the distinguished root of unity below
  std::uint64_t w = 1;  // fixed n-th root of unity, for zeta(a)

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (p < 2) throw std::invalid_argument("prime field: modulus must be >= 2");
  }

  // Field with a pinned n-th root of unity so it can stand in for Q(zeta_n).
  static PrimeField with_root(std::uint64_t prime, long order) {
    PrimeField k(prime);
    k.n = order;
    k.w = k.root_of_unity(order);
    return k;
  }

  Elem zeta(long a) const {
    a %= n;
    if (a < 0) a += n;
    return powmod(w, static_cast<std::uint64_t>(a));
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long v) const {
    long long m = static_cast<long long>(v) % static_cast<long long>(p);
    if (m < 0) m += p;
    return static_cast<Elem>(m);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    if (s >= p) s -= p;
    return s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % p);
  }
  Elem powmod(Elem a, std::uint64_t e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in prime field");
    return powmod(a, p - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  int order(Elem a, Elem b) const { return a < b ? -1 : (a > b ? 1 : 0); }
  std::string str(Elem a) const { return std::to_string(a); }

  Elem from_rat(const Rat& q) const {
    Int num = q.get_num(), den = q.get_den();
    Int pm(static_cast<unsigned long>(p));
    Int nm = num % pm, dm = den % pm;
    if (nm < 0) nm += pm;
    if (dm == 0) throw std::domain_error("prime divides a denominator");
    return div(static_cast<Elem>(nm.get_ui()), static_cast<Elem>(dm.get_ui()));
  }

  // Deterministic element of multiplicative order exactly n; requires p = 1 (mod n).
  Elem root_of_unity(long n) const {
    if (n <= 0 || (p - 1) % static_cast<std::uint64_t>(n) != 0)
      throw std::invalid_argument("prime field: need p = 1 (mod n) for an n-th root of unity");
    std::vector<long> prime_divs;
    long m = n;
    for (long q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        prime_divs.push_back(q);
        while (m % q == 0) m /= q;
      }
    if (m > 1) prime_divs.push_back(m);
    for (Elem a = 2; a < p; ++a) {
      Elem w = powmod(a, (p - 1) / n);
      bool exact = w != 0;
      for (long q : prime_divs)
        if (powmod(w, n / q) == one()) {
          exact = false;
          break;
        }
      if (exact) return w;
    }
    throw std::domain_error("prime field: no n-th root of unity found");
  }

  // zeta -> w, extended to all of Q(zeta_n) by evaluating power-basis coords.
  Elem from_cyc(const CycField& F, const CycNum& a, Elem w) const {
    F.check(a);
    Elem acc = 0, wp = one();
    for (long i = 0; i < F.phi(); ++i) {
      acc = add(acc, mul(from_rat(a.coords[i]), wp));
      wp = mul(wp, w);
    }
    return acc;
  }

  bool operator==(const PrimeField& o) const { return p == o.p && n == o.n && w == o.w; }
};

// Smallest prime >= lo with p = 1 (mod n), for pre-pass use.
inline std::uint64_t prime_one_mod(long n, std::uint64_t lo = (1ull << 30)) {
  auto is_prime = [](std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  std::uint64_t p = lo + ((n - lo % n) % n) + 1;
  while (!is_prime(p)) p += n;
  return p;
}

}  // namespace ceva
