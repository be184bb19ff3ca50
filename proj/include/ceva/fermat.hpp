#pragma once

// The product polynomial of the pairwise power differences, the six-generator
// ideal of the multiplicity->=3 line configuration in P^3, and the companion
// plane (P^2) configuration used as a regression fixture.

#include <stdexcept>
#include <utility>
#include <vector>

#include "ceva/cyclotomic.hpp"
#include "ceva/poly.hpp"
#include "ceva/rational.hpp"

namespace ceva {

// A polynomial kept in factored form: the product of factors[i].first raised
// to factors[i].second.  Jet expansions along flats are far cheaper on the
// factors than on the expanded product.
using FactoredPoly = std::vector<std::pair<Poly<RatField>, long>>;

inline Poly<RatField> expand_factored(const FactoredPoly& factors) {
  if (factors.empty()) throw std::invalid_argument("expand_factored: empty product");
  Poly<RatField> f = Poly<RatField>::constant(factors[0].first.ring(), Rat(1));
  for (const auto& [g, e] : factors) f = f * g.pow(e);
  return f;
}

// The pairwise power-difference factors of the product polynomial, unexpanded.
inline FactoredPoly fermat_factored(const RingPtr<RatField>& ring, long n) {
  if (n < 1) throw std::invalid_argument("fermat_factored: need n >= 1");
  const size_t nv = ring->nvars();
  if (nv < 2) throw std::invalid_argument("fermat_factored: need at least two variables");
  FactoredPoly factors;
  for (size_t i = 0; i < nv; ++i)
    for (size_t j = i + 1; j < nv; ++j)
      factors.emplace_back(
          Poly<RatField>::variable(ring, i, n) - Poly<RatField>::variable(ring, j, n), 1);
  return factors;
}

// prod_{i<j} (x_i^n - x_j^n) over the ring's variables; for four variables
// this is the degree-6n product of the six pairwise difference factors.
inline Poly<RatField> fermat_poly(const RingPtr<RatField>& ring, long n) {
  return expand_factored(fermat_factored(ring, n));
}

// The six degree-(2n+2) generators of the ideal of the 4n^2 + 6 lines
// (triple lines plus coordinate edges), in fixed display order, together
// with the complete-intersection pair cutting out the triple lines alone.
struct GeneratorSet {
  long n = 0;
  RingPtr<RatField> ring;                // x, y, z, w
  std::vector<Poly<RatField>> gens;      // g1 .. g6
  std::vector<Poly<RatField>> ci_pair;   // the two degree-2n forms
};

inline GeneratorSet restricted_ideal_generators(const RingPtr<RatField>& ring, long n) {
  if (n < 1) throw std::invalid_argument("restricted_ideal_generators: need n >= 1");
  if (ring->nvars() != 4)
    throw std::invalid_argument("restricted_ideal_generators: need four variables");
  using P = Poly<RatField>;
  auto vp = [&](int v, long e) { return P::variable(ring, v, e); };
  const P xy = vp(0, n) - vp(1, n);  // x^n - y^n
  const P xz = vp(0, n) - vp(2, n);
  const P xw = vp(0, n) - vp(3, n);
  const P yz = vp(1, n) - vp(2, n);
  const P yw = vp(1, n) - vp(3, n);
  const P zw = vp(2, n) - vp(3, n);
  const P x = vp(0, 1), y = vp(1, 1), z = vp(2, 1), w = vp(3, 1);

  GeneratorSet g;
  g.n = n;
  g.ring = ring;
  g.gens = {
      xy * zw * x * y,  // g1
      xy * zw * z * w,  // g2
      xz * yw * x * z,  // g3
      xz * yw * y * w,  // g4
      xw * yz * x * w,  // g5
      xw * yz * y * z,  // g6
  };
  g.ci_pair = {xy * zw, xz * yw};
  return g;
}

// P^2 companion: the ideal of all intersection points of the 3n-line
// arrangement, with its three displayed degree-(n+1) generators.
struct P2Ideal {
  long n = 0;
  RingPtr<RatField> ring;            // x, y, z
  std::vector<Poly<RatField>> gens;  // x(y^n-z^n), y(z^n-x^n), z(x^n-y^n)
};

inline P2Ideal p2_fermat_ideal(const RingPtr<RatField>& ring, long n) {
  if (n < 1) throw std::invalid_argument("p2_fermat_ideal: need n >= 1");
  if (ring->nvars() != 3) throw std::invalid_argument("p2_fermat_ideal: need three variables");
  using P = Poly<RatField>;
  auto vp = [&](int v, long e) { return P::variable(ring, v, e); };
  const P x = vp(0, 1), y = vp(1, 1), z = vp(2, 1);
  P2Ideal ideal;
  ideal.n = n;
  ideal.ring = ring;
  ideal.gens = {
      x * (vp(1, n) - vp(2, n)),
      y * (vp(2, n) - vp(0, n)),
      z * (vp(0, n) - vp(1, n)),
  };
  return ideal;
}

// The cyclic-product witness (x^n - y^n)(y^n - z^n)(z^n - x^n); same zero set
// as fermat_poly on three variables, written in the sign convention used for
// the plane configuration.
inline FactoredPoly p2_witness_factored(const RingPtr<RatField>& ring, long n) {
  if (ring->nvars() != 3)
    throw std::invalid_argument("p2_witness_factored: need three variables");
  using P = Poly<RatField>;
  auto vp = [&](int v, long e) { return P::variable(ring, v, e); };
  return {{vp(0, n) - vp(1, n), 1}, {vp(1, n) - vp(2, n), 1}, {vp(2, n) - vp(0, n), 1}};
}

inline Poly<RatField> p2_witness(const RingPtr<RatField>& ring, long n) {
  return expand_factored(p2_witness_factored(ring, n));
}

// A point of the plane configuration with the number of arrangement lines
// through it.
struct P2Point {
  std::string label;
  std::vector<CycNum> coords;  // length 3
  long mult = 0;
};

// All intersection points of the 3n lines: n^2 triple points
// (zeta^{a+b} : zeta^b : 1) and the three coordinate points of multiplicity n.
// For n < 3 the coordinate points lie on fewer than three lines each; they are
// still intersection points for n = 2 and drop out at n = 1.
inline std::vector<P2Point> p2_fermat_points(const CycField& k) {
  const long n = k.n;
  std::vector<P2Point> pts;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      pts.push_back(P2Point{
          "P[" + std::to_string(a) + "," + std::to_string(b) + "]",
          {k.zeta((a + b) % n), k.zeta(b), k.one()},
          3});
  if (n >= 2) {
    const char* names[] = {"Ex", "Ey", "Ez"};
    for (int v = 0; v < 3; ++v) {
      std::vector<CycNum> c(3, k.zero());
      c[v] = k.one();
      pts.push_back(P2Point{names[v], std::move(c), n});
    }
  }
  return pts;
}

}  // namespace ceva
