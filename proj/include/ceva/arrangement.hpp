#pragma once

// Hyperplane arrangements in projective space: construction of the Fermat-type
// plane arrangements, their intersection lattices, multiplicity censuses, the
// two combinatorial identities every census must satisfy, and the distinguished
// line configuration obtained by keeping the flats of multiplicity at least
// three.
//
// Everything except the line configuration is generic over the coefficient
// field context, so a census can be run either exactly over Q(zeta_n) or as a
// fast pre-pass over a prime field with p = 1 (mod n).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceva/cyclotomic.hpp"
#include "ceva/linalg.hpp"
#include "ceva/rational.hpp"

namespace ceva {

inline Int binom(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// A hyperplane c0*x0 + ... + cN*xN = 0, scaled so its first nonzero
// coefficient is one.
template <class K>
struct LinFormT {
  std::vector<typename K::Elem> coeffs;
};

using LinForm = LinFormT<CycField>;

template <class K>
LinFormT<K> canonical_form(const K& k, std::vector<typename K::Elem> coeffs) {
  for (const auto& c : coeffs) {
    if (k.is_zero(c)) continue;
    const auto inv = k.inv(c);
    for (auto& v : coeffs) v = k.mul(v, inv);
    return LinFormT<K>{std::move(coeffs)};
  }
  throw std::invalid_argument("canonical_form: zero form");
}

// The planes x_i - zeta^a x_j for 0 <= i < j <= N, a in [0, n), ordered by
// (i, j) and then by a.  For N = 3 this is the 6n-plane arrangement cut out
// by the product of the pairwise differences x_i^n - x_j^n.
template <class K>
std::vector<LinFormT<K>> fermat_planes(const K& k, int N = 3) {
  if (N < 1) throw std::invalid_argument("fermat_planes: need N >= 1");
  std::vector<LinFormT<K>> planes;
  for (int i = 0; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j)
      for (long a = 0; a < k.n; ++a) {
        std::vector<typename K::Elem> c(N + 1, k.zero());
        c[i] = k.one();
        c[j] = k.neg(k.zeta(a));
        planes.push_back(LinFormT<K>{std::move(c)});
      }
  return planes;
}

// A flat of the lattice: the canonical (RREF) basis of the span of the forms
// vanishing on it, plus the indices of all arrangement planes containing it.
template <class K>
struct FlatT {
  size_t codim = 0;
  std::vector<std::vector<typename K::Elem>> rref_rows;
  std::vector<size_t> planes;  // sorted
  size_t multiplicity() const { return planes.size(); }
};

using Flat = FlatT<CycField>;

namespace detail {

template <class K>
std::string flat_key(const K& k, const std::vector<std::vector<typename K::Elem>>& rows) {
  std::string s;
  for (const auto& r : rows) {
    for (const auto& c : r) {
      s += k.str(c);
      s += '|';
    }
    s += ';';
  }
  return s;
}

// Reduce v against RREF rows (unit pivots); returns true iff v lies in their span.
template <class K>
bool reduce_in_span(const K& k, const std::vector<std::vector<typename K::Elem>>& rows,
                    std::vector<typename K::Elem>& v) {
  for (const auto& r : rows) {
    size_t p = 0;
    while (p < r.size() && k.is_zero(r[p])) ++p;
    if (p == r.size() || k.is_zero(v[p])) continue;
    const auto f = v[p];
    for (size_t j = 0; j < v.size(); ++j) v[j] = k.sub(v[j], k.mul(f, r[j]));
  }
  for (const auto& c : v)
    if (!k.is_zero(c)) return false;
  return true;
}

template <class K>
bool form_in_span(const K& k, const std::vector<std::vector<typename K::Elem>>& rows,
                  const std::vector<typename K::Elem>& form) {
  std::vector<typename K::Elem> v = form;
  return reduce_in_span(k, rows, v);
}

template <class K>
std::vector<std::vector<typename K::Elem>> rref_rows_of(
    const K& k, std::vector<std::vector<typename K::Elem>> rows) {
  Rref<K> r = rref(mat_from_rows(k, rows));
  std::vector<std::vector<typename K::Elem>> out;
  for (size_t i = 0; i < r.rank; ++i) {
    std::vector<typename K::Elem> row(r.mat.cols);
    for (size_t j = 0; j < r.mat.cols; ++j) row[j] = r.mat.at(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

// Full intersection lattice of an arrangement in P^N.  levels[c] holds the
// distinct codimension-c flats, c = 1..N, each with its incident plane set.
template <class K>
struct LatticeT {
  K field;
  int N = 3;
  std::vector<LinFormT<K>> planes;            // canonicalized input, original order
  std::vector<std::vector<FlatT<K>>> levels;  // index 0 unused

  const std::vector<FlatT<K>>& codim(size_t c) const { return levels.at(c); }
};

using Lattice = LatticeT<CycField>;

// Pairwise intersections followed by closure against single planes.  Every
// lattice flat of codimension c >= 2 contains two independent forms of its
// incidence set, so it is reached from a codimension-(c-1) flat and one more
// plane; no subset enumeration is needed.
template <class K>
LatticeT<K> intersection_lattice(const K& k, std::vector<LinFormT<K>> planes, int N = 3) {
  for (LinFormT<K>& f : planes) {
    if (f.coeffs.size() != static_cast<size_t>(N + 1))
      throw std::invalid_argument("intersection_lattice: form arity mismatch");
    f = canonical_form(k, f.coeffs);
  }
  LatticeT<K> lat{k, N, planes, {}};
  lat.levels.resize(N + 1);

  auto incidence = [&](const std::vector<std::vector<typename K::Elem>>& rows) {
    std::vector<size_t> inc;
    for (size_t i = 0; i < planes.size(); ++i)
      if (detail::form_in_span(k, rows, planes[i].coeffs)) inc.push_back(i);
    return inc;
  };

  // codimension 1: distinct hyperplanes
  {
    std::map<std::string, FlatT<K>> dedup;
    for (size_t i = 0; i < planes.size(); ++i) {
      std::vector<std::vector<typename K::Elem>> rows{planes[i].coeffs};
      std::string key = detail::flat_key(k, rows);
      if (dedup.count(key)) continue;
      dedup.emplace(std::move(key), FlatT<K>{1, rows, incidence(rows)});
    }
    for (auto& [key, f] : dedup) lat.levels[1].push_back(std::move(f));
  }

  for (int c = 2; c <= N; ++c) {
    std::map<std::string, FlatT<K>> dedup;
    for (const FlatT<K>& prev : lat.levels[c - 1]) {
      for (size_t h = 0; h < planes.size(); ++h) {
        if (std::binary_search(prev.planes.begin(), prev.planes.end(), h)) continue;
        std::vector<std::vector<typename K::Elem>> rows = prev.rref_rows;
        rows.push_back(planes[h].coeffs);
        rows = detail::rref_rows_of(k, std::move(rows));
        if (rows.size() != static_cast<size_t>(c)) continue;
        std::string key = detail::flat_key(k, rows);
        if (dedup.count(key)) continue;
        dedup.emplace(std::move(key), FlatT<K>{static_cast<size_t>(c), rows, incidence(rows)});
      }
    }
    for (auto& [key, f] : dedup) lat.levels[c].push_back(std::move(f));
  }
  return lat;
}

// Multiplicity census: for each codimension, how many flats carry exactly j
// incident planes.
struct Census {
  size_t nplanes = 0;
  int N = 3;
  std::vector<std::map<size_t, size_t>> flats_by_mult;  // index c = 1..N

  const std::map<size_t, size_t>& codim(size_t c) const { return flats_by_mult.at(c); }
};

template <class K>
Census census(const LatticeT<K>& lat) {
  Census c;
  c.nplanes = lat.planes.size();
  c.N = lat.N;
  c.flats_by_mult.resize(lat.N + 1);
  for (int lvl = 1; lvl <= lat.N; ++lvl)
    for (const FlatT<K>& f : lat.levels[lvl]) c.flats_by_mult[lvl][f.multiplicity()] += 1;
  return c;
}

// Every pair of distinct hyperplanes meets in exactly one codimension-2 flat:
//   C(d, 2) = sum_j C(j, 2) * t_j   over codimension-2 multiplicities j.
// The sum runs over every multiplicity present; `bound_sensitive` reports
// whether capping the sum at j <= N (a bound sometimes quoted for the
// identity) would flip the verdict, rather than silently absorbing it.
struct PairIdentity {
  bool holds = false;
  Int pairs;     // C(d, 2)
  Int weighted;  // sum over flats, all j
  bool bound_sensitive = false;
};

inline PairIdentity verify_pair_identity(const Census& c) {
  PairIdentity out;
  out.pairs = binom(c.nplanes, 2);
  out.weighted = 0;
  Int capped = 0;
  if (c.N >= 2)
    for (const auto& [j, t] : c.codim(2)) {
      const Int w = binom(j, 2) * Int(static_cast<long>(t));
      out.weighted += w;
      if (j <= static_cast<size_t>(c.N)) capped += w;
    }
  out.holds = (out.pairs == out.weighted);
  out.bound_sensitive = (out.pairs == capped) != out.holds;
  return out;
}

// Incidence pairs (point, line) of the codimension-3 / codimension-2 levels,
// grouped by the multiplicities (p, q) of the two flats.  This is the raw
// data behind the triple-count correction term and the second census table.
struct IncidenceRow {
  size_t p = 0;  // point multiplicity
  size_t q = 0;  // line multiplicity
  size_t incidences = 0;
};

template <class K>
std::vector<IncidenceRow> incidence_table(const LatticeT<K>& lat) {
  if (lat.N != 3) throw std::invalid_argument("incidence_table: only defined in P^3");
  std::map<std::pair<size_t, size_t>, size_t> counts;
  for (const FlatT<K>& l : lat.codim(2)) {
    const size_t q = l.multiplicity();
    for (const FlatT<K>& p : lat.codim(3))
      if (std::includes(p.planes.begin(), p.planes.end(), l.planes.begin(), l.planes.end()))
        counts[{p.multiplicity(), q}] += 1;
  }
  std::vector<IncidenceRow> rows;
  for (const auto& [pq, c] : counts) rows.push_back({pq.first, pq.second, c});
  return rows;
}

// Triple count for arrangements in P^3.  Triples of planes either meet in a
// lattice point or share a line:
//   C(d, 3) = sum_p t_p(points) C(p, 3)
//           - sum_{q >= 3} [ (incident point-line pairs on q-fold lines) - t_q(lines) ] C(q, 3).
struct HuntIdentity {
  bool holds = false;
  Int lhs;        // C(d, 3)
  Int point_sum;  // first sum
  Int line_sum;   // subtracted correction
};

template <class K>
HuntIdentity verify_hunt(const LatticeT<K>& lat) {
  if (lat.N != 3) throw std::invalid_argument("verify_hunt: only defined in P^3");
  HuntIdentity out;
  out.lhs = binom(lat.planes.size(), 3);
  out.point_sum = 0;
  for (const FlatT<K>& p : lat.codim(3)) out.point_sum += binom(p.multiplicity(), 3);

  // incident (point, line) pairs, grouped by line multiplicity q >= 3;
  // a point lies on a line iff the line's plane set is contained in the point's
  std::map<size_t, Int> pairs_by_q, lines_by_q;
  for (const FlatT<K>& l : lat.codim(2)) {
    const size_t q = l.multiplicity();
    if (q < 3) continue;
    lines_by_q[q] += 1;
    for (const FlatT<K>& p : lat.codim(3))
      if (std::includes(p.planes.begin(), p.planes.end(), l.planes.begin(), l.planes.end()))
        pairs_by_q[q] += 1;
  }
  out.line_sum = 0;
  // iterate over the lines, not the pairs: a q-fold line carrying no lattice
  // point at all (a pencil) still contributes its -C(q, 3) term
  for (const auto& [q, cnt] : lines_by_q) {
    Int pr = 0;
    if (auto it = pairs_by_q.find(q); it != pairs_by_q.end()) pr = it->second;
    out.line_sum += (pr - cnt) * binom(q, 3);
  }
  out.holds = (out.lhs == out.point_sum - out.line_sum);
  return out;
}

// Fast identity checks over many plane subsets of one arrangement.  Every
// flat of a subarrangement is an intersection of planes of the subset, hence
// already a flat of the full lattice; conversely a full flat survives in the
// subset iff the subset planes through it still span its codimension.  For
// codimension 2 that means two planes (two distinct hyperplanes through a
// common codimension-2 flat intersect exactly in it); for codimension 3 it
// means at least three planes not all sharing a line.  Both conditions, and
// point-line incidence, depend only on the incidence sets, so a subset check
// is pure bit arithmetic on plane masks.
class SubsetIdentities {
 public:
  template <class K>
  explicit SubsetIdentities(const LatticeT<K>& lat)
      : N_(lat.N), nplanes_(lat.planes.size()) {
    if (nplanes_ > 64)
      throw std::invalid_argument("SubsetIdentities: at most 64 planes");
    for (const FlatT<K>& l : lat.codim(2)) line_mask_.push_back(mask_of(l.planes));
    if (N_ == 3) {
      for (const FlatT<K>& p : lat.codim(3)) point_mask_.push_back(mask_of(p.planes));
      points_on_line_.resize(line_mask_.size());
      lines_through_point_.resize(point_mask_.size());
      for (size_t li = 0; li < line_mask_.size(); ++li)
        for (size_t pi = 0; pi < point_mask_.size(); ++pi)
          if ((line_mask_[li] & ~point_mask_[pi]) == 0) {  // planes(l) within planes(p)
            points_on_line_[li].push_back(pi);
            lines_through_point_[pi].push_back(li);
          }
    }
  }

  // subset as a bit mask over the plane indices of the lattice
  bool identities_hold(uint64_t subset) const {
    const int s = std::popcount(subset);
    // pair identity over the surviving codimension-2 flats
    Int weighted = 0;
    std::vector<int> tl(line_mask_.size(), 0);
    for (size_t li = 0; li < line_mask_.size(); ++li) {
      tl[li] = std::popcount(line_mask_[li] & subset);
      if (tl[li] >= 2) weighted += binom(tl[li], 2);
    }
    if (weighted != binom(s, 2)) return false;
    if (N_ != 3) return true;

    // triple identity: surviving points are those whose subset planes do not
    // all share one line
    std::vector<char> live(point_mask_.size(), 0);
    Int point_sum = 0;
    for (size_t pi = 0; pi < point_mask_.size(); ++pi) {
      const uint64_t sp = point_mask_[pi] & subset;
      const int tp = std::popcount(sp);
      if (tp < 3) continue;
      bool planar = false;
      for (size_t li : lines_through_point_[pi])
        if ((sp & ~line_mask_[li]) == 0) {
          planar = true;
          break;
        }
      if (planar) continue;
      live[pi] = 1;
      point_sum += binom(tp, 3);
    }
    Int line_sum = 0;
    for (size_t li = 0; li < line_mask_.size(); ++li) {
      if (tl[li] < 3) continue;
      long pts = 0;
      for (size_t pi : points_on_line_[li]) pts += live[pi];
      line_sum += Int(pts - 1) * binom(tl[li], 3);
    }
    return binom(s, 3) == point_sum - line_sum;
  }

  bool identities_hold(const std::vector<size_t>& subset) const {
    uint64_t m = 0;
    for (size_t i : subset) m |= uint64_t(1) << i;
    return identities_hold(m);
  }

  size_t nplanes() const { return nplanes_; }

 private:
  static uint64_t mask_of(const std::vector<size_t>& planes) {
    uint64_t m = 0;
    for (size_t i : planes) m |= uint64_t(1) << i;
    return m;
  }

  int N_;
  size_t nplanes_;
  std::vector<uint64_t> line_mask_, point_mask_;
  std::vector<std::vector<size_t>> points_on_line_, lines_through_point_;
};

// A line given by two spanning points together with the two forms cutting it
// out and its multiplicity in the ambient plane arrangement.
struct LineParam {
  std::string label;
  std::vector<CycNum> p, q;    // spanning points, length 4
  std::vector<LinForm> forms;  // two independent forms vanishing on the line
  long mult = 0;               // number of arrangement planes through the line
  bool in_restricted = false;  // multiplicity >= 3
};

struct RestrictedConfig {
  long n = 0;
  std::vector<LineParam> all_lines;  // 4n^2 triple lines followed by 6 edges
  std::vector<LineParam> lines;      // the multiplicity >= 3 subset
  bool theorem_applies = false;      // the non-containment statement needs n >= 3
  std::string diagnostic;
};

// The lines of multiplicity >= 3 of the Fermat plane arrangement in P^3.
// The 4n^2 triple lines come in four families, one through each coordinate
// vertex; the six edges of the coordinate tetrahedron carry multiplicity n.
inline RestrictedConfig restricted_config_lines(const CycField& k) {
  const long n = k.n;
  RestrictedConfig rc;
  rc.n = n;
  rc.theorem_applies = (n >= 3);
  if (n < 3)
    rc.diagnostic =
        "multiplicity of the coordinate edges is n < 3, so they drop out of the "
        "restricted configuration and the non-containment statement does not apply";

  auto pt = [&](std::initializer_list<CycNum> cs) { return std::vector<CycNum>(cs); };
  const CycNum c0 = k.zero(), c1 = k.one();
  auto form = [&](int i, int j, long a) {
    std::vector<CycNum> c(4, c0);
    c[i] = c1;
    c[j] = k.neg(k.zeta(a));
    return LinForm{std::move(c)};
  };

  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      const CycNum za = k.zeta(a), zb = k.zeta(b);
      const CycNum ia = k.zeta((n - a) % n), ib = k.zeta((n - b) % n);
      auto tag = [&](int v) {
        return "T" + std::to_string(v) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
      };
      // through (1:0:0:0): z = zeta^a w, y = zeta^b w
      rc.all_lines.push_back(LineParam{tag(1), pt({c0, zb, za, c1}), pt({c1, c0, c0, c0}),
                                       {form(2, 3, a), form(1, 3, b)}, 3, true});
      // through (0:1:0:0): z = zeta^a w, x = zeta^b z
      rc.all_lines.push_back(LineParam{tag(2), pt({zb, c0, c1, ia}), pt({c0, c1, c0, c0}),
                                       {form(2, 3, a), form(0, 2, b)}, 3, true});
      // through (0:0:1:0): x = zeta^a y, y = zeta^b w
      rc.all_lines.push_back(LineParam{tag(3), pt({za, c1, c0, ib}), pt({c0, c0, c1, c0}),
                                       {form(0, 1, a), form(1, 3, b)}, 3, true});
      // through (0:0:0:1): x = zeta^a y, x = zeta^b z
      rc.all_lines.push_back(LineParam{tag(4), pt({c1, ia, ib, c0}), pt({c0, c0, c0, c1}),
                                       {form(0, 1, a), form(0, 2, b)}, 3, true});
    }

  static const char* kVar[] = {"x", "y", "z", "w"};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      // the edge x_i = x_j = 0, spanned by the two complementary vertices
      std::vector<int> rest;
      for (int v = 0; v < 4; ++v)
        if (v != i && v != j) rest.push_back(v);
      std::vector<CycNum> p(4, c0), q(4, c0);
      p[rest[0]] = c1;
      q[rest[1]] = c1;
      std::vector<CycNum> fi(4, c0), fj(4, c0);
      fi[i] = c1;
      fj[j] = c1;
      rc.all_lines.push_back(LineParam{std::string("E{") + kVar[i] + "," + kVar[j] + "}",
                                       std::move(p), std::move(q),
                                       {LinForm{std::move(fi)}, LinForm{std::move(fj)}}, n,
                                       n >= 3});
    }

  for (const LineParam& l : rc.all_lines)
    if (l.in_restricted) rc.lines.push_back(l);
  return rc;
}

}  // namespace ceva
