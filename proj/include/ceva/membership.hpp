#pragma once

// Membership tests for the two ideal-theoretic questions the library answers:
//
//   * symbolic powers   — does a form vanish to order >= m along every flat of
//     a configuration?  Decided by exact jet expansions along each flat.
//   * ordinary powers   — does a form lie in I^r for a given generating set?
//     Decided degree-by-degree with exact linear algebra, by either of two
//     independent strategies whose answers can be cross-checked.
//
// Every verdict is backed by a replayable certificate: a combination that
// reassembles the target exactly, or a linear functional that annihilates the
// whole span while pairing to 1 with the target.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ceva/arrangement.hpp"
#include "ceva/cyclotomic.hpp"
#include "ceva/expvec.hpp"
#include "ceva/fermat.hpp"
#include "ceva/linalg.hpp"
#include "ceva/parallel.hpp"
#include "ceva/poly.hpp"
#include "ceva/rational.hpp"

namespace ceva {

// ---------------------------------------------------------------------------
// Flats given by spanning points
// ---------------------------------------------------------------------------

// A linear flat presented by a spanning set of points (projective
// coordinates).  One point: a point; two points: a line; and so on.
struct FlatSpan {
  std::string label;
  std::vector<std::vector<CycNum>> points;
};

inline FlatSpan flat_of_line(const LineParam& line) {
  return FlatSpan{line.label, {line.p, line.q}};
}

inline FlatSpan flat_of_point(const P2Point& pt) {
  return FlatSpan{pt.label, {pt.coords}};
}

inline std::vector<FlatSpan> flats_of_lines(const std::vector<LineParam>& lines) {
  std::vector<FlatSpan> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(flat_of_line(l));
  return out;
}

inline std::vector<FlatSpan> flats_of_points(const std::vector<P2Point>& pts) {
  std::vector<FlatSpan> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(flat_of_point(p));
  return out;
}

// ---------------------------------------------------------------------------
// Integer cyclotomic arithmetic (jet engine internals)
// ---------------------------------------------------------------------------

namespace jets {

// Element of Z[zeta_n] in the power basis: integer coordinate vector of
// length phi(n).  Multiplication convolves and then folds the overflow
// degrees with the integer reduction rows of t^(phi+j) mod Phi_n, which are
// integral because Phi_n is monic.
using CI = std::vector<Int>;

class CycIntCtx {
 public:
  explicit CycIntCtx(const CycField& k)
      : n_(k.n), tab_(detail::cyc_tables(k.n)) {}

  long phi() const { return tab_->phi; }

  CI zero() const { return CI(static_cast<size_t>(tab_->phi), Int(0)); }

  bool is_zero(const CI& a) const {
    for (const auto& c : a)
      if (c != 0) return false;
    return true;
  }

  CI from_int(const Int& v) const {
    CI r = zero();
    r[0] = v;
    return r;
  }

  // Requires integral coordinates.
  CI from_cyc(const CycNum& a) const {
    if (a.order != n_) throw std::invalid_argument("CycIntCtx: order mismatch");
    CI r(static_cast<size_t>(tab_->phi));
    for (long i = 0; i < tab_->phi; ++i) {
      const Rat& c = a.coords[static_cast<size_t>(i)];
      if (c.get_den() != 1)
        throw std::invalid_argument("CycIntCtx: non-integral coordinate");
      r[static_cast<size_t>(i)] = c.get_num();
    }
    return r;
  }

  CycNum to_cyc(const CI& a) const {
    CycNum r;
    r.order = n_;
    r.coords.reserve(a.size());
    for (const auto& c : a) r.coords.emplace_back(c);
    return r;
  }

  void add_into(CI& a, const CI& b) const {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  }

  void sub_into(CI& a, const CI& b) const {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  }

  void scale_into(CI& a, const Int& c) const {
    for (auto& x : a) x *= c;
  }

  CI mul(const CI& a, const CI& b) const {
    const long p = tab_->phi;
    std::vector<Int> conv(static_cast<size_t>(2 * p - 1), Int(0));
    for (long i = 0; i < p; ++i) {
      if (a[static_cast<size_t>(i)] == 0) continue;
      for (long j = 0; j < p; ++j) {
        if (b[static_cast<size_t>(j)] == 0) continue;
        mpz_addmul(conv[static_cast<size_t>(i + j)].get_mpz_t(),
                   a[static_cast<size_t>(i)].get_mpz_t(),
                   b[static_cast<size_t>(j)].get_mpz_t());
      }
    }
    CI r(conv.begin(), conv.begin() + p);
    for (long k = 0; k < p - 1; ++k) {
      const Int& top = conv[static_cast<size_t>(p + k)];
      if (top == 0) continue;
      const auto& row = tab_->redrow[static_cast<size_t>(k)];
      for (long i = 0; i < p; ++i)
        mpz_addmul(r[static_cast<size_t>(i)].get_mpz_t(), top.get_mpz_t(),
                   row[static_cast<size_t>(i)].get_mpz_t());
    }
    return r;
  }

 private:
  long n_;
  std::shared_ptr<const detail::CycTables> tab_;
};

// Dense homogeneous form in the flat parameters s_1..s_k with CI
// coefficients.  k = 1 stores a single coefficient; k = 2 stores the
// coefficients of s1^d, s1^(d-1) s2, ..., s2^d in order.
using SForm = std::vector<CI>;

inline SForm sform_conv(const CycIntCtx& cx, const SForm& a, const SForm& b) {
  SForm r(a.size() + b.size() - 1, cx.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (cx.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (cx.is_zero(b[j])) continue;
      cx.add_into(r[i + j], cx.mul(a[i], b[j]));
    }
  }
  return r;
}

inline bool sform_is_zero(const CycIntCtx& cx, const SForm& s) {
  for (const auto& c : s)
    if (!cx.is_zero(c)) return false;
  return true;
}

// Truncated expansion of a form along a flat: the substitution
//   x_v -> sum_i s_i P_i[v] + eps_v   (eps_v present only for transverse v)
// expanded and truncated below a cap in the eps-variables.  Keys are
// exponent vectors over the transverse directions; the value of a key E is
// the homogeneous s-form multiplying eps^E.  The order of vanishing along
// the flat is the least |E| with a nonzero s-form.
struct JetSeries {
  long k = 0;         // number of flat parameters s_i
  long cap = 0;       // eps-degrees kept: |E| < cap
  long degree = 0;    // total degree of the expanded form
  std::map<ExpVec, SForm> parts;
};

inline size_t sform_len(long k, long deg) {
  return k == 2 ? static_cast<size_t>(deg + 1) : 1;
}

inline void jet_add_into(const CycIntCtx& cx, JetSeries& a, const JetSeries& b) {
  for (const auto& [key, s] : b.parts) {
    auto it = a.parts.find(key);
    if (it == a.parts.end()) {
      a.parts.emplace(key, s);
    } else {
      for (size_t i = 0; i < s.size(); ++i) cx.add_into(it->second[i], s[i]);
    }
  }
}

inline JetSeries jet_mul(const CycIntCtx& cx, const JetSeries& a, const JetSeries& b) {
  JetSeries r;
  r.k = a.k;
  r.cap = a.cap;
  r.degree = a.degree + b.degree;
  for (const auto& [ka, sa] : a.parts) {
    for (const auto& [kb, sb] : b.parts) {
      long tot = 0;
      ExpVec key(ka.size());
      for (size_t i = 0; i < ka.size(); ++i) {
        key[i] = ka[i] + kb[i];
        tot += key[i];
      }
      if (tot >= r.cap) continue;
      SForm prod = sform_conv(cx, sa, sb);
      auto it = r.parts.find(key);
      if (it == r.parts.end()) {
        r.parts.emplace(std::move(key), std::move(prod));
      } else {
        for (size_t i = 0; i < prod.size(); ++i) cx.add_into(it->second[i], prod[i]);
      }
    }
  }
  return r;
}

// Per-variable data for the substitution: the linear s-form of the variable
// restricted to the flat, and the index of its eps (or -1 when the variable
// is not a transverse direction).
struct VarLine {
  SForm lin;      // degree-1 s-form (length k for k = 2, length 1 for k = 1)
  long eps = -1;  // index into the transverse-direction list
};

struct FlatFrame {
  long k = 0;        // spanning points
  long t = 0;        // transverse directions
  long nvars = 0;
  std::vector<VarLine> vars;
};

// Builds the substitution frame: integerizes the spanning points, checks
// they are independent, and picks the transverse directions as the free
// columns of the point matrix (the coordinate vectors completing the flat to
// the whole space).
inline FlatFrame flat_frame(const CycField& k, const CycIntCtx& cx, const FlatSpan& flat) {
  const long kk = static_cast<long>(flat.points.size());
  if (kk == 0) throw std::invalid_argument("flat has no spanning points");
  const long nv = static_cast<long>(flat.points[0].size());
  for (const auto& p : flat.points)
    if (static_cast<long>(p.size()) != nv)
      throw std::invalid_argument("flat spanning points of unequal length");

  // Integer coordinates: clear denominators per point (projective scaling).
  std::vector<std::vector<CI>> pts;
  for (const auto& p : flat.points) {
    Int den(1);
    for (const auto& c : p)
      for (const auto& q : c.coords) den = lcm_int(den, Int(q.get_den()));
    std::vector<CI> row;
    for (const auto& c : p) {
      CycNum scaled = c;
      for (auto& q : scaled.coords) q *= Rat(den);
      row.push_back(cx.from_cyc(scaled));
    }
    pts.push_back(std::move(row));
  }

  // Independence + transverse directions via RREF over the cyclotomic field.
  Mat<CycField> m(k, static_cast<size_t>(kk), static_cast<size_t>(nv));
  for (long i = 0; i < kk; ++i)
    for (long j = 0; j < nv; ++j)
      m.at(static_cast<size_t>(i), static_cast<size_t>(j)) =
          cx.to_cyc(pts[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  Rref<CycField> r = rref(m);
  if (static_cast<long>(r.rank) != kk)
    throw std::invalid_argument("degenerate flat: spanning points are dependent");

  FlatFrame fr;
  fr.k = kk;
  fr.nvars = nv;
  std::vector<bool> is_pivot(static_cast<size_t>(nv), false);
  for (size_t c : r.pivot_cols) is_pivot[c] = true;
  fr.vars.resize(static_cast<size_t>(nv));
  long eps_count = 0;
  for (long v = 0; v < nv; ++v) {
    VarLine vl;
    vl.lin.assign(sform_len(kk, 1), cx.zero());
    if (kk == 2) {
      vl.lin[0] = pts[0][static_cast<size_t>(v)];
      vl.lin[1] = pts[1][static_cast<size_t>(v)];
    } else {
      vl.lin[0] = pts[0][static_cast<size_t>(v)];
    }
    if (!is_pivot[static_cast<size_t>(v)]) vl.eps = eps_count++;
    fr.vars[static_cast<size_t>(v)] = std::move(vl);
  }
  fr.t = eps_count;
  return fr;
}

// Series for a single variable power x_v^p:
//   (L_v + eps_v)^p = sum_{j < cap} C(p, j) L_v^(p-j) eps_v^j
// with the eps term absent for non-transverse variables.
class VarPowerCache {
 public:
  VarPowerCache(const CycIntCtx& cx, const FlatFrame& fr) : cx_(cx), fr_(fr) {
    pow_.resize(fr.vars.size());
  }

  JetSeries power(long v, long p, long cap) {
    const VarLine& vl = fr_.vars[static_cast<size_t>(v)];
    JetSeries s;
    s.k = fr_.k;
    s.cap = cap;
    s.degree = p;
    const long jmax = vl.eps >= 0 ? std::min(p, cap - 1) : 0;
    for (long j = 0; j <= jmax; ++j) {
      ExpVec key(static_cast<size_t>(fr_.t), 0);
      if (vl.eps >= 0) key[static_cast<size_t>(vl.eps)] = static_cast<int>(j);
      SForm base = lin_power(v, p - j);
      if (j > 0) {
        const Int c = binom(p, j);
        for (auto& ci : base) cx_.scale_into(ci, c);
      }
      s.parts.emplace(std::move(key), std::move(base));
    }
    return s;
  }

 private:
  SForm lin_power(long v, long p) {
    auto& cache = pow_[static_cast<size_t>(v)];
    if (cache.empty()) cache.push_back(SForm{cx_.from_int(Int(1))});  // degree 0
    while (static_cast<long>(cache.size()) <= p)
      cache.push_back(sform_conv(cx_, cache.back(), fr_.vars[static_cast<size_t>(v)].lin));
    return cache[static_cast<size_t>(p)];
  }

  const CycIntCtx& cx_;
  const FlatFrame& fr_;
  std::vector<std::vector<SForm>> pow_;
};

// Expands one polynomial factor into a truncated jet series.  Coefficients
// are integerized by clearing the common denominator; order of vanishing is
// unchanged by the scalar.
inline JetSeries jet_of_poly(const CycIntCtx& cx, const FlatFrame& fr, VarPowerCache& vp,
                             const Poly<RatField>& f, long cap) {
  if (f.is_zero()) throw std::invalid_argument("jet expansion of the zero polynomial");
  if (!f.is_homogeneous()) throw std::invalid_argument("jet expansion needs a homogeneous form");
  if (static_cast<long>(f.ring()->nvars()) != fr.nvars)
    throw std::invalid_argument("variable count does not match flat");
  Int den(1);
  for (const auto& [e, c] : f.terms()) {
    (void)e;
    den = lcm_int(den, Int(c.get_den()));
  }
  JetSeries total;
  total.k = fr.k;
  total.cap = cap;
  total.degree = static_cast<long>(f.degree());
  for (const auto& [e, c] : f.terms()) {
    JetSeries term;
    term.k = fr.k;
    term.cap = cap;
    term.degree = 0;
    term.parts.emplace(ExpVec(static_cast<size_t>(fr.t), 0),
                       SForm{cx.from_int(Int(Rat(c * Rat(den)).get_num()))});
    for (long v = 0; v < fr.nvars; ++v) {
      const int p = e[static_cast<size_t>(v)];
      if (p == 0) continue;
      term = jet_mul(cx, term, vp.power(v, p, cap));
    }
    jet_add_into(cx, total, term);
  }
  return total;
}

}  // namespace jets

// ---------------------------------------------------------------------------
// Vanishing order along a flat
// ---------------------------------------------------------------------------

// Least eps-degree with a nonzero jet coefficient, computed with truncation
// cap `cap`; a return value of `cap` means the order is >= cap.  The fast
// path handles flats spanned by at most two points; larger flats fall back
// to the derivative test.
inline long vanishing_order_upto(const CycField& k, const FactoredPoly& factors,
                                 const FlatSpan& flat, long cap);

namespace detail_membership {

inline long order_from_series(const jets::CycIntCtx& cx, const jets::JetSeries& s) {
  long best = s.cap;
  for (const auto& [key, form] : s.parts) {
    if (jets::sform_is_zero(cx, form)) continue;
    long tot = 0;
    for (int e : key) tot += e;
    best = std::min(best, tot);
  }
  return best;
}

// Derivative-based fallback and independent oracle: order >= m iff every
// partial derivative of order < m restricts to zero on the flat.
inline long vanishing_order_upto_partials(const CycField& k, const Poly<RatField>& f,
                                          const FlatSpan& flat, long cap) {
  if (f.is_zero()) throw std::invalid_argument("vanishing order of the zero polynomial");
  auto cring = make_ring(k, f.ring()->vars);
  // Independence check mirrors the fast path.
  jets::CycIntCtx cx(k);
  (void)jets::flat_frame(k, cx, flat);
  const size_t nv = f.ring()->nvars();
  // All partials of a given total order, by induction on the order.
  std::vector<std::pair<ExpVec, Poly<CycField>>> level;
  level.emplace_back(ExpVec(nv, 0), promote(f, cring));
  for (long m = 0; m < cap; ++m) {
    for (const auto& [alpha, g] : level) {
      (void)alpha;
      if (!substitute_linear(g, flat.points).is_zero()) return m;
    }
    if (m + 1 == cap) break;
    std::vector<std::pair<ExpVec, Poly<CycField>>> next;
    std::map<ExpVec, bool, GrevlexGreater> seen;
    for (const auto& [alpha, g] : level) {
      for (size_t v = 0; v < nv; ++v) {
        ExpVec beta = alpha;
        beta[v] += 1;
        if (seen.emplace(beta, true).second) next.emplace_back(beta, g.derivative(v));
      }
    }
    level = std::move(next);
  }
  return cap;
}

}  // namespace detail_membership

inline long vanishing_order_upto(const CycField& k, const FactoredPoly& factors,
                                 const FlatSpan& flat, long cap) {
  if (cap < 1) throw std::invalid_argument("vanishing order cap must be positive");
  if (factors.empty()) throw std::invalid_argument("vanishing order of an empty product");
  jets::CycIntCtx cx(k);
  jets::FlatFrame fr = jets::flat_frame(k, cx, flat);
  if (fr.k > 2)
    return detail_membership::vanishing_order_upto_partials(k, expand_factored(factors), flat,
                                                            cap);
  jets::VarPowerCache vp(cx, fr);
  jets::JetSeries acc;
  acc.k = fr.k;
  acc.cap = cap;
  acc.degree = 0;
  acc.parts.emplace(ExpVec(static_cast<size_t>(fr.t), 0), jets::SForm{cx.from_int(Int(1))});
  for (const auto& [g, e] : factors) {
    jets::JetSeries gs = jets::jet_of_poly(cx, fr, vp, g, cap);
    for (long i = 0; i < e; ++i) acc = jets::jet_mul(cx, acc, gs);
  }
  return detail_membership::order_from_series(cx, acc);
}

inline long vanishing_order_upto(const CycField& k, const Poly<RatField>& f,
                                 const FlatSpan& flat, long cap) {
  return vanishing_order_upto(k, FactoredPoly{{f, 1}}, flat, cap);
}

inline bool vanishing_order_at_least(const CycField& k, const Poly<RatField>& f,
                                     const FlatSpan& flat, long m) {
  if (m <= 0) return true;
  return vanishing_order_upto(k, f, flat, m) >= m;
}

inline bool vanishing_order_at_least(const CycField& k, const FactoredPoly& factors,
                                     const FlatSpan& flat, long m) {
  if (m <= 0) return true;
  return vanishing_order_upto(k, factors, flat, m) >= m;
}

// Independent route to the same predicate, via partial derivatives restricted
// to the flat.  Used to cross-check the jet engine.
inline bool vanishing_order_at_least_partials(const CycField& k, const Poly<RatField>& f,
                                              const FlatSpan& flat, long m) {
  if (m <= 0) return true;
  return detail_membership::vanishing_order_upto_partials(k, f, flat, m) >= m;
}

// ---------------------------------------------------------------------------
// Symbolic-power membership
// ---------------------------------------------------------------------------

struct SymbolicCheck {
  bool member = false;
  long m = 0;
  size_t flats_checked = 0;
  std::vector<long> orders;   // per flat, capped at m (m means ">= m")
  std::string first_failure;  // label of the first flat below order m
};

// f in I^(m) for the ideal of the given flats: order >= m along every flat.
inline SymbolicCheck symbolic_power_member(const CycField& k, const FactoredPoly& factors,
                                           const std::vector<FlatSpan>& flats, long m) {
  if (flats.empty()) throw std::invalid_argument("symbolic membership: empty flat list");
  if (m < 1) throw std::invalid_argument("symbolic membership: m must be >= 1");
  SymbolicCheck res;
  res.m = m;
  res.flats_checked = flats.size();
  res.orders = parallel_map<long>(flats.size(), [&](size_t i) {
    return vanishing_order_upto(k, factors, flats[i], m);
  });
  res.member = true;
  for (size_t i = 0; i < flats.size(); ++i) {
    if (res.orders[i] < m) {
      res.member = false;
      res.first_failure = flats[i].label;
      break;
    }
  }
  return res;
}

inline SymbolicCheck symbolic_power_member(const CycField& k, const Poly<RatField>& f,
                                           const std::vector<FlatSpan>& flats, long m) {
  return symbolic_power_member(k, FactoredPoly{{f, 1}}, flats, m);
}

// ---------------------------------------------------------------------------
// Graded pieces of the vanishing ideal
// ---------------------------------------------------------------------------

namespace detail_membership {

// Coefficients of m(x) restricted to the flat as a dense homogeneous form in
// the flat parameters, one CI per parameter monomial (k <= 2).
inline jets::SForm restrict_monomial(const jets::CycIntCtx& cx, jets::VarPowerCache& vp,
                                     const jets::FlatFrame& fr, const ExpVec& e) {
  jets::SForm acc{cx.from_int(Int(1))};
  for (long v = 0; v < fr.nvars; ++v) {
    const int p = e[static_cast<size_t>(v)];
    if (p == 0) continue;
    // cap 1: no eps terms, pure restriction
    jets::JetSeries s = vp.power(v, p, 1);
    acc = jets::sform_conv(cx, acc, s.parts.begin()->second);
  }
  return acc;
}

struct ClassPiece {
  long class_id = 0;
  std::vector<ExpVec> monomials;            // grevlex order
  std::vector<std::vector<Rat>> basis;      // kernel vectors over monomials
};

// Kernel of the vanishing conditions at the flats, restricted to the degree-d
// monomials of one residue class.  Conditions: for each flat, each parameter
// monomial, each power-basis coordinate of the resulting cyclotomic number.
inline ClassPiece graded_piece_class(const CycField& k, const std::vector<FlatSpan>& flats,
                                     long class_id, std::vector<ExpVec> monomials) {
  ClassPiece out;
  out.class_id = class_id;
  out.monomials = std::move(monomials);
  const size_t ncols = out.monomials.size();
  if (ncols == 0) return out;

  jets::CycIntCtx cx(k);
  const long phi = cx.phi();
  RatField Q;
  IncrementalRref<RatField> inc(Q, ncols);
  for (const auto& flat : flats) {
    if (inc.rank() == ncols) break;
    jets::FlatFrame fr = jets::flat_frame(k, cx, flat);
    if (fr.k > 2)
      throw std::invalid_argument("graded piece: flats spanned by more than two points");
    jets::VarPowerCache vp(cx, fr);
    std::vector<jets::SForm> restr(ncols);
    for (size_t j = 0; j < ncols; ++j) restr[j] = restrict_monomial(cx, vp, fr, out.monomials[j]);
    const size_t slen = restr[0].size();
    for (size_t si = 0; si < slen && inc.rank() < ncols; ++si) {
      for (long c = 0; c < phi && inc.rank() < ncols; ++c) {
        std::vector<Rat> row(ncols);
        bool nonzero = false;
        for (size_t j = 0; j < ncols; ++j) {
          const Int& v = restr[j][si][static_cast<size_t>(c)];
          row[j] = Rat(v);
          if (v != 0) nonzero = true;
        }
        if (nonzero) inc.add_row(std::move(row));
      }
    }
  }
  out.basis = inc.kernel();
  return out;
}

inline std::map<long, std::vector<ExpVec>> monomials_by_class(size_t nvars, long d, long n) {
  std::map<long, std::vector<ExpVec>> buckets;
  for (auto& e : monomials_of_degree(static_cast<int>(nvars), static_cast<int>(d)))
    buckets[residue_class_id(e, n)].push_back(std::move(e));
  return buckets;
}

}  // namespace detail_membership

// Basis of the degree-d piece of the ideal of forms vanishing on all the
// flats, computed from the vanishing conditions alone (no generating set
// involved).  Deterministic order: residue classes ascending, then kernel
// vectors in free-column order.
inline std::vector<Poly<RatField>> graded_piece_of_vanishing_ideal(
    const CycField& k, const RingPtr<RatField>& ring, const std::vector<FlatSpan>& flats,
    long d) {
  if (flats.empty()) throw std::invalid_argument("graded piece: empty flat list");
  if (d < 0) throw std::invalid_argument("graded piece: negative degree");
  std::vector<Poly<RatField>> out;
  if (d == 0) return out;  // nonzero constants never vanish on a nonempty flat
  auto buckets = detail_membership::monomials_by_class(ring->nvars(), d, k.n);
  std::vector<long> ids;
  for (const auto& [id, mons] : buckets) {
    (void)mons;
    ids.push_back(id);
  }
  auto pieces = parallel_map<detail_membership::ClassPiece>(ids.size(), [&](size_t i) {
    return detail_membership::graded_piece_class(k, flats, ids[i], buckets.at(ids[i]));
  });
  for (const auto& piece : pieces) {
    for (const auto& vec : piece.basis) {
      Poly<RatField> p = Poly<RatField>::zero(ring);
      for (size_t j = 0; j < piece.monomials.size(); ++j)
        if (vec[j] != 0) p.add_term(piece.monomials[j], vec[j]);
      out.push_back(std::move(p));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ordinary-power membership
// ---------------------------------------------------------------------------

enum class PowerStrategy { GeneratorProducts, DegreewiseOracle };

inline std::string strategy_name(PowerStrategy s) {
  return s == PowerStrategy::GeneratorProducts ? "generator-products" : "degreewise-oracle";
}

// One configuration the power questions run against: a generating set for
// the generator-products route and the flats for the oracle route, over a
// common ring.
struct IdealContext {
  long n = 1;
  RingPtr<RatField> ring;
  CycField cyc{1};
  std::vector<Poly<RatField>> gens;
  std::vector<FlatSpan> flats;
  bool theorem_applies = true;
  std::string diagnostic;
};

inline IdealContext p3_context(long n) {
  IdealContext ctx;
  ctx.n = n;
  ctx.cyc = CycField(n);
  ctx.ring = make_ring(RatField{}, proj_vars(3));
  ctx.gens = restricted_ideal_generators(ctx.ring, n).gens;
  RestrictedConfig rc = restricted_config_lines(ctx.cyc);
  ctx.flats = flats_of_lines(rc.lines);
  ctx.theorem_applies = rc.theorem_applies;
  ctx.diagnostic = rc.diagnostic;
  return ctx;
}

inline IdealContext p2_context(long n) {
  IdealContext ctx;
  ctx.n = n;
  ctx.cyc = CycField(n);
  ctx.ring = make_ring(RatField{}, proj_vars(2));
  ctx.gens = p2_fermat_ideal(ctx.ring, n).gens;
  ctx.flats = flats_of_points(p2_fermat_points(ctx.cyc));
  return ctx;
}

// A member certificate term: coeff * multiplier * product of generators
// (generator-products route), or coeff * product of explicit factor
// polynomials (oracle route).
struct ComboTerm {
  std::vector<int> gen_indices;            // generator-products route
  ExpVec multiplier;                       // generator-products route
  std::vector<Poly<RatField>> factors;     // oracle route
  Rat coeff;
};

struct MembershipResult {
  bool member = false;
  PowerStrategy strategy = PowerStrategy::GeneratorProducts;
  long n = 1;
  long r = 1;
  long degree = 0;  // degree of the target form
  std::vector<ComboTerm> combo;                    // when member
  std::vector<std::pair<ExpVec, Rat>> functional;  // when not; grevlex order
  size_t span_rank = 0;
  size_t columns = 0;
  size_t rows_total = 0;
  bool vacuous = false;
  std::string diagnostic;
};

namespace detail_membership {

// Column of the power span: a polynomial plus enough provenance to rebuild
// the certificate term.
struct SpanColumn {
  Poly<RatField> poly;
  ComboTerm origin;  // coeff unset
};

inline long class_of_poly(const Poly<RatField>& p, long n) {
  long cls = -1;
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    const long ce = residue_class_id(e, n);
    if (cls == -1)
      cls = ce;
    else if (cls != ce)
      return -1;  // not class-homogeneous
  }
  return cls;
}

// Nondecreasing index multisets of size r over [0, count).
inline std::vector<std::vector<int>> index_multisets(int count, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < count; ++i) {
      cur.push_back(i);
      self(self, i, left - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, r);
  return out;
}

// Columns of (I^r)_D for the generator-products route: multiplier monomials
// times r-fold generator products.
inline std::vector<SpanColumn> generator_product_columns(const IdealContext& ctx, long r,
                                                         long D) {
  std::vector<SpanColumn> cols;
  const auto multisets = index_multisets(static_cast<int>(ctx.gens.size()), static_cast<int>(r));
  for (const auto& ms : multisets) {
    Poly<RatField> prod = Poly<RatField>::constant(ctx.ring, Rat(1));
    long dsum = 0;
    for (int i : ms) {
      prod = prod * ctx.gens[static_cast<size_t>(i)];
      dsum += ctx.gens[static_cast<size_t>(i)].degree();
    }
    const long delta = D - dsum;
    if (delta < 0) continue;
    for (auto& m : monomials_of_degree(ctx.ring->nvars(), static_cast<int>(delta))) {
      SpanColumn col;
      col.poly = prod.times_monomial(m, Rat(1));
      col.origin.gen_indices = ms;
      col.origin.multiplier = m;
      cols.push_back(std::move(col));
    }
  }
  return cols;
}

// Columns of (I^r)_D for the oracle route: products over nondecreasing
// degree splits d_1 <= ... <= d_r summing to D, with one basis element of
// the degreewise vanishing ideal per slot.  Uses only the flats.
inline std::vector<SpanColumn> oracle_columns(const IdealContext& ctx, long r, long D) {
  // Degreewise bases, computed once per needed degree.
  std::map<long, std::vector<Poly<RatField>>> piece;
  auto piece_of = [&](long d) -> const std::vector<Poly<RatField>>& {
    auto it = piece.find(d);
    if (it == piece.end())
      it = piece.emplace(d, graded_piece_of_vanishing_ideal(ctx.cyc, ctx.ring, ctx.flats, d))
               .first;
    return it->second;
  };

  std::vector<SpanColumn> cols;
  std::vector<long> split;
  auto rec = [&](auto&& self, long start, long left, long slots) -> void {
    if (slots == 0) {
      if (left != 0) return;
      // product of one basis element per slot
      std::vector<size_t> pick(split.size(), 0);
      auto emit = [&](auto&& inner, size_t slot) -> void {
        if (slot == split.size()) {
          SpanColumn col;
          col.poly = Poly<RatField>::constant(ctx.ring, Rat(1));
          for (size_t s = 0; s < split.size(); ++s) {
            const auto& b = piece_of(split[s])[pick[s]];
            col.poly = col.poly * b;
            col.origin.factors.push_back(b);
          }
          cols.push_back(std::move(col));
          return;
        }
        const auto& basis = piece_of(split[slot]);
        size_t lo = 0;
        // avoid duplicate unordered picks within equal degrees
        if (slot > 0 && split[slot] == split[slot - 1]) lo = pick[slot - 1];
        for (size_t i = lo; i < basis.size(); ++i) {
          pick[slot] = i;
          inner(inner, slot + 1);
        }
      };
      emit(emit, 0);
      return;
    }
    for (long d = start; d * slots <= left; ++d) {
      if (piece_of(d).empty()) continue;
      split.push_back(d);
      self(self, d, left - d, slots - 1);
      split.pop_back();
    }
  };
  rec(rec, 1, D, r);
  return cols;
}

struct ClassBlockResult {
  size_t rank = 0;
  size_t rows = 0;
  bool has_target = false;
  SpanCertificate<RatField> cert;
  std::vector<ExpVec> row_monomials;
  std::vector<size_t> col_ids;  // global column indices, in block order
};

}  // namespace detail_membership

// Decides f in I^r degree-by-degree with exact linear algebra.  The span of
// (I^r)_deg(f) splits into independent blocks along the residue classes of
// the exponent vectors; the verdict combines the per-class subproblems that
// meet the support of f, and span_rank sums the ranks of all blocks.
inline MembershipResult power_membership(const IdealContext& ctx, const Poly<RatField>& f,
                                         long r, PowerStrategy strategy) {
  if (f.is_zero()) throw std::invalid_argument("power membership: zero target");
  if (!f.is_homogeneous())
    throw std::invalid_argument("power membership: target must be homogeneous");
  if (r < 1) throw std::invalid_argument("power membership: r must be >= 1");
  if (!(*f.ring() == *ctx.ring))
    throw std::invalid_argument("power membership: target ring mismatch");

  MembershipResult res;
  res.strategy = strategy;
  res.n = ctx.n;
  res.r = r;
  res.degree = f.degree();
  if (!ctx.theorem_applies && !ctx.diagnostic.empty()) res.diagnostic = ctx.diagnostic;

  const long D = res.degree;
  std::vector<detail_membership::SpanColumn> cols =
      strategy == PowerStrategy::GeneratorProducts
          ? detail_membership::generator_product_columns(ctx, r, D)
          : detail_membership::oracle_columns(ctx, r, D);
  res.columns = cols.size();

  if (cols.empty()) {
    res.member = false;
    res.vacuous = true;
    res.diagnostic = (res.diagnostic.empty() ? std::string() : res.diagnostic + "; ") +
                     "no degree-" + std::to_string(D) +
                     " elements in the power: non-membership is vacuous at this degree";
    return res;
  }

  const long n = ctx.n;
  // Class-homogeneity of every column enables the block split; fall back to
  // a single block otherwise.
  bool blocked = true;
  std::vector<long> col_class(cols.size());
  for (size_t i = 0; i < cols.size(); ++i) {
    col_class[i] = detail_membership::class_of_poly(cols[i].poly, n);
    if (col_class[i] < 0) blocked = false;
  }

  auto buckets = detail_membership::monomials_by_class(ctx.ring->nvars(), D, blocked ? n : 1);
  if (!blocked)
    for (auto& c : col_class) c = 0;

  // Group columns per class.
  std::map<long, std::vector<size_t>> cols_by_class;
  for (size_t i = 0; i < cols.size(); ++i) cols_by_class[col_class[i]].push_back(i);

  // Target split by class.
  std::map<long, std::map<ExpVec, Rat, GrevlexGreater>> target_by_class;
  for (const auto& [e, c] : f.terms())
    target_by_class[blocked ? residue_class_id(e, n) : 0][e] = c;

  std::vector<long> class_ids;
  for (const auto& [id, mons] : buckets) {
    (void)mons;
    class_ids.push_back(id);
  }

  RatField Q;
  auto block_results = parallel_map<detail_membership::ClassBlockResult>(
      class_ids.size(), [&](size_t bi) {
        const long id = class_ids[bi];
        detail_membership::ClassBlockResult out;
        const auto& mons = buckets.at(id);
        out.row_monomials = mons;
        out.rows = mons.size();
        std::map<ExpVec, size_t, GrevlexGreater> row_of;
        for (size_t i = 0; i < mons.size(); ++i) row_of.emplace(mons[i], i);
        auto cit = cols_by_class.find(id);
        const std::vector<size_t> empty_ids;
        const auto& ids = cit == cols_by_class.end() ? empty_ids : cit->second;
        out.col_ids = ids;
        Mat<RatField> A(Q, mons.size(), ids.size());
        for (size_t j = 0; j < ids.size(); ++j)
          for (const auto& [e, c] : cols[ids[j]].poly.terms()) A.at(row_of.at(e), j) = c;
        auto tit = target_by_class.find(id);
        if (tit == target_by_class.end()) {
          out.rank = ids.empty() ? 0 : rref(A).rank;
          return out;
        }
        out.has_target = true;
        std::vector<Rat> t(mons.size(), Rat(0));
        for (const auto& [e, c] : tit->second) t[row_of.at(e)] = c;
        auto [cert, rank] = in_span_with_rank(A, t);
        out.cert = std::move(cert);
        out.rank = rank;
        return out;
      });

  res.member = true;
  res.span_rank = 0;
  res.rows_total = 0;
  for (size_t bi = 0; bi < class_ids.size(); ++bi) {
    const auto& b = block_results[bi];
    res.span_rank += b.rank;
    res.rows_total += b.rows;
  }
  for (size_t bi = 0; bi < class_ids.size(); ++bi) {
    const auto& b = block_results[bi];
    if (!b.has_target) continue;
    if (b.cert.member) {
      for (size_t j = 0; j < b.col_ids.size(); ++j) {
        if (b.cert.combo[j] == 0) continue;
        ComboTerm term = cols[b.col_ids[j]].origin;
        term.coeff = b.cert.combo[j];
        res.combo.push_back(std::move(term));
      }
    } else if (res.member) {
      // first failing class provides the functional
      res.member = false;
      res.combo.clear();
      for (size_t i = 0; i < b.row_monomials.size(); ++i)
        if (b.cert.functional[i] != 0)
          res.functional.emplace_back(b.row_monomials[i], b.cert.functional[i]);
    }
  }
  if (!res.member) res.combo.clear();
  return res;
}

// Replays a certificate against the definition, without trusting the class
// decomposition: a member combo must reassemble f exactly; a non-member
// functional must annihilate every column of the span and pair to 1 with f.
inline bool verify_membership_certificate(const IdealContext& ctx, const Poly<RatField>& f,
                                          const MembershipResult& res) {
  if (res.vacuous) return !res.member && res.columns == 0;
  if (res.member) {
    Poly<RatField> sum = Poly<RatField>::zero(ctx.ring);
    for (const auto& term : res.combo) {
      Poly<RatField> p = Poly<RatField>::constant(ctx.ring, term.coeff);
      if (!term.factors.empty()) {
        for (const auto& g : term.factors) p = p * g;
      } else {
        for (int i : term.gen_indices) {
          if (i < 0 || static_cast<size_t>(i) >= ctx.gens.size()) return false;
          p = p * ctx.gens[static_cast<size_t>(i)];
        }
        p = p.times_monomial(term.multiplier, Rat(1));
      }
      sum = sum + p;
    }
    return sum == f;
  }
  // Non-member: rebuild the full column list for the strategy and pair.
  auto pair_with = [&](const Poly<RatField>& p) {
    Rat acc(0);
    for (const auto& [e, c] : res.functional) acc += c * p.coefficient_of(e);
    return acc;
  };
  if (res.functional.empty()) return false;
  std::vector<detail_membership::SpanColumn> cols =
      res.strategy == PowerStrategy::GeneratorProducts
          ? detail_membership::generator_product_columns(ctx, res.r, res.degree)
          : detail_membership::oracle_columns(ctx, res.r, res.degree);
  for (const auto& col : cols)
    if (pair_with(col.poly) != 0) return false;
  return pair_with(f) == 1;
}

}  // namespace ceva
