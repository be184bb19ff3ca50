#pragma once

// Sparse multivariate polynomials over a generic exact coefficient field.
// Terms are kept in a grevlex-ordered map (leading term first) with no
// stored zero coefficients, so equal polynomials compare equal structurally.

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "ceva/cyclotomic.hpp"
#include "ceva/expvec.hpp"
#include "ceva/rational.hpp"

namespace ceva {

template <class F>
struct Ring {
  F field;
  std::vector<std::string> vars;

  size_t nvars() const { return vars.size(); }
  bool operator==(const Ring& o) const { return field == o.field && vars == o.vars; }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars) {
  return std::make_shared<const Ring<F>>(Ring<F>{std::move(field), std::move(vars)});
}

// Coordinates on P^N: x,y,z,w for N <= 3, x0..xN beyond.
inline std::vector<std::string> proj_vars(int N) {
  static const char* kNames[] = {"x", "y", "z", "w"};
  std::vector<std::string> vars;
  for (int i = 0; i <= N; ++i)
    vars.push_back(N <= 3 ? kNames[i] : "x" + std::to_string(i));
  return vars;
}

template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;
  using TermMap = std::map<ExpVec, Elem, GrevlexGreater>;

  Poly() = default;
  explicit Poly(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr<F> ring) { return Poly(std::move(ring)); }

  static Poly constant(RingPtr<F> ring, const Elem& c) {
    Poly p(ring);
    if (!ring->field.is_zero(c)) p.terms_.emplace(ExpVec(ring->nvars(), 0), c);
    return p;
  }

  static Poly variable(RingPtr<F> ring, int idx, int exp = 1) {
    ExpVec e(ring->nvars(), 0);
    e.at(idx) = exp;
    return monomial(std::move(ring), e, ring ? ring->field.one() : Elem{});
  }

  static Poly monomial(RingPtr<F> ring, ExpVec e, const Elem& c) {
    Poly p(ring);
    if (!ring->field.is_zero(c)) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // -1 for the zero polynomial
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  Elem coefficient_of(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ring_->field.zero() : it->second;
  }

  void add_term(const ExpVec& e, const Elem& c) {
    const F& k = ring_->field;
    if (k.is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = k.add(it->second, c);
      if (k.is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly operator+(const Poly& o) const {
    check_ring(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    check_ring(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, ring_->field.neg(c));
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = ring_->field.neg(c);
    return r;
  }
  Poly operator*(const Poly& o) const {
    check_ring(o);
    Poly r(ring_);
    const F& k = ring_->field;
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) r.add_term(expvec_add(ea, eb), k.mul(ca, cb));
    return r;
  }
  bool operator==(const Poly& o) const {
    if (!(*ring_ == *o.ring_) || terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
      if (it->first != jt->first || !ring_->field.eq(it->second, jt->second)) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const Elem& c) const {
    Poly r(ring_);
    const F& k = ring_->field;
    for (const auto& [e, v] : terms_) r.add_term(e, k.mul(v, c));
    return r;
  }

  Poly times_monomial(const ExpVec& m, const Elem& c) const {
    Poly r(ring_);
    const F& k = ring_->field;
    for (const auto& [e, v] : terms_) r.add_term(expvec_add(e, m), k.mul(v, c));
    return r;
  }

  Poly pow(long e) const {
    if (e < 0) throw std::invalid_argument("poly: negative power");
    Poly r = constant(ring_, ring_->field.one());
    Poly base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      if (e >>= 1) base = base * base;
    }
    return r;
  }

  Poly derivative(int var) const {
    if (var < 0 || var >= static_cast<int>(ring_->nvars()))
      throw std::invalid_argument("derivative: variable index out of range");
    Poly r(ring_);
    const F& k = ring_->field;
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      ExpVec d = e;
      d[var] -= 1;
      r.add_term(d, k.mul(c, k.from_int(e[var])));
    }
    return r;
  }

  // image modulo the ideal (x_var): every term containing x_var is dropped
  Poly set_var_zero(int var) const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_)
      if (e[var] == 0) r.terms_.emplace(e, c);
    return r;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (point.size() != ring_->nvars())
      throw std::invalid_argument("evaluate: wrong number of coordinates");
    const F& k = ring_->field;
    Elem acc = k.zero();
    for (const auto& [e, c] : terms_) {
      Elem t = c;
      for (size_t v = 0; v < point.size(); ++v)
        for (int i = 0; i < e[v]; ++i) t = k.mul(t, point[v]);
      acc = k.add(acc, t);
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    const F& k = ring_->field;
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono = monomial_str(e);
      std::string cs = k.str(c);
      bool needs_paren = cs.find(" + ") != std::string::npos;
      std::string body;
      if (mono.empty()) {
        body = needs_paren ? "(" + cs + ")" : cs;
      } else if (!needs_paren && cs == "1") {
        body = mono;
      } else if (!needs_paren && cs == "-1") {
        body = "-" + mono;
      } else {
        body = (needs_paren ? "(" + cs + ")" : cs) + "*" + mono;
      }
      if (first) {
        out = body;
        first = false;
      } else if (!body.empty() && body[0] == '-') {
        out += " - " + body.substr(1);
      } else {
        out += " + " + body;
      }
    }
    return out;
  }

 private:
  void check_ring(const Poly& o) const {
    if (!(*ring_ == *o.ring_)) throw std::invalid_argument("poly: ring mismatch");
  }

  std::string monomial_str(const ExpVec& e) const {
    std::string out;
    for (size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!out.empty()) out += "*";
      out += ring_->vars[v];
      if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
    return out;
  }

  RingPtr<F> ring_;
  TermMap terms_;
};

/// Map a polynomial into another coefficient field via fn : Elem -> Elem2.
template <class F2, class F, class Fn>
Poly<F2> map_poly(const Poly<F>& p, const RingPtr<F2>& ring2, Fn&& fn) {
  Poly<F2> r(ring2);
  for (const auto& [e, c] : p.terms()) r.add_term(e, fn(c));
  return r;
}

inline Poly<CycField> promote(const Poly<RatField>& p, const RingPtr<CycField>& ring2) {
  return map_poly(p, ring2, [&](const Rat& c) { return ring2->field.from_rat(c); });
}

// p evaluated at s1*P1 + ... + sk*Pk, expanded in the parameter ring Q[s1..sk]
// (coefficients stay in the field of the points).
template <class F>
Poly<F> substitute_linear(const Poly<F>& p,
                          const std::vector<std::vector<typename F::Elem>>& points) {
  const F& k = p.ring()->field;
  size_t nv = p.ring()->nvars();
  size_t np = points.size();
  if (np < 1) throw std::invalid_argument("substitute_linear: need at least one point");
  for (const auto& pt : points)
    if (pt.size() != nv) throw std::invalid_argument("substitute_linear: bad point length");

  std::vector<std::string> svars;
  for (size_t i = 1; i <= np; ++i) svars.push_back("s" + std::to_string(i));
  auto sring = make_ring(k, svars);

  // linear image of each original variable
  std::vector<Poly<F>> lin;
  for (size_t v = 0; v < nv; ++v) {
    Poly<F> l(sring);
    for (size_t i = 0; i < np; ++i) {
      ExpVec e(np, 0);
      e[i] = 1;
      l.add_term(e, points[i][v]);
    }
    lin.push_back(std::move(l));
  }

  // power cache per variable
  int dmax = std::max(p.degree(), 0);
  std::vector<std::vector<Poly<F>>> pw(nv);
  for (size_t v = 0; v < nv; ++v) {
    pw[v].push_back(Poly<F>::constant(sring, k.one()));
    for (int e = 1; e <= dmax; ++e) pw[v].push_back(pw[v].back() * lin[v]);
  }

  Poly<F> out(sring);
  for (const auto& [e, c] : p.terms()) {
    Poly<F> t = Poly<F>::constant(sring, c);
    for (size_t v = 0; v < nv; ++v)
      if (e[v] > 0) t = t * pw[v][e[v]];
    out = out + t;
  }
  return out;
}

}  // namespace ceva
