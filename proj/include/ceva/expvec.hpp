#pragma once

// Exponent vectors and the graded reverse lexicographic order with
// x0 > x1 > ... > xN.  Grevlex is the canonical term order throughout:
// it fixes printing, hashing and the row/column indexing of membership
// matrices.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace ceva {

using ExpVec = std::vector<int>;

inline int total_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

// +1 if a comes before b (a "larger"), -1 if after, 0 if equal.
inline int grevlex_cmp(const ExpVec& a, const ExpVec& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

struct GrevlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return grevlex_cmp(a, b) > 0; }
};

// All exponent vectors of total degree d in nvars variables, sorted in
// descending grevlex order.
inline std::vector<ExpVec> monomials_of_degree(int nvars, int d) {
  std::vector<ExpVec> out;
  ExpVec cur(nvars, 0);
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      cur[var] = rem;
      out.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, rem - e);
    }
    cur[var] = 0;
  };
  if (nvars > 0 && d >= 0) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

// Residue class of an exponent vector modulo n, encoded as a single id.
// Exponents in the same class differ by multiples of n in each variable;
// all constructions here are stable under that grading, which is what
// makes the large membership systems block-diagonal.
inline long residue_class_id(const ExpVec& e, long n) {
  long id = 0;
  for (int v : e) id = id * n + (v % n);
  return id;
}

inline ExpVec residue_of(const ExpVec& e, long n) {
  ExpVec r(e.size());
  for (size_t i = 0; i < e.size(); ++i) r[i] = e[i] % static_cast<int>(n);
  return r;
}

inline ExpVec expvec_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// componentwise a <= b
inline bool expvec_divides(const ExpVec& a, const ExpVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExpVec expvec_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace ceva
