#pragma once

// Report emission: every subcommand's result rendered as JSON (schema "v1")
// or CSV with fully deterministic bytes.  All numeric payloads that are not
// machine integers are serialized as exact decimal strings ("p/q" rationals,
// "c0 + c1*z + ..." cyclotomic numbers), never as floating point.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ceva/arrangement.hpp"
#include "ceva/certify.hpp"
#include "ceva/cyclotomic.hpp"
#include "ceva/fermat.hpp"
#include "ceva/membership.hpp"
#include "ceva/poly.hpp"
#include "ceva/rational.hpp"

namespace ceva {

using Json = nlohmann::ordered_json;

inline Json json_expvec(const ExpVec& e) {
  Json a = Json::array();
  for (int v : e) a.push_back(v);
  return a;
}

inline Json json_poly(const Poly<RatField>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json{{"monomial", json_expvec(e)}, {"coeff", rat_str(c)}});
  return terms;
}

inline Json json_point(const CycField& k, const std::vector<CycNum>& pt) {
  Json a = Json::array();
  for (const auto& c : pt) a.push_back(k.str(c));
  return a;
}

// ---------------------------------------------------------------------------
// Expected invariant tables
// ---------------------------------------------------------------------------

// The generic multiplicity tables for the full arrangements, with coincidence
// merges applied by construction (equal multiplicities pool their counts).
// Only defined for n >= 2; the n = 1 lattice degenerates beyond merging.
struct ExpectedCensus {
  bool asserted = false;                         // false for n = 1
  std::map<size_t, size_t> lines;                // N = 3 only
  std::map<size_t, size_t> points;
  std::string merges;                            // human-readable merge notes
};

inline ExpectedCensus expected_fermat_census(int N, long n) {
  ExpectedCensus e;
  if (n < 2) return e;
  e.asserted = true;
  const size_t un = static_cast<size_t>(n);
  std::ostringstream merges;
  if (N == 3) {
    e.lines[2] += 3 * un * un;
    e.lines[3] += 4 * un * un;
    e.lines[un] += 6;
    e.points[6] += un * un * un;
    e.points[un + 1] += 6 * un;
    e.points[3 * un] += 4;
    if (n == 2) merges << "the 6 n-fold edges merge into the double lines; ";
    if (n == 3) merges << "the 6 n-fold edges merge into the triple lines; ";
    if (n == 5) merges << "the 6n (n+1)-fold points merge into the six-fold points; ";
    if (n == 2) merges << "the 4 3n-fold vertex points merge into the six-fold points; ";
  } else if (N == 2) {
    e.points[3] += un * un;
    e.points[un] += 3;
    if (n == 3) merges << "the 3 n-fold coordinate points merge into the triple points; ";
  } else {
    e.asserted = false;
  }
  e.merges = merges.str();
  return e;
}

// ---------------------------------------------------------------------------
// Census reports
// ---------------------------------------------------------------------------

struct CensusReport {
  int N = 3;
  long n = 1;
  std::string mode = "cyclotomic";
  std::uint64_t prime = 0;
  size_t planes = 0;
  Census counts;
  std::vector<IncidenceRow> incidences;  // N = 3 only
  ExpectedCensus expected;
  bool matches_expected = true;  // vacuously true when not asserted
};

inline std::string census_csv(const CensusReport& r) {
  std::ostringstream os;
  os << "dimension,multiplicity,count\n";
  for (int c = 2; c <= r.N; ++c)
    for (const auto& [mult, count] : r.counts.codim(static_cast<size_t>(c)))
      os << (r.N - c) << "," << mult << "," << count << "\n";
  os << "\n";
  os << "p,q,incidences\n";
  for (const auto& row : r.incidences)
    os << row.p << "," << row.q << "," << row.incidences << "\n";
  return os.str();
}

inline Json census_json(const CensusReport& r) {
  Json j;
  j["schema"] = "v1";
  j["subcommand"] = "census";
  j["N"] = r.N;
  j["n"] = r.n;
  j["mode"] = r.mode;
  if (r.mode == "prime") j["prime"] = r.prime;
  j["planes"] = r.planes;
  Json flats = Json::array();
  for (int c = 2; c <= r.N; ++c)
    for (const auto& [mult, count] : r.counts.codim(static_cast<size_t>(c)))
      flats.push_back(Json{{"dimension", r.N - c}, {"multiplicity", mult}, {"count", count}});
  Json inc = Json::array();
  for (const auto& row : r.incidences)
    inc.push_back(Json{{"p", row.p}, {"q", row.q}, {"incidences", row.incidences}});
  j["tables"] = Json{{"flats", flats}, {"incidences", inc}};
  Json exp;
  exp["asserted"] = r.expected.asserted;
  if (r.expected.asserted) {
    if (r.N == 3) {
      Json lines = Json::array();
      for (const auto& [mult, count] : r.expected.lines)
        lines.push_back(Json{{"multiplicity", mult}, {"count", count}});
      exp["lines"] = lines;
    }
    Json points = Json::array();
    for (const auto& [mult, count] : r.expected.points)
      points.push_back(Json{{"multiplicity", mult}, {"count", count}});
    exp["points"] = points;
    exp["merges"] = r.expected.merges;
    exp["matches"] = r.matches_expected;
  } else {
    exp["note"] = "generic tables are not asserted for n = 1 (degenerate lattice)";
  }
  j["expected"] = exp;
  return j;
}

// ---------------------------------------------------------------------------
// Identity reports
// ---------------------------------------------------------------------------

struct IdentitiesReport {
  int N = 3;
  long n = 1;
  std::string mode = "cyclotomic";
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  size_t random_subsets = 0;
  PairIdentity full_pair;
  HuntIdentity full_triple;  // N = 3 only
  bool has_triple = false;
  size_t random_checked = 0;
  size_t random_failures = 0;
  bool all_pass = false;
};

inline Json identities_json(const IdentitiesReport& r) {
  Json j;
  j["schema"] = "v1";
  j["subcommand"] = "identities";
  j["N"] = r.N;
  j["n"] = r.n;
  j["mode"] = r.mode;
  if (r.mode == "prime") j["prime"] = r.prime;
  j["seed"] = r.seed;
  j["random_subsets"] = r.random_subsets;
  Json pair;
  pair["holds"] = r.full_pair.holds;
  pair["pairs"] = int_str(r.full_pair.pairs);
  pair["weighted"] = int_str(r.full_pair.weighted);
  pair["bound_sensitive"] = r.full_pair.bound_sensitive;
  Json full;
  full["pair"] = pair;
  if (r.has_triple) {
    Json triple;
    triple["holds"] = r.full_triple.holds;
    triple["triples"] = int_str(r.full_triple.lhs);
    triple["point_sum"] = int_str(r.full_triple.point_sum);
    triple["line_sum"] = int_str(r.full_triple.line_sum);
    full["triple"] = triple;
  }
  j["full_arrangement"] = full;
  j["random"] = Json{{"checked", r.random_checked}, {"failures", r.random_failures}};
  j["all_pass"] = r.all_pass;
  return j;
}

// ---------------------------------------------------------------------------
// Line configuration report
// ---------------------------------------------------------------------------

inline Json lines_json(const CycField& k, const RestrictedConfig& rc) {
  Json j;
  j["schema"] = "v1";
  j["subcommand"] = "lines";
  j["n"] = rc.n;
  j["count"] = rc.lines.size();
  j["triple_lines"] = 4 * rc.n * rc.n;
  j["edges_included"] = rc.theorem_applies;
  if (!rc.diagnostic.empty()) j["diagnostic"] = rc.diagnostic;
  Json arr = Json::array();
  for (const LineParam& l : rc.all_lines) {
    Json one;
    one["label"] = l.label;
    one["points"] = Json::array({json_point(k, l.p), json_point(k, l.q)});
    Json forms = Json::array();
    for (const LinForm& f : l.forms) {
      Json coeffs = Json::array();
      for (const auto& c : f.coeffs) coeffs.push_back(k.str(c));
      forms.push_back(coeffs);
    }
    one["forms"] = forms;
    one["multiplicity"] = l.mult;
    one["restricted"] = l.in_restricted;
    arr.push_back(one);
  }
  j["lines"] = arr;
  return j;
}

// ---------------------------------------------------------------------------
// Membership reports
// ---------------------------------------------------------------------------

inline Json symbolic_json(long N, long n, const std::string& poly_text,
                          const std::vector<FlatSpan>& flats, const SymbolicCheck& chk) {
  Json j;
  j["schema"] = "v1";
  j["subcommand"] = "check-symbolic";
  j["N"] = N;
  j["n"] = n;
  j["m"] = chk.m;
  j["poly"] = poly_text;
  j["verdict"] = chk.member ? "member" : "non-member";
  j["flats_checked"] = chk.flats_checked;
  long min_order = chk.m;
  for (long o : chk.orders) min_order = std::min(min_order, o);
  j["min_order"] = min_order;
  if (!chk.member) j["first_failure"] = chk.first_failure;
  Json orders = Json::array();
  for (size_t i = 0; i < flats.size(); ++i)
    orders.push_back(Json{{"flat", flats[i].label}, {"order", chk.orders[i]}});
  j["orders"] = orders;
  return j;
}

inline Json membership_certificate_json(const MembershipResult& res) {
  Json cert;
  if (res.vacuous) {
    cert["type"] = "none";
    return cert;
  }
  if (res.member) {
    cert["type"] = "combination";
    Json terms = Json::array();
    for (const ComboTerm& t : res.combo) {
      Json term;
      if (!t.factors.empty()) {
        Json factors = Json::array();
        for (const auto& f : t.factors) factors.push_back(json_poly(f));
        term["factors"] = factors;
      } else {
        Json gens = Json::array();
        for (int i : t.gen_indices) gens.push_back(i + 1);  // g1..g6 numbering
        term["generators"] = gens;
        term["multiplier"] = json_expvec(t.multiplier);
      }
      term["coeff"] = rat_str(t.coeff);
      terms.push_back(term);
    }
    cert["terms"] = terms;
  } else {
    cert["type"] = "functional";
    Json entries = Json::array();
    for (const auto& [e, v] : res.functional)
      entries.push_back(Json{{"monomial", json_expvec(e)}, {"value", rat_str(v)}});
    cert["entries"] = entries;
  }
  return cert;
}

inline Json power_json(long N, const std::string& poly_text, const MembershipResult& res,
                       bool verified) {
  Json j;
  j["schema"] = "v1";
  j["subcommand"] = "check-power";
  j["N"] = N;
  j["n"] = res.n;
  j["r"] = res.r;
  j["strategy"] = strategy_name(res.strategy);
  j["poly"] = poly_text;
  j["degree"] = res.degree;
  j["verdict"] = res.member ? "member" : "non-member";
  j["vacuous"] = res.vacuous;
  j["span_rank"] = res.span_rank;
  j["columns"] = res.columns;
  j["rows"] = res.rows_total;
  j["certificate"] = membership_certificate_json(res);
  j["verified"] = verified;
  if (!res.diagnostic.empty()) j["diagnostic"] = res.diagnostic;
  return j;
}

// ---------------------------------------------------------------------------
// Certification report
// ---------------------------------------------------------------------------

inline Json constraint_json(const Constraint& c, const RingPtr<RatField>& ring) {
  Json j;
  j["modulo"] = ring->vars[static_cast<size_t>(c.var)];
  j["probe"] = json_expvec(c.probe);
  j["lhs"] = rat_str(c.lhs);
  Json survivors = Json::array();
  for (int s : c.survivors) survivors.push_back(s + 1);
  j["survivors"] = survivors;
  Json ctrs = Json::array();
  for (const ObstructionContributor& t : c.contributors)
    ctrs.push_back(Json{{"pair", Json::array({t.i + 1, t.j + 1})},
                        {"multiplier", json_expvec(t.multiplier)},
                        {"weight", rat_str(t.weight)}});
  j["contributors"] = ctrs;
  j["kind"] = constraint_kind_name(c.kind);
  if (c.kind == ConstraintKind::Forced) {
    j["forced"] = Json{{"pair", Json::array({c.forced_pair[0] + 1, c.forced_pair[1] + 1})},
                       {"monomial", json_expvec(c.forced_monomial)},
                       {"value", rat_str(c.forced_value)}};
  }
  return j;
}

inline Json certify_json(long n, const SymbolicCheck& jet, const MembershipResult& span,
                         bool span_verified, const ObstructionReport& obs,
                         const RingPtr<RatField>& ring) {
  Json j;
  j["schema"] = "v1";
  j["n"] = n;
  j["theorem"] = "symbolic3-not-in-square";
  j["verdict"] = span.member ? "member" : "non-member";
  j["jet_check"] = Json{{"m", jet.m},
                        {"flats", jet.flats_checked},
                        {"member", jet.member},
                        {"min_order", [&] {
                           long mo = jet.m;
                           for (long o : jet.orders) mo = std::min(mo, o);
                           return mo;
                         }()}};
  Json span_j;
  span_j["strategy"] = strategy_name(span.strategy);
  span_j["rank"] = span.span_rank;
  span_j["columns"] = span.columns;
  span_j["certificate"] = membership_certificate_json(span);
  span_j["verified"] = span_verified;
  j["span_check"] = span_j;
  Json obs_j;
  Json cons = Json::array();
  for (const Constraint& c : obs.constraints) cons.push_back(constraint_json(c, ring));
  obs_j["constraints"] = cons;
  obs_j["consistent"] = obs.consistent;
  obs_j["narrative"] = obs.narrative;
  if (!obs.diagnostic.empty()) obs_j["diagnostic"] = obs.diagnostic;
  j["obstruction"] = obs_j;
  j["assumptions"] =
      Json::array({"the six generators present the whole ideal of the line configuration "
                   "in the degrees used by the span check"});
  return j;
}

// ---------------------------------------------------------------------------
// Polynomial and generator reports
// ---------------------------------------------------------------------------

inline Json fermat_poly_json(int N, long n, const Poly<RatField>& f) {
  Json j;
  j["schema"] = "v1";
  j["subcommand"] = "fermat-poly";
  j["N"] = N;
  j["n"] = n;
  j["degree"] = f.degree();
  j["terms"] = json_poly(f);
  return j;
}

inline Json generators_json(const GeneratorSet& gs) {
  Json j;
  j["schema"] = "v1";
  j["subcommand"] = "generators";
  j["n"] = gs.n;
  Json gens = Json::array();
  for (size_t i = 0; i < gs.gens.size(); ++i)
    gens.push_back(Json{{"name", "g" + std::to_string(i + 1)},
                        {"degree", gs.gens[i].degree()},
                        {"text", gs.gens[i].str()},
                        {"terms", json_poly(gs.gens[i])}});
  j["generators"] = gens;
  Json ci = Json::array();
  for (const auto& p : gs.ci_pair)
    ci.push_back(Json{{"degree", p.degree()}, {"text", p.str()}, {"terms", json_poly(p)}});
  j["complete_intersection_pair"] = ci;
  return j;
}

inline std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ceva
