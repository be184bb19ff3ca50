#pragma once

// In-process driver behind the command-line tool.  Each subcommand is a pure
// function from a RunConfig to a report string plus an exit code:
//   0  success
//   1  a checked expectation failed (census mismatch, identity failure,
//      certificate that does not re-verify)
//   2  usage error (bad flags, bad polynomial, unsupported mode)
//   3  I/O error writing the report
// Keeping the driver in a header lets the test suite call subcommands
// in-process and compare report bytes without spawning processes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ceva/arrangement.hpp"
#include "ceva/certify.hpp"
#include "ceva/cyclotomic.hpp"
#include "ceva/fermat.hpp"
#include "ceva/membership.hpp"
#include "ceva/parser.hpp"
#include "ceva/prime_field.hpp"
#include "ceva/report.hpp"
#include "ceva/rng.hpp"

namespace ceva {

struct RunConfig {
  std::string subcommand;
  int N = 3;
  long n = 1;
  long m = 3;
  long r = 2;
  std::string strategy = "gp";      // gp | oracle
  std::string mode = "cyclotomic";  // cyclotomic | prime
  std::uint64_t prime = 0;          // used when mode == "prime"
  std::string format;               // json | csv | text ("" = subcommand default)
  std::string output;               // report path; "" or "-" = stdout
  std::string poly;                 // optional polynomial: file path or inline text
  std::uint64_t seed = 1;
  long random_count = 0;            // identities: random subarrangements to check
};

namespace detail_run {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string pick_format(const RunConfig& cfg, const std::string& fallback,
                               std::initializer_list<const char*> allowed) {
  const std::string f = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("unsupported format '" + f + "' for subcommand " + cfg.subcommand);
}

inline void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

inline void require_cyclotomic(const RunConfig& cfg) {
  require(cfg.mode == "cyclotomic",
          "subcommand " + cfg.subcommand + " needs exact cyclotomic arithmetic; prime mode "
          "applies to census and identities only");
}

inline PrimeField checked_prime_field(const RunConfig& cfg) {
  require(cfg.prime >= 2, "prime mode needs --prime");
  const Int p(static_cast<unsigned long>(cfg.prime));
  require(mpz_probab_prime_p(p.get_mpz_t(), 40) != 0,
          "prime mode: " + int_str(p) + " is not prime");
  require(cfg.n >= 1 && (cfg.prime - 1) % static_cast<std::uint64_t>(cfg.n) == 0,
          "prime mode needs p = 1 (mod n) so that order-n roots of unity exist");
  return PrimeField::with_root(cfg.prime, cfg.n);
}

// Resolve --poly: an existing file is read, anything else parses inline.
inline std::string resolve_poly_source(const std::string& arg) {
  std::ifstream in(arg);
  if (in.good()) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

// ---------------------------------------------------------------------------
// census / identities (field-generic)
// ---------------------------------------------------------------------------

template <class K>
CensusReport census_compute(const K& k, const RunConfig& cfg) {
  CensusReport rep;
  rep.N = cfg.N;
  rep.n = cfg.n;
  rep.mode = cfg.mode;
  rep.prime = cfg.prime;
  auto planes = fermat_planes(k, cfg.N);
  rep.planes = planes.size();
  auto lat = intersection_lattice(k, planes, cfg.N);
  rep.counts = census(lat);
  if (cfg.N == 3) rep.incidences = incidence_table(lat);
  rep.expected = expected_fermat_census(cfg.N, cfg.n);
  rep.matches_expected = true;
  if (rep.expected.asserted) {
    if (cfg.N == 3 && rep.counts.codim(2) != rep.expected.lines) rep.matches_expected = false;
    if (rep.counts.codim(static_cast<size_t>(cfg.N)) != rep.expected.points)
      rep.matches_expected = false;
  }
  return rep;
}

template <class K>
bool subset_identities_hold(const K& k, const std::vector<LinFormT<K>>& planes,
                            const std::vector<size_t>& subset, int N) {
  std::vector<LinFormT<K>> sub;
  sub.reserve(subset.size());
  for (size_t i : subset) sub.push_back(planes[i]);
  auto lat = intersection_lattice(k, sub, N);
  Census c = census(lat);
  if (!verify_pair_identity(c).holds) return false;
  if (N == 3 && !verify_hunt(lat).holds) return false;
  return true;
}

template <class K>
IdentitiesReport identities_compute(const K& k, const RunConfig& cfg) {
  IdentitiesReport rep;
  rep.N = cfg.N;
  rep.n = cfg.n;
  rep.mode = cfg.mode;
  rep.prime = cfg.prime;
  rep.seed = cfg.seed;
  rep.random_subsets = static_cast<size_t>(cfg.random_count);

  auto planes = fermat_planes(k, cfg.N);
  auto lat = intersection_lattice(k, planes, cfg.N);
  Census c = census(lat);
  rep.full_pair = verify_pair_identity(c);
  bool ok = rep.full_pair.holds;
  if (cfg.N == 3) {
    rep.has_triple = true;
    rep.full_triple = verify_hunt(lat);
    ok = ok && rep.full_triple.holds;
  }

  Rng rng(cfg.seed);
  SubsetIdentities fast(lat);
  for (long t = 0; t < cfg.random_count; ++t) {
    const size_t d = planes.size();
    const size_t size = 3 + static_cast<size_t>(rng.below(d - 2));  // 3 .. d
    const std::vector<size_t> subset = rng.sample(d, size);
    ++rep.random_checked;
    if (!fast.identities_hold(subset)) ++rep.random_failures;
  }
  rep.all_pass = ok && rep.random_failures == 0;
  return rep;
}

// ---------------------------------------------------------------------------
// membership helpers
// ---------------------------------------------------------------------------

struct MembershipSetup {
  IdealContext ctx;
  std::vector<FlatSpan> flats;       // flats with display labels
  Poly<RatField> target;             // expanded target polynomial
  FactoredPoly factored;             // factored form when available
  std::string poly_text;
};

inline MembershipSetup membership_setup(const RunConfig& cfg) {
  require(cfg.N == 2 || cfg.N == 3, "membership subcommands work in N = 2 or N = 3");
  require(cfg.n >= 1, "need n >= 1");
  MembershipSetup s;
  s.ctx = cfg.N == 3 ? p3_context(cfg.n) : p2_context(cfg.n);
  s.flats = s.ctx.flats;
  if (cfg.poly.empty()) {
    s.factored = cfg.N == 3 ? fermat_factored(s.ctx.ring, cfg.n)
                            : p2_witness_factored(s.ctx.ring, cfg.n);
    s.target = expand_factored(s.factored);
  } else {
    s.target = parse_poly(resolve_poly_source(cfg.poly), s.ctx.ring);
    s.factored = {{s.target, 1}};
  }
  s.poly_text = s.target.str();
  return s;
}

// ---------------------------------------------------------------------------
// subcommand runners (report string + exit code)
// ---------------------------------------------------------------------------

struct Outcome {
  std::string payload;
  int code = 0;
};

inline Outcome run_fermat_poly(const RunConfig& cfg) {
  require(cfg.N >= 2, "fermat-poly needs N >= 2");
  require(cfg.n >= 1, "need n >= 1");
  require_cyclotomic(cfg);
  const std::string fmt = pick_format(cfg, "text", {"text", "json"});
  auto ring = make_ring(RatField{}, proj_vars(cfg.N));
  Poly<RatField> f = fermat_poly(ring, cfg.n);
  if (fmt == "text") return {f.str() + "\n", 0};
  return {render_json(fermat_poly_json(cfg.N, cfg.n, f)), 0};
}

inline Outcome run_generators(const RunConfig& cfg) {
  require(cfg.N == 3, "generators are defined in N = 3");
  require(cfg.n >= 1, "need n >= 1");
  require_cyclotomic(cfg);
  const std::string fmt = pick_format(cfg, "text", {"text", "json"});
  auto ring = make_ring(RatField{}, proj_vars(3));
  GeneratorSet gs = restricted_ideal_generators(ring, cfg.n);
  if (fmt == "json") return {render_json(generators_json(gs)), 0};
  std::ostringstream os;
  for (size_t i = 0; i < gs.gens.size(); ++i)
    os << "g" << (i + 1) << " = " << gs.gens[i].str() << "\n";
  for (size_t i = 0; i < gs.ci_pair.size(); ++i)
    os << "ci" << (i + 1) << " = " << gs.ci_pair[i].str() << "\n";
  return {os.str(), 0};
}

inline Outcome run_census(const RunConfig& cfg) {
  require(cfg.N == 2 || cfg.N == 3, "census works in N = 2 or N = 3");
  require(cfg.n >= 1, "need n >= 1");
  const std::string fmt = pick_format(cfg, "csv", {"csv", "json"});
  CensusReport rep;
  if (cfg.mode == "cyclotomic") {
    rep = census_compute(CycField(cfg.n), cfg);
  } else if (cfg.mode == "prime") {
    rep = census_compute(checked_prime_field(cfg), cfg);
  } else {
    throw UsageError("unknown field mode '" + cfg.mode + "'");
  }
  Outcome out;
  out.payload = fmt == "csv" ? census_csv(rep) : render_json(census_json(rep));
  out.code = rep.matches_expected ? 0 : 1;
  return out;
}

inline Outcome run_identities(const RunConfig& cfg) {
  require(cfg.N == 2 || cfg.N == 3, "identities work in N = 2 or N = 3");
  require(cfg.n >= 1, "need n >= 1");
  require(cfg.random_count >= 0, "random count must be >= 0");
  pick_format(cfg, "json", {"json"});
  IdentitiesReport rep;
  if (cfg.mode == "cyclotomic") {
    rep = identities_compute(CycField(cfg.n), cfg);
  } else if (cfg.mode == "prime") {
    rep = identities_compute(checked_prime_field(cfg), cfg);
  } else {
    throw UsageError("unknown field mode '" + cfg.mode + "'");
  }
  return {render_json(identities_json(rep)), rep.all_pass ? 0 : 1};
}

inline Outcome run_lines(const RunConfig& cfg) {
  require(cfg.N == 3, "the line configuration lives in N = 3");
  require(cfg.n >= 1, "need n >= 1");
  require_cyclotomic(cfg);
  const std::string fmt = pick_format(cfg, "json", {"json", "text"});
  CycField k(cfg.n);
  RestrictedConfig rc = restricted_config_lines(k);
  if (fmt == "json") return {render_json(lines_json(k, rc)), 0};
  std::ostringstream os;
  for (const LineParam& l : rc.all_lines)
    os << l.label << "  mult=" << l.mult << (l.in_restricted ? "" : "  (dropped)") << "\n";
  return {os.str(), 0};
}

inline Outcome run_check_symbolic(const RunConfig& cfg) {
  require_cyclotomic(cfg);
  require(cfg.m >= 1, "need m >= 1");
  pick_format(cfg, "json", {"json"});
  MembershipSetup s = membership_setup(cfg);
  SymbolicCheck chk = symbolic_power_member(s.ctx.cyc, s.factored, s.flats, cfg.m);
  return {render_json(symbolic_json(cfg.N, cfg.n, s.poly_text, s.flats, chk)), 0};
}

inline PowerStrategy parse_strategy(const std::string& s) {
  if (s == "gp" || s == "generator-products") return PowerStrategy::GeneratorProducts;
  if (s == "oracle" || s == "degreewise-oracle") return PowerStrategy::DegreewiseOracle;
  throw UsageError("unknown strategy '" + s + "' (expected gp or oracle)");
}

inline Outcome run_check_power(const RunConfig& cfg) {
  require_cyclotomic(cfg);
  require(cfg.r >= 1, "need r >= 1");
  pick_format(cfg, "json", {"json"});
  MembershipSetup s = membership_setup(cfg);
  MembershipResult res = power_membership(s.ctx, s.target, cfg.r, parse_strategy(cfg.strategy));
  const bool verified = verify_membership_certificate(s.ctx, s.target, res);
  Outcome out{render_json(power_json(cfg.N, s.poly_text, res, verified)), 0};
  if (!verified) out.code = 1;  // a certificate that does not replay is a failure
  return out;
}

inline Outcome run_certify(const RunConfig& cfg) {
  require_cyclotomic(cfg);
  require(cfg.N == 3, "certify works on the N = 3 configuration");
  require(cfg.n >= 1, "need n >= 1");
  pick_format(cfg, "json", {"json"});
  IdealContext ctx = p3_context(cfg.n);
  FactoredPoly factored = fermat_factored(ctx.ring, cfg.n);
  Poly<RatField> f = expand_factored(factored);

  SymbolicCheck jet = symbolic_power_member(ctx.cyc, factored, ctx.flats, 3);
  MembershipResult span = power_membership(ctx, f, 2, PowerStrategy::GeneratorProducts);
  const bool span_verified = verify_membership_certificate(ctx, f, span);
  ObstructionReport obs = obstruction_report(cfg.n);

  Outcome out{render_json(certify_json(cfg.n, jet, span, span_verified, obs, ctx.ring)), 0};
  if (!span_verified) out.code = 1;
  if (cfg.n >= 3) {
    const bool theorem_confirmed = jet.member && !span.member && !obs.consistent &&
                                   obs.constraints[0].kind == ConstraintKind::Forced &&
                                   obs.constraints[1].kind == ConstraintKind::Forced;
    if (!theorem_confirmed) out.code = 1;
  }
  return out;
}

}  // namespace detail_run

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using detail_run::Outcome;
  Outcome result;
  try {
    if (cfg.subcommand == "fermat-poly") {
      result = detail_run::run_fermat_poly(cfg);
    } else if (cfg.subcommand == "generators") {
      result = detail_run::run_generators(cfg);
    } else if (cfg.subcommand == "census") {
      result = detail_run::run_census(cfg);
    } else if (cfg.subcommand == "identities") {
      result = detail_run::run_identities(cfg);
    } else if (cfg.subcommand == "lines") {
      result = detail_run::run_lines(cfg);
    } else if (cfg.subcommand == "check-symbolic") {
      result = detail_run::run_check_symbolic(cfg);
    } else if (cfg.subcommand == "check-power") {
      result = detail_run::run_check_power(cfg);
    } else if (cfg.subcommand == "certify") {
      result = detail_run::run_certify(cfg);
    } else {
      err << "unknown subcommand '" << cfg.subcommand << "'\n";
      return 2;
    }
  } catch (const detail_run::UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: polynomial input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.output.empty() || cfg.output == "-") {
    out << result.payload;
    if (!out) {
      err << "error: failed to write report\n";
      return 3;
    }
    return result.code;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << cfg.output << "' for writing\n";
    return 3;
  }
  file << result.payload;
  file.close();
  if (!file) {
    err << "error: failed while writing '" << cfg.output << "'\n";
    return 3;
  }
  return result.code;
}

}  // namespace ceva
