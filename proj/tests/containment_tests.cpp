// Membership machinery: vanishing orders along flats (jet engine against the
// partial-derivative oracle), symbolic-power membership of the product
// polynomial, graded pieces of the vanishing ideal (residue-class blocks
// against a dense single-block oracle), ordinary-power membership by both
// strategies with certificate replay and tampering, and the two-restriction
// coefficient obstruction.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "ceva/arrangement.hpp"
#include "ceva/certify.hpp"
#include "ceva/fermat.hpp"
#include "ceva/membership.hpp"
#include "ceva/poly.hpp"
#include "ceva/rng.hpp"

using namespace ceva;

namespace {

Poly<RatField> random_homog(const RingPtr<RatField>& ring, Rng& rng, int degree,
                            size_t nterms) {
  auto mons = monomials_of_degree(static_cast<int>(ring->nvars()), degree);
  Poly<RatField> p(ring);
  for (size_t t = 0; t < nterms; ++t) {
    const auto& e = mons[static_cast<size_t>(rng.below(mons.size()))];
    long c = static_cast<long>(rng.below(19)) - 9;
    if (c == 0) c = 1;
    p.add_term(e, Rat(c));
  }
  if (p.is_zero()) p.add_term(mons[0], Rat(1));
  return p;
}

FlatSpan diag_line(const CycField& k, std::vector<int> a, std::vector<int> b) {
  auto pt = [&](const std::vector<int>& v) {
    std::vector<CycNum> out;
    for (int x : v) out.push_back(k.from_int(x));
    return out;
  };
  return FlatSpan{"custom", {pt(a), pt(b)}};
}

// Dense single-block model of the degree-d piece of the vanishing ideal: one
// rational linear system over ALL degree-d monomials at once, conditions read
// off by substituting the spanning points with free parameters.  No residue
// classes anywhere — this is the oracle the class decomposition must match.
size_t dense_piece_dimension(const CycField& k, const RingPtr<RatField>& ring,
                             const std::vector<FlatSpan>& flats, long d) {
  auto mons = monomials_of_degree(static_cast<int>(ring->nvars()), static_cast<int>(d));
  auto cring = make_ring(k, ring->vars);
  RatField Q;
  IncrementalRref<RatField> inc(Q, mons.size());
  for (const auto& flat : flats) {
    // substitute x -> s1 P + s2 Q into each monomial
    std::vector<Poly<CycField>> images;
    std::set<ExpVec> pexps;
    for (const auto& e : mons) {
      Poly<CycField> m(cring);
      m.add_term(e, k.one());
      images.push_back(substitute_linear(m, flat.points));
      for (const auto& [pe, c] : images.back().terms()) {
        (void)c;
        pexps.insert(pe);
      }
    }
    for (const auto& pe : pexps) {
      const size_t phi = k.phi();
      for (size_t c = 0; c < phi; ++c) {
        std::vector<Rat> row(mons.size(), Rat(0));
        bool nonzero = false;
        for (size_t j = 0; j < mons.size(); ++j) {
          const CycNum v = images[j].coefficient_of(pe);
          if (v.coords.empty()) continue;
          row[j] = v.coords[c];
          if (row[j] != 0) nonzero = true;
        }
        if (nonzero) inc.add_row(std::move(row));
      }
    }
  }
  return mons.size() - inc.rank();
}

}  // namespace

// ---------------------------------------------------------------------------
// vanishing orders
// ---------------------------------------------------------------------------

TEST_CASE("jet orders agree with the partial-derivative oracle") {
  const uint64_t seed = GENERATE(1ull, 2ull, 3ull);
  for (long n : {1L, 2L, 3L}) {
    CycField k(n);
    auto ring = make_ring(RatField{}, proj_vars(3));
    RestrictedConfig rc = restricted_config_lines(k);
    Rng rng(seed * 100 + static_cast<uint64_t>(n));
    std::vector<FlatSpan> flats;
    for (int t = 0; t < 3; ++t) {
      const auto& l = rc.all_lines[static_cast<size_t>(rng.below(rc.all_lines.size()))];
      flats.push_back(flat_of_line(l));
    }
    flats.push_back(diag_line(k, {1, 1, 0, 0}, {0, 0, 1, 1}));
    flats.push_back(diag_line(k, {1, 1, 1, 0}, {0, 0, 0, 1}));
    std::vector<Poly<RatField>> polys;
    GeneratorSet gs = restricted_ideal_generators(ring, n);
    polys.push_back(gs.gens[static_cast<size_t>(rng.below(6))]);
    polys.push_back(fermat_poly(ring, n));
    for (int t = 0; t < 3; ++t)
      polys.push_back(random_homog(ring, rng, 2 + static_cast<int>(rng.below(4)), 4));
    for (const auto& flat : flats)
      for (const auto& f : polys) {
        const long cap = 4;
        const long fast = vanishing_order_upto(k, f, flat, cap);
        const long slow = detail_membership::vanishing_order_upto_partials(k, f, flat, cap);
        INFO("n = " << n << " flat = " << flat.label << " poly = " << f.str());
        CHECK(fast == slow);
      }
  }
}

TEST_CASE("orders of the product polynomial along known flats") {
  for (long n : {2L, 3L, 4L}) {
    CycField k(n);
    auto ring = make_ring(RatField{}, proj_vars(3));
    FactoredPoly f = fermat_factored(ring, n);
    RestrictedConfig rc = restricted_config_lines(k);
    long triple_seen = 0, edge_seen = 0;
    for (const auto& l : rc.all_lines) {
      if (l.label[0] == 'T' && triple_seen < 4) {
        ++triple_seen;
        CHECK(vanishing_order_upto(k, f, flat_of_line(l), 10) == 3);
      }
      if (l.label[0] == 'E') {
        ++edge_seen;
        CHECK(vanishing_order_upto(k, f, flat_of_line(l), 10) == n);
      }
    }
    CHECK(edge_seen == 6);
    // a double line of the arrangement (two planes through it, not in the
    // restricted configuration): order exactly 2
    CHECK(vanishing_order_upto(k, f, diag_line(k, {1, 1, 0, 0}, {0, 0, 1, 1}), 10) == 2);
    // and a generic line misses the arrangement entirely
    CHECK(vanishing_order_upto(k, f, diag_line(k, {1, 2, 4, 7}, {3, 1, 5, 9}), 10) == 0);
  }
  // the triple-line order stays 3 for n = 1 as well, where the "edges" are
  // simple lines of the arrangement
  CycField k1(1);
  auto ring = make_ring(RatField{}, proj_vars(3));
  FactoredPoly f1 = fermat_factored(ring, 1);
  CHECK(vanishing_order_upto(k1, f1, diag_line(k1, {1, 1, 1, 0}, {0, 0, 0, 1}), 10) == 3);
}

TEST_CASE("order computations respect multiplicities of factored input") {
  CycField k(2);
  auto ring = make_ring(RatField{}, proj_vars(3));
  auto vp = [&](int v, long e) { return Poly<RatField>::variable(ring, v, static_cast<int>(e)); };
  const auto lin = vp(0, 1) - vp(1, 1);  // x - y, order 1 on the double line below
  FlatSpan fl = diag_line(k, {1, 1, 0, 0}, {0, 0, 1, 1});
  for (long e = 1; e <= 4; ++e) {
    FactoredPoly fac{{lin, e}};
    CHECK(vanishing_order_upto(k, fac, fl, 6) == e);
    CHECK(vanishing_order_at_least(k, fac, fl, e));
    CHECK(!vanishing_order_at_least(k, fac, fl, e + 1));
  }
  // cap semantics: a return equal to the cap means only ">= cap"
  FactoredPoly big{{lin, 9}};
  CHECK(vanishing_order_upto(k, big, fl, 4) == 4);
}

// ---------------------------------------------------------------------------
// symbolic membership of the product polynomial
// ---------------------------------------------------------------------------

TEST_CASE("product polynomial lies in the third symbolic power but not the fourth") {
  for (long n : {2L, 3L, 4L, 5L}) {
    IdealContext ctx = p3_context(n);
    FactoredPoly f = fermat_factored(ctx.ring, n);
    auto in3 = symbolic_power_member(ctx.cyc, f, ctx.flats, 3);
    INFO("n = " << n);
    CHECK(in3.member);
    CHECK(in3.flats_checked == ctx.flats.size());
    CHECK(in3.orders.size() == ctx.flats.size());
    for (long o : in3.orders) CHECK(o == 3);  // capped at m = 3
    auto in4 = symbolic_power_member(ctx.cyc, f, ctx.flats, 4);
    CHECK(!in4.member);
    CHECK(!in4.first_failure.empty());
    // the failure is a triple line: order exactly 3 < 4
    CHECK(std::count(in4.orders.begin(), in4.orders.end(), 3) >= 1);
  }
}

// ---------------------------------------------------------------------------
// graded pieces of the vanishing ideal
// ---------------------------------------------------------------------------

TEST_CASE("graded pieces match a dense no-decomposition model") {
  for (long n : {1L, 2L, 3L}) {
    IdealContext ctx = p3_context(n);
    for (long d = 1; d <= 2 * n + 2; ++d) {
      auto basis = graded_piece_of_vanishing_ideal(ctx.cyc, ctx.ring, ctx.flats, d);
      const size_t dim = dense_piece_dimension(ctx.cyc, ctx.ring, ctx.flats, d);
      INFO("n = " << n << " d = " << d);
      CHECK(basis.size() == dim);
      for (const auto& b : basis) {
        CHECK(b.degree() == static_cast<int>(d));
        CHECK(symbolic_power_member(ctx.cyc, b, ctx.flats, 1).member);
      }
      // with the edges present (n >= 3) nothing vanishes below degree 2n+2;
      // without them the degree-2n complete-intersection pair slips under:
      // at n = 2 the piece starts at degree 4 with exactly that pair, and at
      // n = 1 the four lines admit the cubic (x-y)(x-z)(y-z)
      if (n >= 3 && d < 2 * n + 2) CHECK(basis.empty());
      if (n == 2) {
        const size_t expect[] = {0, 0, 0, 0, 2, 8, 20};
        CHECK(basis.size() == expect[d]);
      }
      if (n == 1 && d == 3) CHECK(basis.size() >= 1);
    }
  }
}

TEST_CASE("generator-degree piece is spanned and contains the six generators") {
  for (long n : {2L, 3L}) {
    IdealContext ctx = p3_context(n);
    const long d = 2 * n + 2;
    auto basis = graded_piece_of_vanishing_ideal(ctx.cyc, ctx.ring, ctx.flats, d);
    REQUIRE(!basis.empty());
    auto mons = monomials_of_degree(4, static_cast<int>(d));
    std::map<ExpVec, size_t, GrevlexGreater> col;
    for (size_t j = 0; j < mons.size(); ++j) col.emplace(mons[j], j);
    auto row_of = [&](const Poly<RatField>& p) {
      std::vector<Rat> r(mons.size(), Rat(0));
      for (const auto& [e, c] : p.terms()) r[col.at(e)] = c;
      return r;
    };
    RatField Q;
    IncrementalRref<RatField> inc(Q, mons.size());
    for (const auto& b : basis) inc.add_row(row_of(b));
    const size_t rank0 = inc.rank();
    CHECK(rank0 == basis.size());  // the emitted basis is linearly independent
    // each generator reduces to zero against the basis: it lies in the span
    for (const auto& g : restricted_ideal_generators(ctx.ring, n).gens) {
      std::vector<Rat> r = row_of(g);
      inc.reduce(r);
      bool zero = true;
      for (const auto& v : r)
        if (v != 0) zero = false;
      CHECK(zero);
    }
    CHECK(inc.rank() == rank0);
  }
}

// ---------------------------------------------------------------------------
// ordinary-power membership
// ---------------------------------------------------------------------------

TEST_CASE("the two power strategies agree on the main non-membership") {
  for (long n : {3L}) {
    IdealContext ctx = p3_context(n);
    Poly<RatField> f = fermat_poly(ctx.ring, n);
    auto gp = power_membership(ctx, f, 2, PowerStrategy::GeneratorProducts);
    auto oc = power_membership(ctx, f, 2, PowerStrategy::DegreewiseOracle);
    CHECK(!gp.member);
    CHECK(!oc.member);
    CHECK(gp.span_rank == oc.span_rank);  // same space, independently presented
    CHECK(gp.rows_total == oc.rows_total);
    CHECK(verify_membership_certificate(ctx, f, gp));
    CHECK(verify_membership_certificate(ctx, f, oc));
    CHECK(!gp.vacuous);
    CHECK(gp.degree == 6 * n);
  }
}

TEST_CASE("the non-membership functional annihilates the span and pairs to one") {
  const long n = 3;
  IdealContext ctx = p3_context(n);
  Poly<RatField> f = fermat_poly(ctx.ring, n);
  auto res = power_membership(ctx, f, 2, PowerStrategy::GeneratorProducts);
  REQUIRE(!res.member);
  REQUIRE(!res.functional.empty());
  auto pair_with = [&](const Poly<RatField>& p) {
    Rat acc(0);
    for (const auto& [e, c] : res.functional) acc += c * p.coefficient_of(e);
    return acc;
  };
  CHECK(pair_with(f) == Rat(1));
  // random columns of the span: g_i g_j times a degree 2n-4 monomial
  GeneratorSet gs = restricted_ideal_generators(ctx.ring, n);
  auto mons = monomials_of_degree(4, static_cast<int>(2 * n - 4));
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const size_t i = static_cast<size_t>(rng.below(6)), j = static_cast<size_t>(rng.below(6));
    const auto& m = mons[static_cast<size_t>(rng.below(mons.size()))];
    auto col = (gs.gens[i] * gs.gens[j]).times_monomial(m, Rat(1));
    CHECK(pair_with(col) == Rat(0));
  }
}

TEST_CASE("random products of generators are recognized as members") {
  const uint64_t seed = GENERATE(1ull, 2ull);
  for (long n : {2L, 3L}) {
    IdealContext ctx = p3_context(n);
    GeneratorSet gs = restricted_ideal_generators(ctx.ring, n);
    Rng rng(seed * 31 + static_cast<uint64_t>(n));
    for (int t = 0; t < 5; ++t) {
      const size_t i = static_cast<size_t>(rng.below(6)), j = static_cast<size_t>(rng.below(6));
      const int extra = static_cast<int>(rng.below(3));
      auto mons = monomials_of_degree(4, extra);
      const auto& m = mons[static_cast<size_t>(rng.below(mons.size()))];
      auto target = (gs.gens[i] * gs.gens[j]).times_monomial(m, Rat(2));
      auto res = power_membership(ctx, target, 2, PowerStrategy::GeneratorProducts);
      INFO("n = " << n << " i = " << i << " j = " << j);
      CHECK(res.member);
      CHECK(verify_membership_certificate(ctx, target, res));
      // sums of two such products stay inside
      const size_t i2 = static_cast<size_t>(rng.below(6)),
                   j2 = static_cast<size_t>(rng.below(6));
      auto target2 = target + (gs.gens[i2] * gs.gens[j2]).times_monomial(m, Rat(-3));
      if (!target2.is_zero()) {
        auto res2 = power_membership(ctx, target2, 2, PowerStrategy::GeneratorProducts);
        CHECK(res2.member);
        CHECK(verify_membership_certificate(ctx, target2, res2));
      }
    }
  }
}

TEST_CASE("oracle strategy accepts members with explicit factor certificates") {
  const long n = 2;
  IdealContext ctx = p3_context(n);
  GeneratorSet gs = restricted_ideal_generators(ctx.ring, n);
  auto target = gs.gens[0] * gs.gens[3];
  auto res = power_membership(ctx, target, 2, PowerStrategy::DegreewiseOracle);
  REQUIRE(res.member);
  for (const auto& term : res.combo) {
    CHECK(term.factors.size() == 2);  // oracle certificates carry explicit factors
    CHECK(term.gen_indices.empty());
  }
  CHECK(verify_membership_certificate(ctx, target, res));
}

TEST_CASE("tampered certificates are rejected") {
  const long n = 2;
  IdealContext ctx = p3_context(n);
  GeneratorSet gs = restricted_ideal_generators(ctx.ring, n);

  SECTION("member combo") {
    auto target = gs.gens[0] * gs.gens[1] + gs.gens[2] * gs.gens[3];
    auto res = power_membership(ctx, target, 2, PowerStrategy::GeneratorProducts);
    REQUIRE(res.member);
    REQUIRE(res.combo.size() >= 2);
    CHECK(verify_membership_certificate(ctx, target, res));
    auto broken = res;
    broken.combo.pop_back();
    CHECK(!verify_membership_certificate(ctx, target, broken));
    broken = res;
    broken.combo[0].coeff += 1;
    CHECK(!verify_membership_certificate(ctx, target, broken));
    broken = res;
    broken.combo[0].gen_indices = {0, 99};
    CHECK(!verify_membership_certificate(ctx, target, broken));
  }

  SECTION("non-member functional") {
    Poly<RatField> f = fermat_poly(ctx.ring, n);
    auto res = power_membership(ctx, f, 2, PowerStrategy::GeneratorProducts);
    REQUIRE(!res.member);
    CHECK(verify_membership_certificate(ctx, f, res));
    auto broken = res;
    broken.functional[0].second += 1;
    CHECK(!verify_membership_certificate(ctx, f, broken));
    broken = res;
    broken.functional.clear();
    CHECK(!verify_membership_certificate(ctx, f, broken));
  }
}

TEST_CASE("degrees with no power elements are reported as vacuous") {
  const long n = 3;
  IdealContext ctx = p3_context(n);
  auto low = Poly<RatField>::variable(ctx.ring, 0, 3);  // degree 3 < 2(2n+2)
  for (auto strat : {PowerStrategy::GeneratorProducts, PowerStrategy::DegreewiseOracle}) {
    auto res = power_membership(ctx, low, 2, strat);
    CHECK(!res.member);
    CHECK(res.vacuous);
    CHECK(res.columns == 0);
    CHECK(verify_membership_certificate(ctx, low, res));
    CHECK(res.diagnostic.find("vacuous") != std::string::npos);
  }
}

TEST_CASE("residue classes of polynomials") {
  const long n = 3;
  auto ring = make_ring(RatField{}, proj_vars(3));
  GeneratorSet gs = restricted_ideal_generators(ring, n);
  for (const auto& g : gs.gens) CHECK(detail_membership::class_of_poly(g, n) >= 0);
  CHECK(detail_membership::class_of_poly(fermat_poly(ring, n), n) == 0);
  // a polynomial mixing classes is flagged
  auto mixed = Poly<RatField>::variable(ring, 0, 2) + Poly<RatField>::variable(ring, 1, 1) *
                                                          Poly<RatField>::variable(ring, 0, 1);
  CHECK(detail_membership::class_of_poly(mixed, n) == -1);
}

// ---------------------------------------------------------------------------
// plane-curve companion
// ---------------------------------------------------------------------------

TEST_CASE("plane witness separates symbolic cube from ordinary square") {
  for (long n : {3L, 4L, 5L}) {
    IdealContext ctx = p2_context(n);
    FactoredPoly wf = p2_witness_factored(ctx.ring, n);
    Poly<RatField> w = expand_factored(wf);
    INFO("n = " << n);
    CHECK(w.degree() == 3 * n);
    auto sym = symbolic_power_member(ctx.cyc, wf, ctx.flats, 3);
    CHECK(sym.member);
    auto sq = power_membership(ctx, w, 2, PowerStrategy::GeneratorProducts);
    CHECK(!sq.member);
    CHECK(verify_membership_certificate(ctx, w, sq));
    auto oc = power_membership(ctx, w, 2, PowerStrategy::DegreewiseOracle);
    CHECK(!oc.member);
    CHECK(oc.span_rank == sq.span_rank);
    // the witness is nonetheless an honest member of the first power
    auto first = power_membership(ctx, w, 1, PowerStrategy::GeneratorProducts);
    CHECK(first.member);
    CHECK(verify_membership_certificate(ctx, w, first));
  }
}

// ---------------------------------------------------------------------------
// the coefficient obstruction
// ---------------------------------------------------------------------------

TEST_CASE("survivor sets of the two restrictions") {
  for (long n : {2L, 3L, 4L}) {
    auto ring = make_ring(RatField{}, proj_vars(3));
    GeneratorSet gs = restricted_ideal_generators(ring, n);
    auto mod_x = reduce_products_mod_var(gs, 0);
    CHECK(mod_x.survivors == std::vector<int>{1, 3, 5});  // g2, g4, g6 keep no x factor
    auto mod_z = reduce_products_mod_var(gs, 2);
    CHECK(mod_z.survivors == std::vector<int>{0, 3, 4});  // g1, g4, g5 keep no z factor
    CHECK(mod_x.products.size() == 21);
    // killed generators leave explicit zero products
    for (const auto& [pr, poly] : mod_x.products)
      if (pr.first == 0 || pr.second == 0) CHECK(poly.is_zero());
  }
}

TEST_CASE("probe coefficients of the restricted product polynomial") {
  // independent derivation: setting x = 0 in the product of the six pairwise
  // differences leaves -y^n z^n w^n (y^n - z^n)(y^n - w^n)(z^n - w^n)
  for (long n : {2L, 3L, 4L, 5L}) {
    auto ring = make_ring(RatField{}, proj_vars(3));
    auto vp = [&](int v, long e) { return Poly<RatField>::variable(ring, v, static_cast<int>(e)); };
    Poly<RatField> f = fermat_poly(ring, n);
    auto expect = (vp(1, n) * vp(2, n) * vp(3, n)).scaled(Rat(-1)) * (vp(1, n) - vp(2, n)) *
                  (vp(1, n) - vp(3, n)) * (vp(2, n) - vp(3, n));
    CHECK(f.set_var_zero(0) == expect);
    const int N = static_cast<int>(n);
    CHECK(f.set_var_zero(0).coefficient_of(ExpVec{0, 3 * N, 2 * N, N}) == Rat(-1));
    CHECK(f.set_var_zero(2).coefficient_of(ExpVec{2 * N, 3 * N, 0, N}) == Rat(1));
  }
}

TEST_CASE("each restriction forces the same multiplier coefficient to opposite values") {
  for (long n : {3L, 4L, 5L}) {
    auto ring = make_ring(RatField{}, proj_vars(3));
    GeneratorSet gs = restricted_ideal_generators(ring, n);
    Poly<RatField> f = fermat_poly(ring, n);
    const int N = static_cast<int>(n);
    auto cx = forced_coefficient(gs, f, ExpVec{0, 3 * N, 2 * N, N}, 0);
    auto cz = forced_coefficient(gs, f, ExpVec{2 * N, 3 * N, 0, N}, 2);
    INFO("n = " << n);
    CHECK(cx.kind == ConstraintKind::Forced);
    CHECK(cz.kind == ConstraintKind::Forced);
    CHECK(cx.contributors.size() == 1);
    CHECK(cz.contributors.size() == 1);
    // both probes reach only the g4*g4 product, through the multiplier
    // monomial y^{n-2} w^{n-2}
    const ExpVec mult{0, N - 2, 0, N - 2};
    CHECK(cx.forced_pair == std::vector<int>{3, 3});
    CHECK(cz.forced_pair == std::vector<int>{3, 3});
    CHECK(cx.forced_monomial == mult);
    CHECK(cz.forced_monomial == mult);
    CHECK(cx.forced_value == Rat(-1));
    CHECK(cz.forced_value == Rat(1));
    // the multiplier avoids both reduced variables, so the two constraints
    // really address one and the same unknown coefficient
    CHECK(mult[0] == 0);
    CHECK(mult[2] == 0);
  }
}

TEST_CASE("a probe missed by every product is vacuous or impossible") {
  const long n = 3;
  auto ring = make_ring(RatField{}, proj_vars(3));
  GeneratorSet gs = restricted_ideal_generators(ring, n);
  Poly<RatField> f = fermat_poly(ring, n);
  const int N = static_cast<int>(n);
  // every surviving product modulo x carries z or w in each monomial, so a
  // pure y-power is out of reach; its left side is zero too, hence vacuous
  auto c = forced_coefficient(gs, f, ExpVec{0, 6 * N, 0, 0}, 0);
  CHECK(c.kind == ConstraintKind::Vacuous);
  CHECK(c.lhs == Rat(0));
  CHECK(c.contributors.empty());
}

TEST_CASE("forced_coefficient validates its probe") {
  const long n = 3;
  auto ring = make_ring(RatField{}, proj_vars(3));
  GeneratorSet gs = restricted_ideal_generators(ring, n);
  Poly<RatField> f = fermat_poly(ring, n);
  CHECK_THROWS_AS(forced_coefficient(gs, f, ExpVec{1, 2, 3}, 0), std::invalid_argument);
  CHECK_THROWS_AS(forced_coefficient(gs, f, ExpVec{0, 1, 1, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(forced_coefficient(gs, f, ExpVec{1, 9, 5, 3}, 0), std::invalid_argument);
}

TEST_CASE("obstruction reports are contradictions for every exponent") {
  for (long n = 1; n <= 5; ++n) {
    auto rep = obstruction_report(n);
    INFO("n = " << n);
    CHECK(rep.n == n);
    REQUIRE(rep.constraints.size() == 2);
    CHECK(rep.constraints[0].var == 0);
    CHECK(rep.constraints[1].var == 2);
    CHECK(!rep.consistent);
    CHECK(!rep.narrative.empty());
    CHECK(rep.diagnostic.empty() == (n >= 3));
    if (n == 1) {
      // the probes need exponents the generators cannot reach at all
      CHECK(rep.constraints[0].kind == ConstraintKind::Unreachable);
      CHECK(rep.constraints[1].kind == ConstraintKind::Unreachable);
    }
    if (n >= 3) {
      CHECK(rep.constraints[0].kind == ConstraintKind::Forced);
      CHECK(rep.constraints[1].kind == ConstraintKind::Forced);
    }
  }
}
