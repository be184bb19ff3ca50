// Command-line surface for the library: construction, census, identity
// checks, membership queries and certification.  All real work happens in
// run(); this file only maps flags onto a RunConfig.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ceva/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "exact intersection censuses and containment certificates for Fermat-type "
      "hyperplane arrangements"};
  app.require_subcommand(1);

  ceva::RunConfig cfg;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "write the report here instead of stdout");
  };
  auto add_format = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--format", cfg.format, help);
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "field mode: cyclotomic (default) or prime");
    sub->add_option("--prime", cfg.prime,
                    "prime p = 1 (mod n) for mode=prime; arithmetic in F_p replaces the "
                    "cyclotomic field");
  };

  CLI::App* fp = app.add_subcommand("fermat-poly",
                                    "print the product of all pairwise power differences");
  fp->add_option("--N", cfg.N, "ambient projective dimension (default 3)");
  fp->add_option("--n", cfg.n, "exponent")->required();
  add_format(fp, "text (default) or json");
  add_output(fp);

  CLI::App* gen = app.add_subcommand("generators",
                                     "print the six generators of the line-configuration "
                                     "ideal and the complete-intersection pair");
  gen->add_option("--n", cfg.n, "exponent")->required();
  add_format(gen, "text (default) or json");
  add_output(gen);

  CLI::App* cen = app.add_subcommand("census",
                                     "intersection-lattice multiplicity census of the "
                                     "arrangement, with incidence table");
  cen->add_option("--N", cfg.N, "ambient projective dimension: 2 or 3 (default 3)");
  cen->add_option("--n", cfg.n, "exponent")->required();
  add_mode(cen);
  add_format(cen, "csv (default) or json");
  add_output(cen);

  CLI::App* ids = app.add_subcommand("identities",
                                     "verify the pair and triple counting identities on the "
                                     "full arrangement and random subarrangements");
  ids->add_option("--N", cfg.N, "ambient projective dimension: 2 or 3 (default 3)");
  ids->add_option("--n", cfg.n, "exponent")->required();
  ids->add_option("--random", cfg.random_count, "number of random subarrangements (default 0)");
  ids->add_option("--seed", cfg.seed, "seed for the random subarrangements (default 1)");
  add_mode(ids);
  add_format(ids, "json");
  add_output(ids);

  CLI::App* lin = app.add_subcommand("lines",
                                     "the multiplicity->=3 line configuration: spanning "
                                     "points, forms, multiplicities");
  lin->add_option("--n", cfg.n, "exponent")->required();
  add_format(lin, "json (default) or text");
  add_output(lin);

  CLI::App* cs = app.add_subcommand("check-symbolic",
                                    "does the polynomial vanish to order >= m along every "
                                    "flat of the configuration?");
  cs->add_option("--N", cfg.N, "3: line configuration (default); 2: plane point set");
  cs->add_option("--n", cfg.n, "exponent")->required();
  cs->add_option("--m", cfg.m, "vanishing order to test")->required();
  cs->add_option("--poly", cfg.poly,
                 "polynomial to test, inline or a file path (default: the power-difference "
                 "product)");
  add_format(cs, "json");
  add_output(cs);

  CLI::App* cp = app.add_subcommand("check-power",
                                    "is the polynomial in the r-th power of the "
                                    "configuration ideal?");
  cp->add_option("--N", cfg.N, "3: line configuration (default); 2: plane point set");
  cp->add_option("--n", cfg.n, "exponent")->required();
  cp->add_option("--r", cfg.r, "power to test")->required();
  cp->add_option("--strategy", cfg.strategy, "gp (generator products, default) or oracle");
  cp->add_option("--poly", cfg.poly,
                 "polynomial to test, inline or a file path (default: the power-difference "
                 "product)");
  add_format(cp, "json");
  add_output(cp);

  CLI::App* ct = app.add_subcommand("certify",
                                    "full certificate: order-3 jets along all lines, "
                                    "square non-membership, and the coefficient obstruction");
  ct->add_option("--n", cfg.n, "exponent")->required();
  add_format(ct, "json");
  add_output(ct);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // flag errors are usage errors
  }

  for (CLI::App* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  return ceva::run(cfg, std::cout, std::cerr);
}
