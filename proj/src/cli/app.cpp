#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "harmonic2v/cli/commands.hpp"

namespace harmonic2v::cli {

namespace {

const std::map<std::string, Format> kFormats = {{"json", Format::json}, {"text", Format::text}};

// Exactly one of the positional expression, --poly and --poly-file.
bool resolve_poly(const std::string& positional, const std::string& flag, const std::string& file,
                  std::string& out, std::ostream& err) {
  const int given = !positional.empty() + !flag.empty() + !file.empty();
  if (given != 1) {
    err << "error: give the polynomial exactly once (argument, --poly or --poly-file)\n";
    return false;
  }
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      err << "error: cannot read " << file << "\n";
      return false;
    }
    out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
  }
  out = positional.empty() ? flag : positional;
  return true;
}

int emit(const CommandResult& r, std::ostream& out, std::ostream& err) {
  out << r.output;
  err << r.error;
  return r.exit_code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact harmonic analysis for polynomials in two vector variables", "harmonic2v"};
  app.require_subcommand(1);

  std::string positional, poly, poly_file;
  Format format = Format::json;

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "Fischer and ladder decomposition of P(x,u)");
  decompose->add_option("expr", positional, "polynomial expression");
  decompose->add_option("--poly", poly, "polynomial expression");
  decompose->add_option("--poly-file", poly_file, "file holding the expression");
  decompose->add_option("--m", dec.m, "dimension (> 4)")->capture_default_str();
  decompose
      ->add_option("--strategy", dec.strategy, "direct or sequential")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Strategy>{{"direct", Strategy::direct},
                                          {"sequential", Strategy::sequential}},
          CLI::ignore_case));
  decompose->add_option("--format", format, "json or text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  IntegrateArgs integ;
  std::uint64_t mc_samples = 0;
  auto* integrate = app.add_subcommand("integrate", "Pizzetti integration over V_2(R^m) or S^{m-1}");
  integrate->add_option("expr", positional, "polynomial expression");
  integrate->add_option("--poly", poly, "polynomial expression");
  integrate->add_option("--poly-file", poly_file, "file holding the expression");
  integrate->add_option("--m", integ.m, "dimension")->capture_default_str();
  integrate->add_option("--manifold", integ.manifold, "stiefel2 or sphere")
      ->check(CLI::IsMember({"stiefel2", "sphere"}))
      ->capture_default_str();
  auto* mc_opt = integrate->add_option("--mc-samples", mc_samples, "Monte Carlo cross-check samples");
  integrate->add_option("--seed", integ.seed, "Monte Carlo seed")->capture_default_str();
  integrate->add_option("--format", format, "json or text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run an exact verification suite");
  std::string suite;
  verify->add_option("--suite", suite, "relations, ladder, appendix, orthogonality, pizzetti")
      ->required()
      ->check(CLI::IsMember({"relations", "ladder", "appendix", "orthogonality", "pizzetti"}));
  verify->add_option("--m", ver.options.m, "dimension (> 4)")->capture_default_str();
  verify->add_option("--max-bidegree", ver.options.max_bidegree, "largest bidegree component")
      ->capture_default_str();
  verify->add_option("--seed", ver.options.seed, "random seed")->capture_default_str();
  verify->add_option("--samples", ver.options.samples, "random samples")->capture_default_str();
  verify->add_option("--format", format, "json or text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (decompose->parsed()) {
    if (!resolve_poly(positional, poly, poly_file, dec.poly, err)) return kExitUsage;
    dec.format = format;
    return emit(cmd_decompose(dec), out, err);
  }
  if (integrate->parsed()) {
    if (!resolve_poly(positional, poly, poly_file, integ.poly, err)) return kExitUsage;
    if (mc_opt->count() > 0) integ.mc_samples = mc_samples;
    integ.format = format;
    return emit(cmd_integrate(integ), out, err);
  }
  ver.suite = *parse_suite(suite);
  ver.format = format;
  return emit(cmd_verify(ver), out, err);
}

}  // namespace harmonic2v::cli
