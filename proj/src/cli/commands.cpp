#include "harmonic2v/cli/commands.hpp"

#include <json.hpp>

#include <sstream>

#include "harmonic2v/cli/expression.hpp"
#include "harmonic2v/errors.hpp"
#include "harmonic2v/pizzetti.hpp"

namespace harmonic2v::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "harmonic2v/1";

json term_list(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [mono, c] : p.terms()) {
    terms.push_back({{"monomial", mono.to_string()}, {"coefficient", c.to_string()}});
  }
  return terms;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

CommandResult usage_error(const std::string& message) {
  return {kExitUsage, {}, "error: " + message + "\n"};
}

CommandResult failure(const std::string& message) {
  return {kExitFailure, {}, "error: " + message + "\n"};
}

// Parse errors and out-of-range dimensions are the caller's fault (exit 2);
// anything the pipeline raises afterwards is a failure (exit 1).
template <class Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    return usage_error(e.what());
  } catch (const VariableOutOfRange& e) {
    return usage_error(e.what());
  } catch (const InvalidDimension& e) {
    return usage_error(e.what());
  } catch (const Error& e) {
    return failure(e.what());
  }
}

}  // namespace

CommandResult cmd_decompose(const DecomposeArgs& args) {
  return guarded([&]() -> CommandResult {
    require_operator_dimension(args.m);
    const Polynomial p = parse_poly(args.poly, args.m);
    const DecompositionResult result = decompose_full(p, args.strategy, /*include_zero=*/true);
    const bool exact = reconstruct(result) == p;

    CommandResult out;
    out.exit_code = exact ? kExitOk : kExitFailure;
    if (!exact) out.error = "error: reconstruction does not reproduce the input\n";

    if (args.format == Format::text) {
      std::ostringstream text;
      text << "input: " << print_poly(p) << "  (m = " << args.m << ")\n";
      for (const auto& c : result.components) {
        const LadderIndex& t = c.component.index;
        text << "|x|^" << 2 * c.a << " |u|^" << 2 * c.b << " C^" << t.i << " S_u^" << t.j
             << " H(" << t.k << "," << t.l << "): " << print_poly(c.component.harmonic) << "\n";
      }
      text << "reconstruction: " << (exact ? "exact" : "mismatch") << "\n";
      out.output = text.str();
      return out;
    }

    json components = json::array();
    for (const auto& c : result.components) {
      const LadderIndex& t = c.component.index;
      components.push_back({{"source", {{"k", c.source.k}, {"l", c.source.l}}},
                            {"fischer", {{"a", c.a}, {"b", c.b}}},
                            {"ladder", {{"i", t.i}, {"j", t.j}}},
                            {"target", {{"k", t.k}, {"l", t.l}}},
                            {"harmonic", term_list(c.component.harmonic)}});
    }
    out.output = render({{"schema", kSchema},
                         {"command", "decompose"},
                         {"input", print_poly(p)},
                         {"m", args.m},
                         {"strategy", args.strategy == Strategy::direct ? "direct" : "sequential"},
                         {"components", components},
                         {"reconstruction_check", exact ? "exact" : "mismatch"}});
    return out;
  });
}

CommandResult cmd_integrate(const IntegrateArgs& args) {
  if (args.manifold != "stiefel2" && args.manifold != "sphere") {
    return usage_error("unknown manifold '" + args.manifold + "' (stiefel2 or sphere)");
  }
  if (args.manifold == "sphere" && args.mc_samples) {
    return usage_error("--mc-samples applies to the stiefel2 manifold only");
  }
  if (args.mc_samples && *args.mc_samples == 0) return usage_error("--mc-samples must be positive");
  return guarded([&]() -> CommandResult {
    if (args.manifold == "stiefel2") require_operator_dimension(args.m);
    const Polynomial p = parse_poly(args.poly, args.m);
    json doc = {{"schema", kSchema},
                {"command", "integrate"},
                {"input", print_poly(p)},
                {"m", args.m},
                {"manifold", args.manifold}};
    std::string text;
    if (args.manifold == "sphere") {
      const SphereIntegral s = sphere_integrate(p);
      doc["value"] = s.to_string();
      doc["coefficient"] = s.coefficient.to_string();
      doc["pi_power"] = s.pi_power;
      doc["mean"] = s.mean.to_string();
      text = s.to_string() + "\n";
    } else {
      std::optional<McOptions> mc;
      if (args.mc_samples) mc = McOptions{*args.mc_samples, args.seed, 1};
      const QuadratureReport r = stiefel_integrate(p, mc);
      doc["value"] = r.pizzetti_value.to_string();
      text = r.pizzetti_value.to_string() + "\n";
      if (r.monte_carlo) {
        const McEstimate& e = *r.monte_carlo;
        json est = {{"samples", e.samples}, {"seed", args.seed}, {"estimate", e.mean},
                    {"stderr", e.std_error}};
        if (!r.pizzetti_value.is_real() || e.mean_imag != 0.0) {
          est["estimate_imag"] = e.mean_imag;
          est["stderr_imag"] = e.std_error_imag;
        }
        doc["monte_carlo"] = est;
        std::ostringstream line;
        line << "monte carlo: " << e.mean << " +- " << e.std_error << " (" << e.samples
             << " samples, seed " << args.seed << ")\n";
        text += line.str();
      }
    }
    CommandResult out;
    out.output = args.format == Format::json ? render(doc) : text;
    return out;
  });
}

CommandResult cmd_verify(const VerifyArgs& args) {
  if (args.options.max_bidegree < 0) return usage_error("--max-bidegree must be non-negative");
  if (args.options.samples < 0) return usage_error("--samples must be non-negative");
  return guarded([&]() -> CommandResult {
    const CheckReport report = run_suite(args.suite, args.options);
    CommandResult out;
    out.exit_code = report.all_passed() ? kExitOk : kExitFailure;
    if (args.format == Format::text) {
      std::ostringstream text;
      text << suite_name(args.suite) << ": " << report.size() - report.failures() << "/"
           << report.size() << " checks passed\n";
      for (const auto& r : report.results()) {
        if (!r.passed) text << "FAIL " << r.name << ": " << r.detail << "\n";
      }
      out.output = text.str();
      return out;
    }
    json results = json::array();
    for (const auto& r : report.results()) {
      json entry = {{"name", r.name}, {"passed", r.passed}};
      if (!r.passed) entry["counterexample"] = r.detail;
      results.push_back(std::move(entry));
    }
    out.output = render({{"schema", kSchema},
                         {"command", "verify"},
                         {"suite", suite_name(args.suite)},
                         {"m", args.options.m},
                         {"max_bidegree", args.options.max_bidegree},
                         {"seed", args.options.seed},
                         {"samples", args.options.samples},
                         {"checks", report.size()},
                         {"failures", report.failures()},
                         {"passed", report.all_passed()},
                         {"results", results}});
    return out;
  });
}

}  // namespace harmonic2v::cli
