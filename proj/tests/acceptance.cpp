// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "harmonic2v/cli/expression.hpp"
#include "harmonic2v/fischer.hpp"
#include "harmonic2v/ladder.hpp"
#include "harmonic2v/monte_carlo.hpp"
#include "harmonic2v/pizzetti.hpp"
#include "harmonic2v/random_poly.hpp"
#include "harmonic2v/rational_util.hpp"
#include "harmonic2v/simplicial.hpp"
#include "harmonic2v/transvector.hpp"
#include "harmonic2v/verify.hpp"

using namespace harmonic2v;

namespace {

struct Outcome {
  CheckReport report;
  std::string note;
};

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0 = no limit
  std::function<Outcome()> run;
};

void print_failures(const CheckReport& r) {
  int shown = 0;
  for (const auto& c : r.results()) {
    if (c.passed) continue;
    if (shown++ == 5) {
      std::printf("      ... %zu failures in total\n", r.failures());
      return;
    }
    std::printf("      %s: %.300s\n", c.name.c_str(), c.detail.c_str());
  }
}

Outcome criterion_worked_example() {
  const int m = 6;
  Outcome out;
  CheckReport& r = out.report;
  struct Cell {
    int i, j;
    mpq_class normalizer;
    const char* name;
  };
  const std::vector<Cell> cells = {
      {0, 2, rational(1, 40), "H(5,0)"},
      {1, 1, rational(m * (m + 4), 3 * (m - 2) * (m + 1) * (m + 6)), "H(3,0)"},
      {0, 1, rational(1, 3), "H(4,1)"},
      {2, 0, rational(1, 2 * (m - 1) * (m + 4)), "H(1,0)"},
      {1, 0, rational(m + 2, (m + 1) * (m + 4)), "H(2,1)"},
  };
  const std::vector<mpq_class> expected = {rational(1, 40), rational(5, 84), rational(1, 3),
                                           rational(1, 100), rational(4, 35)};
  std::mt19937_64 rng(20260601);
  const Polynomial p = random_bihomogeneous(rng, m, {3, 2}, {.terms = 6});
  const Polynomial hprime = double_fischer(p).front().part;  // |x|^0 |u|^0 part
  const DecompositionResult d = decompose_full(p);
  for (std::size_t n = 0; n < cells.size(); ++n) {
    const Cell& c = cells[n];
    const int k = 3 - c.i + c.j;
    const int l = 2 - c.i - c.j;
    const mpq_class from_alpha = 1 / ladder_alpha(c.i, c.j, c.i, c.j, k, l, m);
    r.add(std::string("normalizer ") + c.name, from_alpha == expected[n] && c.normalizer == expected[n],
          "alpha gives " + from_alpha.get_str() + ", expected " + expected[n].get_str());
    const Polynomial predicted =
        GaussianRational(expected[n]) *
        master_projection(apply_generator_power(
            GeneratorTag::a, c.i, apply_generator_power(GeneratorTag::s_x, c.j, hprime)));
    bool found = false;
    for (const auto& comp : d.components) {
      if (comp.a == 0 && comp.b == 0 && comp.component.index == LadderIndex{c.i, c.j, k, l}) {
        found = comp.component.harmonic == predicted;
      }
    }
    r.add(std::string("pipeline component ") + c.name + " = normalizer * Pi A^i S_x^j H'", found);
  }
  r.add("reconstruction", reconstruct(d) == p);
  out.note = "m=6, random P(3,2) with " + std::to_string(p.size()) + " terms";
  return out;
}

Outcome criterion_round_trip() {
  Outcome out;
  int total = 0;
  for (int m : {5, 6, 7}) {
    out.report.merge(verify_decomposition(m, 4, 4, 50, 1000 + m, true, false));
  }
  total = static_cast<int>(out.report.size());
  out.note = std::to_string(total) + " polynomials, bidegrees <= (4,4), m in {5,6,7}";
  return out;
}

Outcome criterion_relations() {
  Outcome out;
  for (int m : {5, 6, 7}) out.report.merge(verify_relations_random(m, 4, 20, 300 + m));
  out.note = "20 double harmonics per m, bidegree <= (4,4), 6 relations each";
  return out;
}

Outcome criterion_ladder_oracle() {
  Outcome out;
  for (int m : {5, 6}) out.report.merge(verify_ladder_coefficients(m, 3, 2, 2, 2));
  out.note = "(k,l) <= (3,2), i,j <= 2, m in {5,6}";
  return out;
}

Outcome criterion_master_projection_check() {
  Outcome out;
  for (int m : {5, 6}) out.report.merge(verify_master_projection(m, 4, 2, 3));
  out.note = "(k,l) <= (4,2), 1 <= i+j <= 3, m in {5,6}, plus rotated copies";
  return out;
}

Outcome criterion_orthogonality() {
  Outcome out;
  for (int m : {5, 6, 7}) out.report.merge(verify_decomposition(m, 3, 3, 3, 600 + m, false, true));
  out.note = "3 random P(k,l) per bidegree <= (3,3), m in {5,6,7}";
  return out;
}

Outcome criterion_self_adjoint() {
  Outcome out;
  for (int m : {5, 6}) out.report.merge(verify_projection_self_adjoint(m, 3, 3, 20, 700 + m));
  out.note = "20 pairs per bidegree (k,l) <= (3,3) with k >= l, m in {5,6}";
  return out;
}

Outcome criterion_appendix() {
  Outcome out;
  for (int m : {5, 6, 7}) out.report.merge(verify_g_grid(m, 4, 3, 3));
  const std::size_t grid = out.report.size();
  out.report.merge(verify_hypergeometric_identities(12, 800));
  out.note = std::to_string(grid) + " G tuples, 12 parameter draws per identity";
  return out;
}

Outcome criterion_gegenbauer() {
  Outcome out;
  for (int m : {5, 6}) out.report.merge(verify_gegenbauer_embedding(m, 6));
  out.note = "beta <= 6, m in {5,6}";
  return out;
}

Outcome criterion_pizzetti_vs_monte_carlo() {
  const int m = 5;
  Outcome out;
  std::vector<Monomial> monos;
  Monomial cur(m);
  auto enumerate = [&](auto&& self, int slot, int left) -> void {
    if (slot == 2 * m) {
      monos.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.set(slot, e);
      self(self, slot + 1, left - e);
    }
    cur.set(slot, 0);
  };
  enumerate(enumerate, 0, 6);

  McOptions options;
  options.samples = 1'000'000;
  options.seed = 0x5eed2026;
  const auto estimates = stiefel_monte_carlo_monomials(monos, options);
  std::size_t sampled = 0;
  std::size_t constant = 0;
  double worst = 0.0;
  for (std::size_t n = 0; n < monos.size(); ++n) {
    const GaussianRational exact = stiefel_integral(Polynomial::monomial(monos[n]));
    const double value = exact.re().get_d();
    const McEstimate& e = estimates[n];
    const double gap = std::abs(value - e.mean);
    // 1e-12 absorbs double rounding on classes that are constant on the manifold.
    const bool ok = exact.is_real() && gap <= 3 * e.std_error + 1e-12;
    if (e.std_error > 1e-9) {
      ++sampled;
      worst = std::max(worst, gap / e.std_error);
    } else if (e.std_error > 0) {
      ++constant;
    }
    out.report.add("MC " + monos[n].to_string(), ok,
                   "exact " + exact.to_string() + " mc " + std::to_string(e.mean) + " +- " +
                       std::to_string(e.std_error));
  }
  out.report.merge(verify_stiefel_identities(m, 4, 20, 900));
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu monomials: %zu sampled, %zu constant on V2, rest exactly 0; 1e6 samples, "
                "seed 0x5eed2026, max |gap|/stderr %.2f",
                monos.size(), sampled, constant, worst);
  out.note = buf;
  return out;
}

Outcome criterion_sphere() {
  Outcome out;
  const SphereIntegral v = sphere_integrate(cli::parse_poly("1", 4));
  out.report.add("I1(1) at m=4 is 2 pi^2",
                 v.coefficient == 2 && v.pi_power == 2 && v.to_string() == "2 * pi^2", v.to_string());
  out.note = "value " + v.to_string() + ", mean " + v.mean.to_string();
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked P(3,2) example normalizers at m=6", 10, criterion_worked_example},
      {2, "round-trip reconstruction", 300, criterion_round_trip},
      {3, "quadratic relations", 0, criterion_relations},
      {4, "ladder coefficient oracle", 0, criterion_ladder_oracle},
      {5, "master projection", 0, criterion_master_projection_check},
      {6, "Fischer orthogonality of components", 0, criterion_orthogonality},
      {7, "master projection self-adjointness", 0, criterion_self_adjoint},
      {8, "appendix certification", 0, criterion_appendix},
      {9, "Gegenbauer embedding of C^beta[1]", 0, criterion_gegenbauer},
      {10, "Stiefel Pizzetti vs Monte Carlo", 120, criterion_pizzetti_vs_monte_carlo},
      {11, "classical sphere Pizzetti", 0, criterion_sphere},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    std::string error;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit_s <= 0 || secs < c.time_limit_s;
    const bool pass = error.empty() && outcome.report.size() > 0 && outcome.report.all_passed() && in_time;
    failed += pass ? 0 : 1;
    std::printf("criterion %2d %s  %s: %zu/%zu checks, %.2f s%s  [%s]\n", c.number,
                pass ? "PASS" : "FAIL", c.title.c_str(),
                outcome.report.size() - outcome.report.failures(), outcome.report.size(), secs,
                c.time_limit_s > 0 ? (" (limit " + std::to_string(static_cast<int>(c.time_limit_s)) + " s)").c_str() : "",
                error.empty() ? outcome.note.c_str() : ("exception: " + error).c_str());
    if (!pass) print_failures(outcome.report);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
