#include "harmonic2v/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "harmonic2v/errors.hpp"
#include "harmonic2v/fischer.hpp"
#include "harmonic2v/hypergeometric.hpp"
#include "harmonic2v/ladder.hpp"
#include "harmonic2v/pizzetti.hpp"
#include "harmonic2v/random_poly.hpp"
#include "harmonic2v/rational_util.hpp"
#include "harmonic2v/simplicial.hpp"
#include "harmonic2v/transvector.hpp"

namespace harmonic2v {

namespace {

using G = GeneratorTag;

std::string label(std::initializer_list<std::pair<const char*, long>> fields) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, value] : fields) {
    out << (first ? "" : " ") << name << "=" << value;
    first = false;
  }
  return out.str();
}

Polynomial cell(int i, int j, const Polynomial& h) {
  return apply_generator_power(G::c, i, apply_generator_power(G::s_u, j, h));
}

// Product of 3-4-5 Givens rotations in the planes (0,2), (1,3), (2,4), ...;
// a rational element of SO(m) moving every coordinate.
std::vector<std::vector<mpq_class>> mixing_rotation(int m) {
  std::vector<std::vector<mpq_class>> g(m, std::vector<mpq_class>(m, 0));
  for (int i = 0; i < m; ++i) g[i][i] = 1;
  for (int a = 0; a + 2 < m; ++a) {
    const int b = a + 2;
    std::vector<std::vector<mpq_class>> next = g;
    for (int col = 0; col < m; ++col) {
      next[a][col] = rational(3, 5) * g[a][col] - rational(4, 5) * g[b][col];
      next[b][col] = rational(4, 5) * g[a][col] + rational(3, 5) * g[b][col];
    }
    g = std::move(next);
  }
  return g;
}

std::string mismatch(const Polynomial& got, const Polynomial& want) {
  return "got " + got.to_string() + " expected " + want.to_string();
}

void check_equal(CheckReport& report, std::string name, const Polynomial& got,
                 const Polynomial& want) {
  const bool ok = got == want;
  report.add(std::move(name), ok, ok ? std::string{} : mismatch(got, want));
}

void check_zero(CheckReport& report, std::string name, const Polynomial& got) {
  const bool ok = got.is_zero();
  report.add(std::move(name), ok, ok ? std::string{} : "got " + got.to_string());
}

void ladder_cell_checks(CheckReport& report, int m, int k, int l, int i, int j,
                        const Polynomial& h) {
  const std::string where =
      label({{"m", m}, {"k", k}, {"l", l}, {"i", i}, {"j", j}});
  const Polynomial v = cell(i, j, h);
  auto scaled = [&](const mpq_class& q, int di, int dj) {
    return GaussianRational(q) * cell(i - di, j - dj, h);
  };
  if (j >= 1) {
    check_equal(report, "phi " + where, apply_generator(G::s_x, v),
                scaled(ladder_phi(i, j, k, l, m), 0, 1));
  }
  if (i >= 1) {
    check_equal(report, "psi " + where, apply_generator(G::a, v),
                scaled(ladder_psi(i, j, k, l, m), 1, 0));
    if (j == 0) {
      check_equal(report, "c " + where, apply_generator(G::a, v), scaled(ladder_c(i, k, l, m), 1, 0));
    }
  }
  for (int p = 0; p <= i; ++p) {
    for (int q = 0; q <= j; ++q) {
      if (p + q == 0) continue;
      const Polynomial w = apply_generator_power(G::a, p, apply_generator_power(G::s_x, q, v));
      check_equal(report, "alpha " + where + " " + label({{"p", p}, {"q", q}}), w,
                  scaled(ladder_alpha(i, j, p, q, k, l, m), p, q));
    }
  }
}

// Non-integer rational n/d, d in {3, 5, 7, 11} and d != avoid_den.
mpq_class draw(std::mt19937_64& rng, long avoid_den = 0) {
  static const long dens[] = {3, 5, 7, 11};
  long d = avoid_den;
  while (d == avoid_den) d = dens[std::uniform_int_distribution<int>(0, 3)(rng)];
  long n = 0;
  while (n % d == 0) n = std::uniform_int_distribution<long>(-40, 40)(rng);
  return rational(n, d);
}

std::string params(std::initializer_list<mpq_class> values) {
  std::string out;
  for (const auto& v : values) out += (out.empty() ? "" : ",") + v.get_str();
  return out;
}

void check_identity(CheckReport& report, std::string name, const IdentityCheck& c) {
  const bool ok = c.holds();
  report.add(std::move(name), ok,
             ok ? std::string{} : "lhs " + c.lhs.get_str() + " rhs " + c.rhs.get_str());
}

}  // namespace

CheckReport verify_ladder_coefficients(int m, int max_k, int max_l, int max_i, int max_j) {
  CheckReport report;
  for (int k = 0; k <= max_k; ++k) {
    for (int l = 0; l <= std::min(k, max_l); ++l) {
      const Polynomial h = highest_weight_vector(k, l, m);
      for (int i = 0; i <= max_i; ++i) {
        for (int j = 0; j <= std::min(max_j, k - l); ++j) {
          if (i + j > 0) ladder_cell_checks(report, m, k, l, i, j, h);
        }
      }
    }
  }
  return report;
}

CheckReport verify_master_projection(int m, int max_k, int max_l, int max_steps) {
  CheckReport report;
  const auto g = mixing_rotation(m);
  for (int k = 0; k <= max_k; ++k) {
    for (int l = 0; l <= std::min(k, max_l); ++l) {
      const std::string where = label({{"m", m}, {"k", k}, {"l", l}});
      const Polynomial h = highest_weight_vector(k, l, m);
      check_equal(report, "Pi identity " + where, master_projection(h), h);
      const Polynomial hg = substitute_linear(h, g);
      check_equal(report, "Pi identity rotated " + where, master_projection(hg), hg);
      for (int i = 0; i <= max_steps; ++i) {
        for (int j = 0; i + j <= max_steps; ++j) {
          const int kc = k - i + j;
          const int lc = l - i - j;
          if (i + j == 0 || lc < 0 || kc < lc) continue;
          const std::string at = where + " " + label({{"i", i}, {"j", j}});
          const Polynomial v = cell(i, j, highest_weight_vector(kc, lc, m));
          check_zero(report, "Pi kills cell " + at, master_projection(v));
          check_zero(report, "Pi kills rotated cell " + at, master_projection(substitute_linear(v, g)));
        }
      }
    }
  }
  return report;
}

CheckReport verify_g_grid(int m, int max_k, int max_l, int max_steps) {
  CheckReport report;
  for (int k = 0; k <= max_k; ++k) {
    for (int l = 0; l <= std::min(k, max_l); ++l) {
      for (int i = 0; i <= max_steps; ++i) {
        for (int j = 0; i + j <= std::min(l, max_steps); ++j) {
          if (i + j == 0) continue;
          const mpq_class value = g_sum(k, l, i, j, m);
          report.add("G vanishes " + label({{"m", m}, {"k", k}, {"l", l}, {"i", i}, {"j", j}}),
                     sgn(value) == 0, sgn(value) == 0 ? std::string{} : "G = " + value.get_str());
        }
      }
    }
  }
  return report;
}

CheckReport verify_hypergeometric_identities(int draws, std::uint64_t seed) {
  CheckReport report;
  std::mt19937_64 rng(seed);
  for (int n = 0; n < draws; ++n) {
    const mpq_class a = draw(rng), b = draw(rng), c = draw(rng);
    const mpq_class e = draw(rng), f = draw(rng), g = draw(rng);
    const int d = -1 - (n % 4);
    check_identity(report, "contiguous (" + params({a, b, c, d, e, f, g}) + ")",
                   verify_contiguous(a, b, c, d, e, f, g));
  }
  int whipple = 0;
  for (int attempt = 0; whipple < draws && attempt < 20 * draws; ++attempt) {
    const int n = 1 + attempt % 3;
    const mpq_class a = draw(rng), b = draw(rng), z = draw(rng), u = draw(rng), v = draw(rng);
    const mpq_class w = a + b - z - n + 1 - u - v;
    try {
      const IdentityCheck c = verify_whipple(a, b, z, n, u, v, w);
      check_identity(report, "Whipple (" + params({a, b, z, n, u, v, w}) + ")", c);
      ++whipple;
    } catch (const LowerParameterPole&) {
    } catch (const GammaPole&) {
    }
  }
  for (int n = 0; n < draws; ++n) {
    const mpq_class a = draw(rng);
    const mpq_class b = draw(rng, a.get_den().get_si());
    const mpq_class c = draw(rng), z = draw(rng);
    for (int order = 1; order <= 3; ++order) {
      const std::string p = "(" + params({a, b, c, z, order}) + ")";
      check_identity(report, "product identity " + p, verify_product_identity(a, b, c, z, order));
      const auto at_one = verify_product_identity(a, b, c, 1, order);
      const auto unit = verify_product_identity_at_one(a, b, c, order);
      check_identity(report, "z=1 product identity " + p, unit[0]);
      check_identity(report, "z=1 closed 3F2 " + p, unit[1]);
      check_identity(report, "z=1 agrees with generic z " + p,
                     {unit[0].lhs - unit[0].rhs, at_one.lhs - at_one.rhs});
    }
  }
  return report;
}

CheckReport verify_decomposition(int m, int max_k, int max_l, int per_bidegree,
                                 std::uint64_t seed, bool round_trip, bool orthogonality) {
  CheckReport report;
  std::mt19937_64 rng(seed);
  for (int k = 0; k <= max_k; ++k) {
    for (int l = 0; l <= max_l; ++l) {
      for (int n = 0; n < per_bidegree; ++n) {
        const Polynomial p = random_bihomogeneous(rng, m, {k, l}, {.terms = 4, .complex = true});
        const DecompositionResult d = decompose_full(p);
        const std::string where = label({{"m", m}, {"k", k}, {"l", l}, {"sample", n}});
        if (round_trip) check_equal(report, "round trip " + where, reconstruct(d), p);
        if (orthogonality) {
          const CheckReport pairs = verify_component_orthogonality(d);
          std::string detail;
          for (const auto& r : pairs.results()) {
            if (!r.passed) detail += r.name + ": " + r.detail + "; ";
          }
          report.add("orthogonality " + where + " (" + std::to_string(pairs.size()) + " pairs)",
                     pairs.all_passed(), detail.empty() ? detail : detail + "input " + p.to_string());
        }
      }
    }
  }
  return report;
}

CheckReport verify_projection_self_adjoint(int m, int max_k, int max_l, int pairs,
                                           std::uint64_t seed) {
  CheckReport report;
  std::mt19937_64 rng(seed);
  for (int k = 0; k <= max_k; ++k) {
    for (int l = 0; l <= std::min(k, max_l); ++l) {
      for (int n = 0; n < pairs; ++n) {
        const RandomPolyOptions opts{.terms = 3, .complex = true};
        const Polynomial p = random_double_harmonic(rng, m, {k, l}, opts);
        const Polynomial q = random_double_harmonic(rng, m, {k, l}, opts);
        const GaussianRational lhs = fischer_inner_product(master_projection(p), q);
        const GaussianRational rhs = fischer_inner_product(p, master_projection(q));
        const bool ok = lhs == rhs;
        report.add("Pi self-adjoint " + label({{"m", m}, {"k", k}, {"l", l}, {"sample", n}}), ok,
                   ok ? std::string{}
                      : "p " + p.to_string() + " q " + q.to_string() + " <Pi p,q> " +
                            lhs.to_string() + " <p,Pi q> " + rhs.to_string());
      }
    }
  }
  return report;
}

CheckReport verify_relations_random(int m, int max_degree, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Polynomial> inputs;
  for (int n = 0; n < samples; ++n) {
    const Bidegree bd{deg(rng), deg(rng)};
    inputs.push_back(random_double_harmonic(rng, m, bd, {.terms = 3, .complex = true}));
  }
  return verify_quadratic_relations(inputs);
}

CheckReport verify_stiefel_identities(int m, int max_degree, int samples, std::uint64_t seed) {
  CheckReport report;
  auto check = [&](std::string name, const GaussianRational& got, const GaussianRational& want,
                   const Polynomial& p) {
    const bool ok = got == want;
    report.add(std::move(name), ok,
               ok ? std::string{}
                  : "p " + p.to_string() + " got " + got.to_string() + " expected " + want.to_string());
  };
  const Polynomial one = Polynomial::constant(m, 1);
  check("I(1) = 1", stiefel_integral(one), 1, one);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, max_degree);
  const auto g = mixing_rotation(m);
  const Polynomial r2x = Polynomial::norm_sq_x(m);
  const Polynomial r2u = Polynomial::norm_sq_u(m);
  const Polynomial t = Polynomial::inner_ux(m);
  for (int n = 0; n < samples; ++n) {
    Polynomial p = random_bihomogeneous(rng, m, {deg(rng), deg(rng)}, {.terms = 3, .complex = true});
    p += random_bihomogeneous(rng, m, {2 * (deg(rng) / 2), 2 * (deg(rng) / 2)}, {.terms = 3});
    const GaussianRational value = stiefel_integral(p);
    const std::string where = label({{"m", m}, {"sample", n}});
    check("I(|x|^2 p) = I(p) " + where, stiefel_integral(r2x * p), value, p);
    check("I(|u|^2 p) = I(p) " + where, stiefel_integral(r2u * p), value, p);
    check("I(<u,x> p) = 0 " + where, stiefel_integral(t * p), 0, p);
    check("I(p o g) = I(p) " + where, stiefel_integral(substitute_linear(p, g)), value, p);
    check("I(swap p) = I(p) " + where, stiefel_integral(swap_blocks(p)), value, p);
  }
  return report;
}

CheckReport verify_gegenbauer_embedding(int m, int max_beta) {
  CheckReport report;
  Polynomial iterated = Polynomial::constant(m, 1);
  mpq_class ladder_product = 1;
  for (int beta = 1; beta <= max_beta; ++beta) {
    iterated = apply_generator(G::c, iterated);
    const Polynomial closed = c_power_one(beta, m);
    const std::string where = label({{"m", m}, {"beta", beta}});
    check_equal(report, "C^beta[1] closed form " + where, closed, iterated);
    if (beta % 2 == 1) {
      const bool ok = closed.constant_term().is_zero();
      report.add("odd beta has no constant term " + where, ok,
                 ok ? std::string{} : closed.constant_term().to_string());
    }
    ladder_product *= ladder_c(beta, 0, 0, m);
    if (beta % 2 == 0) {
      const mpq_class value = a_c_power_constant(beta / 2, m);
      report.add("A^{2b}C^{2b}[1] " + label({{"m", m}, {"b", beta / 2}}), value == ladder_product,
                 value == ladder_product
                     ? std::string{}
                     : "closed " + value.get_str() + " ladder " + ladder_product.get_str());
    }
  }
  return report;
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::relations, Suite::ladder, Suite::appendix, Suite::orthogonality,
                  Suite::pizzetti}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::relations: return "relations";
    case Suite::ladder: return "ladder";
    case Suite::appendix: return "appendix";
    case Suite::orthogonality: return "orthogonality";
    case Suite::pizzetti: return "pizzetti";
  }
  return "unknown";
}

CheckReport run_suite(Suite suite, const SuiteOptions& o) {
  require_operator_dimension(o.m);
  if (o.max_bidegree < 0) throw InvalidArgument("max bidegree must be non-negative");
  if (o.samples < 0) throw InvalidArgument("sample count must be non-negative");
  const int b = o.max_bidegree;
  switch (suite) {
    case Suite::relations:
      return verify_relations_random(o.m, b, o.samples, o.seed);
    case Suite::ladder: {
      CheckReport report;
      for (int k = 0; k <= 2 * b; ++k) {
        for (int l = 0; l <= std::min(k, b); ++l) {
          std::optional<Polynomial> h;
          for (int i = 0; l + i <= b; ++i) {
            for (int j = 0; j <= k - l && l + i + j <= b; ++j) {
              const int p = k + i - j;
              const int q = l + i + j;
              if (i + j == 0 || p > b) continue;
              if (!h) h = highest_weight_vector(k, l, o.m);
              ladder_cell_checks(report, o.m, k, l, i, j, *h);
              if (p >= q) {
                check_zero(report,
                           "Pi kills cell " +
                               label({{"m", o.m}, {"k", k}, {"l", l}, {"i", i}, {"j", j}}),
                           master_projection(cell(i, j, *h)));
              }
            }
          }
        }
      }
      return report;
    }
    case Suite::appendix: {
      CheckReport report = verify_g_grid(o.m, b, 3, 3);
      report.merge(verify_hypergeometric_identities(std::max(o.samples, 10), o.seed));
      return report;
    }
    case Suite::orthogonality: {
      CheckReport report = verify_decomposition(o.m, b, b, 2, o.seed, true, true);
      report.merge(verify_projection_self_adjoint(o.m, b, b, std::max(1, o.samples / 4), o.seed + 1));
      return report;
    }
    case Suite::pizzetti: {
      CheckReport report = verify_stiefel_identities(o.m, b, o.samples, o.seed);
      report.merge(verify_gegenbauer_embedding(o.m, 2 * b));
      return report;
    }
  }
  return {};
}

}  // namespace harmonic2v
