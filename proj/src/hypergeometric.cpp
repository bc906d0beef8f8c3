#include "harmonic2v/hypergeometric.hpp"

#include <optional>
#include <string>

#include "harmonic2v/errors.hpp"
#include "harmonic2v/ladder.hpp"
#include "harmonic2v/rational_util.hpp"

namespace harmonic2v {

namespace {

std::optional<long> nonpositive_integer_index(const mpq_class& q) {
  if (!is_nonpositive_integer(q)) return std::nullopt;
  const mpz_class neg = -q.get_num();
  if (!neg.fits_slong_p()) throw InvalidArgument("hypergeometric parameter out of range");
  return neg.get_si();
}

mpq_class pfq(std::vector<mpq_class> upper, std::vector<mpq_class> lower, mpq_class z) {
  return eval_pfq({std::move(upper), std::move(lower), std::move(z)});
}

}  // namespace

mpq_class eval_pfq(const PFQSpec& spec) {
  std::optional<long> stop;
  for (const auto& a : spec.upper) {
    if (auto n = nonpositive_integer_index(a); n && (!stop || *n < *stop)) stop = n;
  }
  if (!stop) {
    if (sgn(spec.argument) == 0) return 1;
    throw NonTerminating("no upper parameter is a non-positive integer");
  }
  for (const auto& b : spec.lower) {
    if (auto n = nonpositive_integer_index(b); n && *n < *stop) {
      throw LowerParameterPole("lower parameter " + b.get_str() + " vanishes before termination");
    }
  }

  mpq_class term = 1;
  mpq_class sum = 1;
  for (long j = 0; j < *stop; ++j) {
    for (const auto& a : spec.upper) term *= a + j;
    for (const auto& b : spec.lower) term /= b + j;
    term *= spec.argument;
    term /= j + 1;
    if (sgn(term) == 0) break;
    sum += term;
  }
  return sum;
}

IdentityCheck verify_contiguous(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                                const mpq_class& d, const mpq_class& e, const mpq_class& f,
                                const mpq_class& g) {
  IdentityCheck out;
  out.lhs = pfq({a, b, c, d}, {e - 1, f, g}, 1);
  out.rhs = pfq({a, b, c, d}, {e, f, g}, 1);
  const mpq_class coef = a * b * c * d;
  if (sgn(coef) != 0) {
    out.rhs += coef / ((e - 1) * e * f * g) *
               pfq({a + 1, b + 1, c + 1, d + 1}, {e + 1, f + 1, g + 1}, 1);
  }
  return out;
}

IdentityCheck verify_whipple(const mpq_class& a, const mpq_class& b, const mpq_class& z, int n,
                             const mpq_class& u, const mpq_class& v, const mpq_class& w) {
  if (n < 0) throw InvalidArgument("Whipple's transformation needs n >= 0");
  if (a + b - z - n + 1 != u + v + w) {
    throw InvalidArgument("Whipple's transformation needs a 1-balanced series");
  }
  const mpq_class den = rising(v, n) * rising(w, n);
  if (sgn(den) == 0) throw GammaPole("Gamma ratio in Whipple's prefactor has a pole");
  const mpq_class prefactor = rising(v + z, n) * rising(w + z, n) / den;

  IdentityCheck out;
  out.lhs = pfq({a, b, -z, mpq_class(-n)}, {u, v, w}, 1);
  out.rhs = prefactor * pfq({u - a, u - b, -z, mpq_class(-n)},
                            {u, 1 - v - z - n, 1 - w - z - n}, 1);
  return out;
}

IdentityCheck verify_product_identity(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                              const mpq_class& z, int n) {
  if (n < 1) throw InvalidArgument("identity is stated for n >= 1");
  const mpq_class ac = a + c;
  const mpq_class bc = b - c;
  IdentityCheck out;
  out.lhs = pfq({mpq_class(-1), ac, bc}, {a + n, b + n}, z) *
                pfq({mpq_class(1 - n), a + b + n + 1, ac, bc}, {a + 1, b + 1, a + b + 1}, z) -
            pfq({mpq_class(-n), a + b + n, ac, bc}, {a + 1, b + 1, a + b + 1}, z);
  const mpq_class coef = z * (z - 1) * (1 - n) * (a + b + n + 1) * ac * bc /
                         ((a + 1) * (b + 1) * (a + n) * (b + n));
  out.rhs = sgn(coef) == 0
                ? mpq_class(0)
                : coef * pfq({mpq_class(2 - n), a + b + n + 2, ac + 1, bc + 1},
                             {a + 2, b + 2, a + b + 1}, z);
  return out;
}

std::vector<IdentityCheck> verify_product_identity_at_one(const mpq_class& a, const mpq_class& b,
                                         const mpq_class& c, int n) {
  if (n < 1) throw InvalidArgument("identity is stated for n >= 1");
  const mpq_class ac = a + c;
  const mpq_class bc = b - c;
  const mpq_class f32 = pfq({mpq_class(-1), ac, bc}, {a + n, b + n}, 1);

  IdentityCheck product;
  product.lhs = f32 * pfq({mpq_class(1 - n), a + b + n + 1, ac, bc}, {a + 1, b + 1, a + b + 1}, 1);
  product.rhs = pfq({mpq_class(-n), a + b + n, ac, bc}, {a + 1, b + 1, a + b + 1}, 1);

  IdentityCheck closed;
  closed.lhs = f32;
  closed.rhs = 1 - ac * bc / ((a + n) * (b + n));
  return {product, closed};
}

mpq_class g_sum(int k, int l, int i, int j, int m) {
  if (m <= 4) throw InvalidDimension("G(k,l) needs m > 4");
  if (l < 0 || k < l) throw IndexOutOfRange("G(k,l) needs k >= l >= 0");
  if (i < 0 || j < 0 || i + j > l) throw IndexOutOfRange("G(k,l) needs 0 <= i + j <= l");
  const int kc = k - i + j;
  const int lc = l - i - j;
  const mpq_class h = half(m);
  mpq_class total = 0;
  for (int a = 0; a <= i; ++a) {
    for (int b = 0; b <= j; ++b) {
      // Reordering C^a S_u^b C^(i-a) S_u^(j-b) into C^i S_u^j.
      const int d = kc - j + b;
      mpq_class rho = 1;
      for (int t = 0; t < b; ++t) rho *= (d - t + h - 2) / (d - t + (i - a) + h - 2);
      total += ladder_alpha(i, j, a, b, kc, lc, m) * rho * ladder_beta(a, b, k, l, m);
    }
  }
  return total;
}

bool verify_g_vanishes(int k, int l, int i, int j, int m) {
  if (i + j < 1) throw IndexOutOfRange("G(k,l) vanishing is claimed for i + j >= 1");
  return sgn(g_sum(k, l, i, j, m)) == 0;
}

}  // namespace harmonic2v
