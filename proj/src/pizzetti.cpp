#include "harmonic2v/pizzetti.hpp"

#include "harmonic2v/errors.hpp"
#include "harmonic2v/fischer.hpp"
#include "harmonic2v/linear_operator.hpp"
#include "harmonic2v/rational_util.hpp"
#include "harmonic2v/transvector.hpp"

namespace harmonic2v {

Univariate gegenbauer(int beta, const mpq_class& lambda) {
  if (beta < 0) throw InvalidArgument("Gegenbauer degree must be non-negative");
  Univariate c(static_cast<std::size_t>(beta) + 1);
  mpq_class two_power = 1;
  for (int e = 0; e < beta % 2; ++e) two_power *= 2;
  for (int j = beta / 2; j >= 0; --j) {
    const int n = beta - 2 * j;
    c[n] = sign_power(j) * rising(lambda, beta - j) * two_power / (factorial(j) * factorial(n));
    two_power *= 4;
  }
  return c;
}

Polynomial c_power_one(int beta, int m) {
  require_operator_dimension(m);
  const Univariate g = gegenbauer(beta, half(m) - 1);
  const Polynomial t = Polynomial::inner_ux(m);
  const Polynomial r = Polynomial::norm_sq_x(m) * Polynomial::norm_sq_u(m);
  PolynomialBuilder out(m);
  for (int j = 0; 2 * j <= beta; ++j) {
    const int n = beta - 2 * j;
    out.add_scaled(power(t, n) * power(r, j), g[n] / g[beta]);
  }
  return std::move(out).build();
}

mpq_class a_c_power_constant(int beta, int m) {
  if (beta < 0) throw InvalidArgument("power must be non-negative");
  require_operator_dimension(m);
  const mpq_class h = half(m);
  return factorial(2 * beta) * (2 * beta + h - 1) / (h - 1) * rising(mpq_class(m - 2), 2 * beta);
}

mpq_class gamma_constant(int i, int m) {
  if (i < 0) throw InvalidArgument("index must be non-negative");
  require_operator_dimension(m);
  mpq_class den = 2 * factorial(i) * rising(mpq_class(m - 1), 2 * i - 1) *
                  rising(half(m) + i - 1, i + 1);
  for (int t = 0; t < i; ++t) den *= 4;
  return mpq_class(sign_power(i)) / den;
}

GaussianRational stiefel_integral(const Polynomial& p) {
  require_operator_dimension(p.m());
  GaussianRational total;
  for (const auto& [bd, part] : bidegree_split(p)) {
    if (bd.k % 2 != 0 || bd.l % 2 != 0) continue;
    for (const auto& comp : double_fischer(part)) {
      const int k = bd.k - 2 * comp.i;
      if (k != bd.l - 2 * comp.j) continue;
      // The normalised measure gives |x|^2 = |u|^2 = 1 on the manifold.
      Polynomial reduced = comp.part;
      for (int n = 0; n < k && !reduced.is_zero(); ++n) {
        reduced = apply_atom(OperatorAtom::cross_dd, reduced);
      }
      if (reduced.is_zero()) continue;
      total += reduced.constant_term() * GaussianRational(gamma_constant(k / 2, p.m()));
    }
  }
  return total;
}

QuadratureReport stiefel_integrate(const Polynomial& p, const std::optional<McOptions>& mc) {
  QuadratureReport report{stiefel_integral(p), std::nullopt};
  if (mc) report.monte_carlo = stiefel_monte_carlo(p, *mc);
  return report;
}

std::string SphereIntegral::to_string() const {
  if (coefficient.is_zero()) return "0";
  std::string c = coefficient.to_string();
  if (pi_power == 0) return c;
  if (!coefficient.is_real()) c = "(" + c + ")";
  return c + " * pi" + (pi_power == 1 ? "" : "^" + std::to_string(pi_power));
}

SphereIntegral sphere_integrate(const Polynomial& p) {
  const int m = p.m();
  if (!p.is_x_only()) throw InvalidArgument("sphere integration needs a polynomial in x only");
  // Gamma(k + m/2) = Gamma(h0) (h0)^{(k + m/2 - h0)} with Gamma(1/2) = sqrt(pi)
  // absorbed into the pi power.
  const mpq_class h = half(m);
  const mpq_class h0 = m % 2 == 0 ? mpq_class(1) : rational(1, 2);

  SphereIntegral out;
  out.pi_power = m / 2;
  Polynomial lap = p;
  mpq_class four_k_factorial = 1;
  for (int k = 0; !lap.is_zero(); ++k) {
    const GaussianRational value = lap.constant_term();
    if (!value.is_zero()) {
      const mpq_class shift = mpq_class(k) + h - h0;
      const mpq_class area_weight =
          2 / (four_k_factorial * rising(h0, static_cast<int>(shift.get_num().get_si())));
      out.coefficient += value * GaussianRational(area_weight);
      out.mean += value * GaussianRational(1 / (four_k_factorial * rising(h, k)));
    }
    lap = apply_atom(OperatorAtom::laplacian_x, lap);
    four_k_factorial *= 4 * (k + 1);
  }
  return out;
}

}  // namespace harmonic2v
