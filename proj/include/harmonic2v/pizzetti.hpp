#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "harmonic2v/gaussian_rational.hpp"
#include "harmonic2v/monte_carlo.hpp"
#include "harmonic2v/polynomial.hpp"

namespace harmonic2v {

/// Coefficients of a univariate polynomial, index = power of t.
using Univariate = std::vector<mpq_class>;

/// Gegenbauer polynomial C_beta^lambda(t) with exact coefficients.
Univariate gegenbauer(int beta, const mpq_class& lambda);

/// C^beta[1], written through the Gegenbauer polynomial with lambda = m/2 - 1:
///   sum_j g_{beta-2j} / g_beta <u,x>^{beta-2j} (|x|^2 |u|^2)^j,
/// where g_n is the t^n coefficient of C_beta^lambda.
Polynomial c_power_one(int beta, int m);

/// The constant A^{2 beta} C^{2 beta}[1].
mpq_class a_c_power_constant(int beta, int m);

/// Weight of A^{2i} in the Stiefel Pizzetti formula; gamma_0 = 1.
mpq_class gamma_constant(int i, int m);

/// Exact average of p over V_2(R^m) with the normalised invariant measure.
GaussianRational stiefel_integral(const Polynomial& p);

struct QuadratureReport {
  GaussianRational pizzetti_value;
  std::optional<McEstimate> monte_carlo;
};

/// Exact integral, plus a Monte Carlo cross-check when options are given.
QuadratureReport stiefel_integrate(const Polynomial& p,
                                   const std::optional<McOptions>& mc = std::nullopt);

/// Integral over the unit sphere S^{m-1} (unnormalised surface measure) of a
/// polynomial in x only: coefficient * pi^{pi_power}, pi_power = floor(m/2).
struct SphereIntegral {
  GaussianRational coefficient;
  int pi_power = 0;
  /// Average over the sphere (always rational).
  GaussianRational mean;

  /// "2 * pi^2", "0", "(1+2i) * pi".
  std::string to_string() const;
};

SphereIntegral sphere_integrate(const Polynomial& p);

}  // namespace harmonic2v
