#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "harmonic2v/monomial.hpp"
#include "harmonic2v/polynomial.hpp"

namespace harmonic2v {

/// Sample mean and standard error of the real and imaginary parts.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double mean_imag = 0.0;
  double std_error_imag = 0.0;
  std::uint64_t samples = 0;
};

struct McOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  /// Worker threads; results do not depend on this value.
  unsigned workers = 1;
};

/// Samples per independently seeded block. Block b draws from
/// mt19937_64(seed_seq{seed_lo, seed_hi, b}) and block statistics are merged in
/// block order, so estimates are reproducible for any number of workers.
inline constexpr std::uint64_t kMcBlockSize = 4096;

/// Haar-random orthonormal frame (omega, eta) in R^m from Gaussian vectors and
/// Gram-Schmidt; degenerate draws are re-sampled.
void random_stiefel_frame(std::mt19937_64& rng, int m, double* omega, double* eta);

/// Plain Monte Carlo average of p over V_2(R^m) (probability measure).
McEstimate stiefel_monte_carlo(const Polynomial& p, const McOptions& options);

/// Same estimator for several polynomials on shared frames.
std::vector<McEstimate> stiefel_monte_carlo_batch(std::span<const Polynomial> polys,
                                                  const McOptions& options);

/// Exact average of a monomial over the finite symmetry group of the Stiefel
/// measure generated by coordinate permutations, coordinate sign changes (both
/// acting on x and u together) and the dihedral group of the frame plane
/// (omega <-> eta, sign changes). Zero when some x_i, u_i column has odd total
/// degree or the x-degree is odd.
Polynomial stiefel_symmetrize(const Monomial& mono);

/// Monte Carlo for monomials via their symmetrisations: vanishing ones get an
/// exact zero estimate, equal symmetrisations share one estimate, and the rest
/// are sampled together.
std::vector<McEstimate> stiefel_monte_carlo_monomials(std::span<const Monomial> monos,
                                                      const McOptions& options);

}  // namespace harmonic2v
