#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "harmonic2v/report.hpp"

namespace harmonic2v {

// Machine-checkable suites over the exact identities of the library. Every
// function returns one CheckResult per identity instance; failures carry the
// offending input in `detail`.

/// Operator-chain oracle for the ladder coefficients: for every highest
/// weight vector H of H_{k,l} with k <= max_k, l <= min(k, max_l), and every
/// cell C^i S_u^j H with i <= max_i, j <= min(max_j, k - l), compares S_x, A
/// and A^p S_x^q on the cell against phi, c, psi and alpha.
CheckReport verify_ladder_coefficients(int m, int max_k, int max_l, int max_i, int max_j);

/// Master projection onto H_{k,l} for k <= max_k, l <= min(k, max_l): identity
/// on the highest weight vector and on a rotated copy of it, zero on every cell
/// C^i S_u^j H_{k-i+j, l-i-j} with 1 <= i + j <= max_steps (also rotated).
CheckReport verify_master_projection(int m, int max_k, int max_l, int max_steps);

/// Vanishing of the appendix double sum G over k <= max_k, l <= min(k, max_l),
/// 1 <= i + j <= min(l, max_steps).
CheckReport verify_g_grid(int m, int max_k, int max_l, int max_steps);

/// Contiguous relation, Whipple's transformation and the 3-balanced to
/// 1-balanced product identity (n = 1..3, generic z and z = 1) on `draws`
/// random non-integer rational parameter sets each.
CheckReport verify_hypergeometric_identities(int draws, std::uint64_t seed);

/// Round trip and pairwise orthogonality of decompose_full on `per_bidegree`
/// random polynomials of every bidegree (k,l) <= (max_k, max_l).
CheckReport verify_decomposition(int m, int max_k, int max_l, int per_bidegree,
                                 std::uint64_t seed, bool round_trip, bool orthogonality);

/// <Pi p, q>_F == <p, Pi q>_F on random double harmonic pairs of every
/// bidegree (k,l) <= (max_k, max_l) with k >= l.
CheckReport verify_projection_self_adjoint(int m, int max_k, int max_l, int pairs,
                                           std::uint64_t seed);

/// The six quadratic relations on `samples` random double harmonics with
/// bidegrees drawn from [0, max_degree]^2.
CheckReport verify_relations_random(int m, int max_degree, int samples, std::uint64_t seed);

/// Exact identities of the Stiefel functional (normalisation, |x|^2, |u|^2 and
/// <u,x> multiplication, rotation and block-swap invariance) on `samples`
/// random polynomials of bidegree <= (max_degree, max_degree).
CheckReport verify_stiefel_identities(int m, int max_degree, int samples, std::uint64_t seed);

/// C^beta[1] against its Gegenbauer closed form for beta <= max_beta, zero
/// constant term for odd beta, and A^{2b} C^{2b}[1] against the ladder product.
CheckReport verify_gegenbauer_embedding(int m, int max_beta);

enum class Suite { relations, ladder, appendix, orthogonality, pizzetti };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite suite);

struct SuiteOptions {
  int m = 5;
  /// Largest bidegree component examined; suite specific, see run_suite.
  int max_bidegree = 3;
  std::uint64_t seed = 1;
  int samples = 20;
};

/// relations:     verify_relations_random(m, max_bidegree, samples, seed)
/// ladder:        every non-trivial ladder cell C^i S_u^j H_{k,l} (i + j >= 1)
///                whose bidegree is <= (max_bidegree, max_bidegree): coefficient
///                oracle and annihilation by the master projection
/// appendix:      G grid with k <= max_bidegree, l <= min(k, 3), i + j <= 3, and
///                max(samples, 10) hypergeometric parameter draws
/// orthogonality: decompositions (2 per bidegree) and Pi self-adjointness
///                (samples / 4 pairs per bidegree) up to max_bidegree
/// pizzetti:      Stiefel identities and the Gegenbauer embedding (beta <= 2 *
///                max_bidegree)
CheckReport run_suite(Suite suite, const SuiteOptions& options);

}  // namespace harmonic2v
