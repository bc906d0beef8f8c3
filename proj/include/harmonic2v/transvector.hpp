#pragma once

#include <span>
#include <string>

#include "harmonic2v/linear_operator.hpp"
#include "harmonic2v/polynomial.hpp"
#include "harmonic2v/report.hpp"

namespace harmonic2v {

/// Generators of the transvector algebra acting on double harmonics.
enum class GeneratorTag { s_x, s_u, a, c };

Bidegree generator_shift(GeneratorTag g);
std::string generator_name(GeneratorTag g);

/// Explicit operator for a generator in dimension m (m > 4).
///
///   S_x = <x,du> - |x|^2 <du,dx> / (2E_x + m - 4)
///   S_u = <u,dx> - |u|^2 <du,dx> / (2E_u + m - 4)
///   A   = <du,dx>
///   C   = <u,x> - |x|^2 <u,dx>/(2E_x+m-4) - |u|^2 <x,du>/(2E_u+m-4)
///         + |x|^2 |u|^2 <du,dx> / ((2E_x+m-4)(2E_u+m-4))
///
/// Every Euler scale is read at the image bidegree.
LinearOperator generator_operator(GeneratorTag g, int m);

bool is_double_harmonic(const Polynomial& p);
/// Double harmonic and additionally killed by <du,dx> and <x,du>.
bool is_simplicial_harmonic(const Polynomial& p);

/// pi_x: projection onto the kernel of Delta_x along |x|^2 (per bihomogeneous part).
Polynomial extremal_projection_x(const Polynomial& p);
Polynomial extremal_projection_u(const Polynomial& p);
/// pi_s = pi_x pi_u.
Polynomial extremal_projection_s(const Polynomial& p);

/// Applies a generator; throws NotDoubleHarmonic unless p is double harmonic.
Polynomial apply_generator(GeneratorTag g, const Polynomial& p);
/// Same without the kernel check, for pipelines that maintain the invariant.
Polynomial apply_generator_unchecked(GeneratorTag g, const Polynomial& p);
/// g applied `times` times (unchecked).
Polynomial apply_generator_power(GeneratorTag g, int times, Polynomial p);

/// Checks the six quadratic relations (A S_x, A S_u, S_u C, S_x C, [S_x,S_u], A C)
/// on each bihomogeneous double-harmonic sample.
CheckReport verify_quadratic_relations(std::span<const Polynomial> samples);

}  // namespace harmonic2v
