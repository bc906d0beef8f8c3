#pragma once

#include <span>
#include <string>
#include <vector>

#include "harmonic2v/euler_scale.hpp"
#include "harmonic2v/polynomial.hpp"

namespace harmonic2v {

/// The invariant differential/multiplication operators on two vector variables.
enum class OperatorAtom {
  laplacian_x,  // Delta_x
  laplacian_u,  // Delta_u
  norm_sq_x,    // multiplication by |x|^2
  norm_sq_u,    // multiplication by |u|^2
  inner_ux,     // multiplication by <u,x>
  cross_dd,     // <d_u, d_x>
  skew_ux,      // <u, d_x>
  skew_xu,      // <x, d_u>
  euler_x,      // E_x
  euler_u,      // E_u
};

/// Bidegree shift produced by an atom on a bihomogeneous operand.
Bidegree atom_shift(OperatorAtom atom);
std::string atom_name(OperatorAtom atom);

/// Applies a single atom (no Euler scaling involved).
Polynomial apply_atom(OperatorAtom atom, const Polynomial& p);

/// scale * atoms[0] * atoms[1] * ... ; the last atom acts first.
struct OperatorTerm {
  EulerRationalScale scale;
  std::vector<OperatorAtom> atoms;
};

/// Finite sum of Euler-scaled atom words.
///
/// Scales follow the B^{-1}A reading: a term's atom word is applied first and
/// its scale is then evaluated at the bidegree of that intermediate result.
class LinearOperator {
 public:
  explicit LinearOperator(int m) : m_(m) {}

  static LinearOperator identity(int m);
  static LinearOperator atom(int m, OperatorAtom a);
  static LinearOperator scalar(int m, EulerRationalScale s);
  static LinearOperator word(int m, EulerRationalScale s, std::vector<OperatorAtom> atoms);

  int m() const noexcept { return m_; }
  std::span<const OperatorTerm> terms() const noexcept { return terms_; }

  LinearOperator& operator+=(const LinearOperator& o);
  friend LinearOperator operator+(LinearOperator a, const LinearOperator& b) { return a += b; }
  friend LinearOperator operator-(LinearOperator a, const LinearOperator& b) {
    return a += b.scaled(-1);
  }
  /// Left multiplication by a scale evaluated at the final image bidegree.
  LinearOperator scaled(const EulerRationalScale& s) const;

  std::string to_string() const;

 private:
  int m_;
  std::vector<OperatorTerm> terms_;
};

/// Exact image of p; throws ZeroDenominator on an Euler-rational pole.
Polynomial apply(const LinearOperator& op, const Polynomial& p);

/// Operator whose action equals apply(a, apply(b, .)).
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);

inline LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
  return compose(a, b);
}

/// True iff (ab - ba - rhs) annihilates every sample.
bool commutator_check(const LinearOperator& a, const LinearOperator& b, const LinearOperator& rhs,
                      std::span<const Polynomial> samples);

}  // namespace harmonic2v
