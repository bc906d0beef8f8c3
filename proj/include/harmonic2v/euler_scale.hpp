#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "harmonic2v/monomial.hpp"

namespace harmonic2v {

/// Polynomial with rational coefficients in the two formal symbols E_x, E_u
/// that stand for the Euler eigenvalues of a bihomogeneous operand.
class EulerPolynomial {
 public:
  EulerPolynomial() = default;
  EulerPolynomial(long c) : EulerPolynomial(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)
  EulerPolynomial(const mpq_class& c);                         // NOLINT(google-explicit-constructor)

  static EulerPolynomial ex();
  static EulerPolynomial eu();
  /// H_x = -(E_x + m/2).
  static EulerPolynomial hx(int m);
  /// H_u = -(E_u + m/2).
  static EulerPolynomial hu(int m);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept;
  mpq_class evaluate(const Bidegree& at) const;
  /// Substitutes E_x -> E_x + dx, E_u -> E_u + du.
  EulerPolynomial shifted(int dx, int du) const;

  EulerPolynomial& operator+=(const EulerPolynomial& o);
  EulerPolynomial& operator*=(const EulerPolynomial& o);
  friend EulerPolynomial operator+(EulerPolynomial a, const EulerPolynomial& b) { return a += b; }
  friend EulerPolynomial operator-(EulerPolynomial a, const EulerPolynomial& b) {
    return a += b * EulerPolynomial(-1);
  }
  friend EulerPolynomial operator*(EulerPolynomial a, const EulerPolynomial& b) { return a *= b; }
  friend bool operator==(const EulerPolynomial&, const EulerPolynomial&) = default;

  std::string to_string() const;

 private:
  // (power of E_x, power of E_u) -> nonzero coefficient
  std::map<std::pair<int, int>, mpq_class> coeffs_;
};

/// Quotient numerator/denominator of Euler polynomials, evaluated per
/// bihomogeneous component at the bidegree the operator's atoms land on.
class EulerRationalScale {
 public:
  EulerRationalScale() : num_(1), den_(1) {}
  EulerRationalScale(long c) : num_(c), den_(1) {}                  // NOLINT
  EulerRationalScale(const mpq_class& c) : num_(c), den_(1) {}      // NOLINT
  EulerRationalScale(EulerPolynomial num) : num_(std::move(num)), den_(1) {}  // NOLINT
  EulerRationalScale(EulerPolynomial num, EulerPolynomial den);

  const EulerPolynomial& numerator() const noexcept { return num_; }
  const EulerPolynomial& denominator() const noexcept { return den_; }

  /// Value at bidegree `at`; throws ZeroDenominator on a pole.
  mpq_class evaluate(const Bidegree& at) const;
  EulerRationalScale shifted(int dx, int du) const {
    return {num_.shifted(dx, du), den_.shifted(dx, du)};
  }

  friend EulerRationalScale operator*(const EulerRationalScale& a, const EulerRationalScale& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend EulerRationalScale operator/(const EulerRationalScale& a, const EulerRationalScale& b) {
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend EulerRationalScale operator+(const EulerRationalScale& a, const EulerRationalScale& b);
  EulerRationalScale operator-() const { return {num_ * EulerPolynomial(-1), den_}; }

  std::string to_string() const;

 private:
  EulerPolynomial num_;
  EulerPolynomial den_;
};

}  // namespace harmonic2v
