#pragma once

#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "harmonic2v/gaussian_rational.hpp"
#include "harmonic2v/monomial.hpp"

namespace harmonic2v {

/// Sparse polynomial in x_1..x_m, u_1..u_m with Gaussian-rational coefficients.
///
/// Terms are kept in descending graded-lex order with no zero coefficients,
/// so two polynomials are equal exactly when their term vectors are equal.
/// Values are immutable once built.
class Polynomial {
 public:
  using Term = std::pair<Monomial, GaussianRational>;

  /// The zero polynomial in dimension m; requires 4 < m <= kMaxDimension.
  explicit Polynomial(int m);

  /// Zero polynomial for any 1 <= m <= kMaxDimension. Only the classical
  /// one-variable sphere routines accept such low dimensions.
  static Polynomial low_dimensional(int m);

  static Polynomial constant(int m, const GaussianRational& c);
  static Polynomial variable(int m, Variable v);
  static Polynomial monomial(const Monomial& mono, const GaussianRational& c = 1);
  /// Sums duplicate monomials and drops zeros.
  static Polynomial from_terms(int m, std::vector<Term> terms);

  /// |x|^2 = x_1^2 + ... + x_m^2.
  static Polynomial norm_sq_x(int m);
  /// |u|^2.
  static Polynomial norm_sq_u(int m);
  /// <u, x> = u_1 x_1 + ... + u_m x_m.
  static Polynomial inner_ux(int m);

  int m() const noexcept { return m_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  GaussianRational coefficient(const Monomial& mono) const;
  GaussianRational constant_term() const;

  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_bihomogeneous() const;
  /// Bidegree of a nonzero bihomogeneous polynomial; throws otherwise.
  Bidegree bidegree() const;
  /// True when no u variable occurs.
  bool is_x_only() const;

  /// Coefficientwise complex conjugate.
  Polynomial conj() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  /// Human-readable text; re-parses with the CLI expression grammar.
  std::string to_string() const;

 private:
  Polynomial(int m, std::vector<Term> sorted_terms, bool)
      : m_(m), terms_(std::move(sorted_terms)) {}
  friend class PolynomialBuilder;

  int m_;
  std::vector<Term> terms_;
};

/// Hash-map accumulator used to assemble polynomials term by term.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(int m) : m_(m) {}

  int m() const noexcept { return m_; }
  void add(const Monomial& mono, const GaussianRational& c);
  void add(const Monomial& mono, GaussianRational&& c);
  void add(const Polynomial& p);
  void add_scaled(const Polynomial& p, const GaussianRational& c);
  void add_scaled(const Polynomial& p, const mpq_class& c);
  Polynomial build() &&;

 private:
  int m_;
  std::unordered_map<Monomial, GaussianRational, MonomialHash> acc_;
};

void require_same_dimension(const Polynomial& a, const Polynomial& b);

/// Throws InvalidDimension unless m > 4 (polynomials built with low_dimensional).
void require_operator_dimension(int m);

/// Exact partial derivative with respect to one variable.
Polynomial partial(const Polynomial& p, Variable v);

/// Bihomogeneous parts keyed by bidegree; the zero polynomial gives an empty map.
std::map<Bidegree, Polynomial> bidegree_split(const Polynomial& p);

/// Integer power p^n, n >= 0.
Polynomial power(const Polynomial& p, int n);

/// Exchanges the roles of x_j and u_j.
Polynomial swap_blocks(const Polynomial& p);

/// Substitutes x -> g x and u -> g u for an m x m rational matrix g (row major).
Polynomial substitute_linear(const Polynomial& p, const std::vector<std::vector<mpq_class>>& g);

/// Evaluates at real points x, u (length m each) in floating point.
std::pair<double, double> evaluate(const Polynomial& p, std::span<const double> x,
                                   std::span<const double> u);

}  // namespace harmonic2v
