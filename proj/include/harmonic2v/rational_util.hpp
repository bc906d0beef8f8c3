#pragma once

#include <gmpxx.h>

namespace harmonic2v {

/// n! for n >= 0.
mpq_class factorial(int n);

/// Upper (rising) factorial a^{(n)} = a (a+1) ... (a+n-1). For n = -1 the
/// Pochhammer extension 1/(a-1) is used; smaller n are rejected.
mpq_class rising(const mpq_class& a, int n);

/// Lower (falling) factorial a_{(n)} = a (a-1) ... (a-n+1), n >= 0.
mpq_class falling(const mpq_class& a, int n);

/// n/d in lowest terms (gmpxx's two-argument constructor does not reduce).
inline mpq_class rational(long n, long d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

/// m/2 as an exact rational.
inline mpq_class half(int m) { return rational(m, 2); }

/// (-1)^n.
inline int sign_power(int n) { return (n % 2 == 0) ? 1 : -1; }

/// True when q is an integer <= 0.
bool is_nonpositive_integer(const mpq_class& q);

}  // namespace harmonic2v
