#include "harmonic2v/rational_util.hpp"

#include <stdexcept>

#include "harmonic2v/errors.hpp"

namespace harmonic2v {

mpq_class factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return mpq_class(f);
}

mpq_class rising(const mpq_class& a, int n) {
  if (n == -1) {
    mpq_class d = a - 1;
    if (sgn(d) == 0) throw InvalidArgument("a^{(-1)} is undefined at a = 1");
    return 1 / d;
  }
  if (n < 0) throw InvalidArgument("rising factorial with exponent below -1");
  mpq_class r = 1;
  for (int t = 0; t < n; ++t) r *= a + t;
  return r;
}

mpq_class falling(const mpq_class& a, int n) {
  if (n < 0) throw InvalidArgument("falling factorial with negative exponent");
  mpq_class r = 1;
  for (int t = 0; t < n; ++t) r *= a - t;
  return r;
}

bool is_nonpositive_integer(const mpq_class& q) {
  return q.get_den() == 1 && sgn(q) <= 0;
}

}  // namespace harmonic2v
