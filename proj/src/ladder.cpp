#include "harmonic2v/ladder.hpp"

#include <string>

#include "harmonic2v/errors.hpp"
#include "harmonic2v/rational_util.hpp"

namespace harmonic2v {

namespace {

void check_label(int k, int l, int m) {
  if (m <= 4) throw InvalidDimension("ladder coefficients need m > 4");
  if (l < 0 || k < l) {
    throw IndexOutOfRange("ladder label (" + std::to_string(k) + "," + std::to_string(l) +
                          ") needs k >= l >= 0");
  }
}

void check_cell(int i, int j, int k, int l) {
  if (i < 0 || j < 0 || j > k - l) {
    throw IndexOutOfRange("ladder cell (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside 0 <= j <= k - l");
  }
}

mpq_class q(int v) { return mpq_class(v); }

mpq_class checked_quotient(const mpq_class& num, const mpq_class& den) {
  if (sgn(den) == 0) throw InvalidArgument("ladder coefficient has a vanishing denominator");
  return num / den;
}

}  // namespace

mpq_class ladder_phi(int i, int j, int k, int l, int m) {
  check_label(k, l, m);
  check_cell(i, j, k, l);
  const mpq_class h = half(m);
  return q(j) * q(k - l - (j - 1)) * checked_quotient(q(l + j - 2) + h, q(l + i + j - 2) + h);
}

mpq_class ladder_c(int i, int k, int l, int m) {
  check_label(k, l, m);
  if (i < 0) throw IndexOutOfRange("negative ladder index");
  if (i == 0) return 0;
  const mpq_class h = half(m);
  return q(i) * checked_quotient((q(k + i - 1) + h) * q(k + l + m + i - 3), q(k + i - 2) + h);
}

mpq_class ladder_psi(int i, int j, int k, int l, int m) {
  check_label(k, l, m);
  check_cell(i, j, k, l);
  const mpq_class h = half(m);
  return q(i) * checked_quotient((q(k + i - 1) + h) * (q(l + i - 2) + h) * q(k + l + m + i - 3),
                                 (q(k + i - j - 2) + h) * (q(l + i + j - 2) + h));
}

mpq_class ladder_alpha(int i, int j, int p, int q_, int k, int l, int m) {
  check_label(k, l, m);
  check_cell(i, j, k, l);
  if (p < 0 || q_ < 0 || p > i || q_ > j) {
    throw IndexOutOfRange("alpha needs 0 <= p <= i and 0 <= q <= j");
  }
  const mpq_class h = half(m);
  mpq_class num = falling(q(i), p) * falling(q(j), q_) * rising(q(k - l - j + 1), q_) *
                  falling(q(k + i - 1) + h, p) * falling(q(l + j - 2) + h, q_) *
                  falling(q(l + i - 2) + h, p) * falling(q(k + l + m + i - 3), p);
  mpq_class den = falling(q(k + i - j + q_ - 2) + h, p) * falling(q(l + i + j - 2) + h, q_) *
                  falling(q(l + i + j - q_ - 2) + h, p);
  return checked_quotient(num, den);
}

mpq_class ladder_beta(int i, int j, int k, int l, int m) {
  check_label(k, l, m);
  if (i < 0 || j < 0 || i + j > l) {
    throw IndexOutOfRange("beta needs i, j >= 0 and i + j <= l");
  }
  const mpq_class h = half(m);
  mpq_class num = sign_power(i + j) * (q(k - i + j - 1) + h) * falling(q(l - j - 3) + h, i);
  mpq_class den = factorial(i) * factorial(j) * (q(k + j - 1) + h) * falling(q(l - 3) + h, i) *
                  falling(q(k + l + m - 4), i) * rising(q(k - l + 2), j);
  return checked_quotient(num, den);
}

}  // namespace harmonic2v
