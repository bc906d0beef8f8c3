#pragma once

#include <doctest.h>

#include <random>
#include <string_view>

#include "harmonic2v/cli/expression.hpp"
#include "harmonic2v/polynomial.hpp"
#include "harmonic2v/rational_util.hpp"

namespace doctest {
template <>
struct StringMaker<harmonic2v::Polynomial> {
  static String convert(const harmonic2v::Polynomial& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<harmonic2v::GaussianRational> {
  static String convert(const harmonic2v::GaussianRational& z) { return z.to_string().c_str(); }
};
}  // namespace doctest

namespace testing {

inline harmonic2v::Polynomial P(std::string_view text, int m) {
  return harmonic2v::cli::parse_poly(text, m);
}

/// Random polynomial with up to `terms` monomials of total degree <= max_degree.
inline harmonic2v::Polynomial random_poly(std::mt19937_64& rng, int m, int max_degree, int terms,
                                          bool complex = true) {
  using namespace harmonic2v;
  std::uniform_int_distribution<int> slot(0, 2 * m - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Polynomial::Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial mono(m);
    const int d = deg(rng);
    for (int e = 0; e < d; ++e) mono.bump(slot(rng), 1);
    mpq_class re(num(rng), den(rng));
    mpq_class im = complex ? rational(num(rng), den(rng)) : mpq_class(0);
    out.emplace_back(mono, GaussianRational(re, im));
  }
  return Polynomial::from_terms(m, std::move(out));
}

}  // namespace testing
