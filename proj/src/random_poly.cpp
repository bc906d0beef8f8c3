#include "harmonic2v/random_poly.hpp"

#include "harmonic2v/errors.hpp"
#include "harmonic2v/transvector.hpp"

namespace harmonic2v {

namespace {

GaussianRational draw_coefficient(std::mt19937_64& rng, const RandomPolyOptions& opts) {
  std::uniform_int_distribution<long> num(-opts.max_numerator, opts.max_numerator);
  std::uniform_int_distribution<long> den(1, opts.max_denominator);
  mpq_class re(num(rng), den(rng));
  mpq_class im = opts.complex ? mpq_class(num(rng), den(rng)) : mpq_class(0);
  return {re, im};
}

}  // namespace

Polynomial random_bihomogeneous(std::mt19937_64& rng, int m, Bidegree bd,
                                const RandomPolyOptions& opts) {
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Polynomial::Term> terms;
    for (int t = 0; t < opts.terms; ++t) {
      Monomial mono(m);
      for (int e = 0; e < bd.k; ++e) mono.bump(pick(rng), 1);
      for (int e = 0; e < bd.l; ++e) mono.bump(m + pick(rng), 1);
      terms.emplace_back(mono, draw_coefficient(rng, opts));
    }
    Polynomial p = Polynomial::from_terms(m, std::move(terms));
    if (!p.is_zero()) return p;
  }
  throw InvalidArgument("could not draw a nonzero random polynomial");
}

Polynomial random_double_harmonic(std::mt19937_64& rng, int m, Bidegree bd,
                                  const RandomPolyOptions& opts) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Polynomial h = extremal_projection_s(random_bihomogeneous(rng, m, bd, opts));
    if (!h.is_zero()) return h;
  }
  throw InvalidArgument("could not draw a nonzero double harmonic");
}

}  // namespace harmonic2v
