#pragma once

#include <random>

#include "harmonic2v/polynomial.hpp"

namespace harmonic2v {

struct RandomPolyOptions {
  int terms = 4;        // monomials drawn before merging
  bool complex = false; // draw imaginary parts too
  long max_numerator = 9;
  long max_denominator = 4;
};

/// Random bihomogeneous polynomial of bidegree `bd` (may be zero only if every
/// drawn coefficient cancels, which the generator retries against).
Polynomial random_bihomogeneous(std::mt19937_64& rng, int m, Bidegree bd,
                                const RandomPolyOptions& opts = {});

/// pi_s of a random bihomogeneous polynomial; nonzero for every bidegree when m > 4.
Polynomial random_double_harmonic(std::mt19937_64& rng, int m, Bidegree bd,
                                  const RandomPolyOptions& opts = {});

}  // namespace harmonic2v
