#include <doctest.h>

#include "harmonic2v/errors.hpp"
#include "harmonic2v/random_poly.hpp"
#include "harmonic2v/transvector.hpp"
#include "support.hpp"

using namespace harmonic2v;
using testing::P;
using G = GeneratorTag;

TEST_CASE("extremal_projection_x") {
  CHECK(extremal_projection_x(P("x1^2", 5)) == P("x1^2 - 1/5*(x1^2+x2^2+x3^2+x4^2+x5^2)", 5));
  CHECK(extremal_projection_x(Polynomial::norm_sq_x(5)).is_zero());
  const Polynomial h = P("x1*x2*u3 + (x1^2 - x2^2)*u1^2", 6);
  CHECK(extremal_projection_x(h) == h);
  CHECK(extremal_projection_u(P("u2^2", 5)) == P("u2^2 - 1/5*(u1^2+u2^2+u3^2+u4^2+u5^2)", 5));
}

TEST_CASE("extremal_projection_s") {
  CHECK(extremal_projection_s(P("x1*u1", 5)) == P("x1*u1", 5));
  CHECK(extremal_projection_s(Polynomial::norm_sq_x(5) * Polynomial::norm_sq_u(5)).is_zero());
  const Polynomial h = extremal_projection_s(P("x1^2*u1^2", 5));
  CHECK(is_double_harmonic(h));
  // x1^2 u1^2 - h lies in |x|^2 P + |u|^2 P: it is killed by pi_s.
  CHECK(extremal_projection_s(P("x1^2*u1^2", 5) - h).is_zero());
}

TEST_CASE("projections are idempotent and land in the kernels") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 5 + trial % 3;
    const Polynomial p = testing::random_poly(rng, m, 6, 6);
    const Polynomial px = extremal_projection_x(p);
    const Polynomial pu = extremal_projection_u(p);
    const Polynomial ps = extremal_projection_s(p);
    CHECK(extremal_projection_x(px) == px);
    CHECK(extremal_projection_u(pu) == pu);
    CHECK(extremal_projection_s(ps) == ps);
    CHECK(apply_atom(OperatorAtom::laplacian_x, px).is_zero());
    CHECK(is_double_harmonic(ps));
    CHECK(extremal_projection_u(extremal_projection_x(p)) == ps);
    CHECK(extremal_projection_s(Polynomial::norm_sq_x(m) * p).is_zero());
    CHECK(extremal_projection_s(Polynomial::norm_sq_u(m) * p).is_zero());
  }
}

TEST_CASE("apply_generator on small inputs") {
  CHECK(apply_generator(G::s_x, P("u1", 5)) == P("x1", 5));
  CHECK(apply_generator(G::s_u, P("x1", 5)) == P("u1", 5));
  const Polynomial c1 = apply_generator(G::c, P("1", 6));
  CHECK(c1 == Polynomial::inner_ux(6));
  CHECK(apply_generator(G::a, c1) == P("6", 6));
  CHECK_THROWS_AS(apply_generator(G::s_x, P("x1^2", 5)), NotDoubleHarmonic);
  CHECK_THROWS_AS(apply_generator(G::a, Polynomial::low_dimensional(4)), InvalidDimension);
}

TEST_CASE("generators preserve double harmonics and shift bidegree") {
  std::mt19937_64 rng(32);
  for (int m : {5, 6, 7}) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= 3; ++l) {
        const Polynomial h = random_double_harmonic(rng, m, {k, l});
        for (G g : {G::s_x, G::s_u, G::a, G::c}) {
          const Polynomial img = apply_generator(g, h);
          CHECK(is_double_harmonic(img));
          if (img.is_zero()) continue;
          const Bidegree s = generator_shift(g);
          CHECK(img.bidegree() == Bidegree{k + s.k, l + s.l});
        }
      }
    }
  }
}

TEST_CASE("A C[1] = c_1(0,0) = m") {
  for (int m : {5, 6, 7, 9}) {
    CHECK(apply_generator(G::a, apply_generator(G::c, Polynomial::constant(m, 1))) ==
          Polynomial::constant(m, m));
  }
}

TEST_CASE("quadratic relations on random double harmonics") {
  std::mt19937_64 rng(33);
  for (int m : {5, 6, 7}) {
    std::vector<Polynomial> s;
    for (int t = 0; t < 20; ++t) {
      const int k = t % 4;
      const int l = (t / 4) % 4;
      s.push_back(random_double_harmonic(rng, m, {k, l}, {.terms = 3, .complex = true}));
    }
    const CheckReport r = verify_quadratic_relations(s);
    CHECK(r.size() == 6 * s.size());
    for (const auto& c : r.results()) {
      CAPTURE(c.detail);
      CHECK_MESSAGE(c.passed, c.name);
    }
  }
}

TEST_CASE("S_x and S_u commute on balanced bidegrees") {
  std::mt19937_64 rng(34);
  for (int k = 0; k <= 3; ++k) {
    const Polynomial h = random_double_harmonic(rng, 6, {k, k});
    CHECK(apply_generator(G::s_x, apply_generator(G::s_u, h)) ==
          apply_generator(G::s_u, apply_generator(G::s_x, h)));
  }
}
