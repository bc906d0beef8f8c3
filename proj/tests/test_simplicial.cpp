#include <doctest.h>

#include <algorithm>

#include "harmonic2v/errors.hpp"
#include "harmonic2v/fischer.hpp"
#include "harmonic2v/ladder.hpp"
#include "harmonic2v/random_poly.hpp"
#include "harmonic2v/simplicial.hpp"
#include "harmonic2v/transvector.hpp"
#include "support.hpp"

using namespace harmonic2v;
using testing::P;
using G = GeneratorTag;

namespace {

Polynomial cell(int i, int j, const Polynomial& h) {
  return apply_generator_power(G::c, i, apply_generator_power(G::s_u, j, h));
}

GaussianRational g(const mpq_class& q) { return GaussianRational(q); }

}  // namespace

TEST_CASE("highest weight vectors") {
  CHECK(highest_weight_vector(0, 0, 5) == P("1", 5));
  CHECK(highest_weight_vector(1, 0, 5) == P("x1 - i*x2", 5));
  CHECK(highest_weight_vector(1, 1, 5) ==
        P("(x1 - i*x2)*(u3 - i*u4) - (x3 - i*x4)*(u1 - i*u2)", 5));
  for (int m : {5, 6, 7}) {
    for (int k = 0; k <= 4; ++k) {
      for (int l = 0; l <= k; ++l) {
        const Polynomial h = highest_weight_vector(k, l, m);
        CHECK(h.bidegree() == Bidegree{k, l});
        CHECK(is_simplicial_harmonic(h));
      }
    }
  }
  CHECK_THROWS_AS(highest_weight_vector(1, 2, 5), InvalidArgument);
}

TEST_CASE("ladder coefficient closed forms") {
  CHECK(ladder_c(1, 2, 1, 6) == rational(35, 4));
  CHECK(ladder_c(1, 0, 0, 6) == 6);
  CHECK(ladder_c(0, 3, 1, 5) == 0);
  for (int k = 1; k <= 5; ++k) {
    for (int l = 0; l < k; ++l) CHECK(ladder_phi(0, 1, k, l, 7) == k - l);
  }
  for (int m : {5, 6, 7}) {
    for (int k = 0; k <= 4; ++k) {
      for (int l = 0; l <= k; ++l) {
        for (int i = 0; i <= 3; ++i) {
          for (int j = 0; j <= k - l; ++j) {
            if (i >= 1) CHECK(ladder_alpha(i, j, 1, 0, k, l, m) == ladder_psi(i, j, k, l, m));
            if (j >= 1) CHECK(ladder_alpha(i, j, 0, 1, k, l, m) == ladder_phi(i, j, k, l, m));
            CHECK(ladder_psi(i, 0, k, l, m) == ladder_c(i, k, l, m));
            CHECK(ladder_alpha(i, j, 0, 0, k, l, m) == 1);
          }
        }
      }
    }
  }
  CHECK(ladder_beta(0, 0, 3, 2, 5) == 1);
  CHECK_THROWS_AS(ladder_alpha(1, 0, 2, 0, 2, 1, 5), IndexOutOfRange);
  CHECK_THROWS_AS(ladder_phi(0, 2, 2, 1, 5), IndexOutOfRange);
  CHECK_THROWS_AS(ladder_beta(1, 1, 3, 1, 5), IndexOutOfRange);
}

TEST_CASE("brute-force operator chains reproduce the ladder coefficients") {
  for (int m : {5, 6}) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= std::min(k, 2); ++l) {
        const Polynomial h = highest_weight_vector(k, l, m);
        for (int i = 0; i <= 2; ++i) {
          for (int j = 0; j <= std::min(2, k - l); ++j) {
            CAPTURE(m);
            CAPTURE(k);
            CAPTURE(l);
            CAPTURE(i);
            CAPTURE(j);
            const Polynomial v = cell(i, j, h);
            REQUIRE_FALSE(v.is_zero());
            if (j >= 1) {
              CHECK(apply_generator(G::s_x, v) == g(ladder_phi(i, j, k, l, m)) * cell(i, j - 1, h));
            }
            if (i >= 1) {
              CHECK(apply_generator(G::a, v) == g(ladder_psi(i, j, k, l, m)) * cell(i - 1, j, h));
            }
            if (j == 0 && i >= 1) {
              CHECK(apply_generator(G::a, v) == g(ladder_c(i, k, l, m)) * cell(i - 1, 0, h));
            }
            for (int p = 0; p <= i; ++p) {
              for (int q = 0; q <= j; ++q) {
                const Polynomial w =
                    apply_generator_power(G::a, p, apply_generator_power(G::s_x, q, v));
                CHECK(w == g(ladder_alpha(i, j, p, q, k, l, m)) * cell(i - p, j - q, h));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("master projection is identity on H_{k,l} and kills other cells") {
  std::mt19937_64 rng(51);
  for (int m : {5, 6}) {
    for (int k = 0; k <= 4; ++k) {
      for (int l = 0; l <= std::min(k, 2); ++l) {
        const Polynomial h = highest_weight_vector(k, l, m);
        CHECK(master_projection(h) == h);
        for (int i = 0; i <= 3; ++i) {
          for (int j = 0; i + j <= 3; ++j) {
            if (i + j == 0) continue;
            const int kk = k - i + j;
            const int ll = l - i - j;
            if (ll < 0 || kk < ll) continue;
            CAPTURE(m);
            CAPTURE(k);
            CAPTURE(l);
            CAPTURE(i);
            CAPTURE(j);
            const Polynomial v = cell(i, j, highest_weight_vector(kk, ll, m));
            CHECK(master_projection(v).is_zero());
          }
        }
      }
    }
  }
  CHECK(master_projection(apply_generator(G::c, Polynomial::constant(5, 1))).is_zero());
  CHECK(master_projection(apply_generator(G::s_u, highest_weight_vector(2, 0, 5))).is_zero());
  CHECK_THROWS_AS(master_projection(P("x1^2", 5)), NotDoubleHarmonic);
}

TEST_CASE("master projection output is simplicial and idempotent") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 8; ++trial) {
    const int m = 5 + trial % 3;
    const Polynomial p = random_double_harmonic(rng, m, {3, 2}, {.terms = 3, .complex = true});
    const Polynomial h = master_projection(p);
    CHECK(is_simplicial_harmonic(h));
    CHECK(master_projection(h) == h);
  }
}

TEST_CASE("project_component") {
  const Polynomial h = highest_weight_vector(1, 0, 5);
  const Polynomial ch = apply_generator(G::c, h);
  auto c = project_component(ch, 1, 0);
  REQUIRE(c.has_value());
  CHECK(c->harmonic == h);
  CHECK(c->index == LadderIndex{1, 0, 1, 0});
  CHECK(project_component(ch, 0, 0)->harmonic == master_projection(ch));
  CHECK_THROWS_AS(project_component(ch, 2, 0), IndexOutOfRange);
  // bidegree (1,2): cell (0,0) would target H_{1,2}, which does not exist
  const Polynomial low = apply_generator(G::s_u, highest_weight_vector(2, 1, 5));
  CHECK_FALSE(project_component(low, 0, 0).has_value());
  CHECK(project_component(low, 0, 1).has_value());
}

TEST_CASE("decompose_double_harmonic small cases") {
  // x1*u1 is symmetric under x <-> u while H_{1,1} is antisymmetric, so its
  // H_{1,1} cell is present but empty.
  const auto comps = decompose_double_harmonic(P("x1*u1", 5), Strategy::direct, true);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].index == LadderIndex{0, 0, 1, 1});
  CHECK(comps[0].harmonic.is_zero());
  CHECK(comps[1].index == LadderIndex{0, 1, 2, 0});
  CHECK(comps[1].harmonic == P("1/2*x1^2 - 1/10*(x1^2+x2^2+x3^2+x4^2+x5^2)", 5));
  CHECK(embed(comps[1]) == P("x1*u1 - 1/5*(x1*u1+x2*u2+x3*u3+x4*u4+x5*u5)", 5));
  CHECK(comps[2].index == LadderIndex{1, 0, 0, 0});
  CHECK(comps[2].harmonic == P("1/5", 5));
  CHECK(decompose_double_harmonic(P("x1*u1", 5)).size() == 2);
  const auto seq = decompose_double_harmonic(P("x1*u1", 5), Strategy::sequential, true);
  REQUIRE(seq.size() == 3);
  for (std::size_t n = 0; n < 3; ++n) CHECK(seq[n].harmonic == comps[n].harmonic);
  // Fischer oracle: the C-cell coefficient is <C[1], x1 u1>_F / <C[1], C[1]>_F = 1/m.
  const Polynomial c1 = apply_generator(G::c, P("1", 5));
  CHECK(fischer_inner_product(c1, P("x1*u1", 5)) / fischer_inner_product(c1, c1) ==
        GaussianRational(rational(1, 5)));

  const Polynomial h = highest_weight_vector(3, 1, 6);
  const auto single = decompose_double_harmonic(h);
  REQUIRE(single.size() == 1);
  CHECK(single[0].harmonic == h);

  const Polynomial su = apply_generator(G::s_u, highest_weight_vector(2, 0, 5));
  const auto one = decompose_double_harmonic(su);
  REQUIRE(one.size() == 1);
  CHECK(one[0].index == LadderIndex{0, 1, 2, 0});
  CHECK(one[0].harmonic == highest_weight_vector(2, 0, 5));
}

TEST_CASE("worked example normalizers at m = 6") {
  const int m = 6;
  // cells of a (3,2) double harmonic and their normalizers 1/alpha
  CHECK(1 / ladder_alpha(0, 2, 0, 2, 5, 0, m) == rational(1, 40));
  CHECK(1 / ladder_alpha(1, 1, 1, 1, 3, 0, m) == rational(5, 84));
  CHECK(1 / ladder_alpha(0, 1, 0, 1, 4, 1, m) == rational(1, 3));
  CHECK(1 / ladder_alpha(2, 0, 2, 0, 1, 0, m) == rational(1, 100));
  CHECK(1 / ladder_alpha(1, 0, 1, 0, 2, 1, m) == rational(4, 35));
  CHECK(rational(m * (m + 4), 3 * (m - 2) * (m + 1) * (m + 6)) == rational(5, 84));
  CHECK(rational(1, 2 * (m - 1) * (m + 4)) == rational(1, 100));
  CHECK(rational(m + 2, (m + 1) * (m + 4)) == rational(4, 35));

  std::mt19937_64 rng(53);
  const Polynomial p = random_bihomogeneous(rng, m, {3, 2}, {.terms = 5});
  const DecompositionResult r = decompose_full(p);
  const Polynomial hprime = double_fischer(p).front().part;
  bool found = false;
  for (const auto& c : r.components) {
    if (c.a == 0 && c.b == 0 && c.component.index == LadderIndex{0, 2, 5, 0}) {
      CHECK(c.component.harmonic ==
            GaussianRational(rational(1, 40)) * apply_generator_power(G::s_x, 2, hprime));
      found = true;
    }
  }
  CHECK(found);
  CHECK(reconstruct(r) == p);
}

TEST_CASE("decompose_full round trip and kernel membership") {
  std::mt19937_64 rng(54);
  for (int m : {5, 6, 7}) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= 3; ++l) {
        const Polynomial p = random_bihomogeneous(rng, m, {k, l}, {.terms = 3, .complex = true});
        const DecompositionResult r = decompose_full(p);
        CHECK(reconstruct(r) == p);
        for (const auto& c : r.components) {
          CHECK(is_simplicial_harmonic(c.component.harmonic));
          CHECK(c.component.harmonic.bidegree() ==
                Bidegree{c.component.index.k, c.component.index.l});
        }
      }
    }
  }
  const DecompositionResult seven = decompose_full(P("7", 5));
  REQUIRE(seven.components.size() == 1);
  CHECK(seven.components[0].component.harmonic == P("7", 5));
}

TEST_CASE("direct and sequential strategies agree") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 5 + trial % 3;
    const Polynomial p = testing::random_poly(rng, m, 5, 5);
    const DecompositionResult d = decompose_full(p, Strategy::direct);
    const DecompositionResult s = decompose_full(p, Strategy::sequential);
    REQUIRE(d.components.size() == s.components.size());
    for (std::size_t n = 0; n < d.components.size(); ++n) {
      CHECK(d.components[n].a == s.components[n].a);
      CHECK(d.components[n].b == s.components[n].b);
      CHECK(d.components[n].component.index == s.components[n].component.index);
      CHECK(d.components[n].component.harmonic == s.components[n].component.harmonic);
    }
  }
}

TEST_CASE("component orthogonality") {
  const Polynomial c1 = apply_generator(G::c, Polynomial::constant(5, 1));
  const Polynomial suh = apply_generator(G::s_u, highest_weight_vector(2, 0, 5));
  CHECK(fischer_inner_product(c1, suh).is_zero());
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 4; ++trial) {
    const Polynomial p = random_bihomogeneous(rng, 5, {2, 2}, {.terms = 4, .complex = true});
    const CheckReport r = verify_component_orthogonality(decompose_full(p));
    CHECK(r.size() > 0);
    CHECK(r.all_passed());
  }
}

TEST_CASE("master projection is Fischer self-adjoint") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 6; ++trial) {
    const Polynomial p = random_double_harmonic(rng, 6, {3, 2}, {.terms = 3, .complex = true});
    const Polynomial q = random_double_harmonic(rng, 6, {3, 2}, {.terms = 3, .complex = true});
    CHECK(fischer_inner_product(master_projection(p), q) ==
          fischer_inner_product(p, master_projection(q)));
  }
}

TEST_CASE("ladder cells match the tensor product multiplicities") {
  // H_p (x) H_q for p >= q splits into labels (p+q-2s-t, t), s + t <= q.
  for (int p = 0; p <= 5; ++p) {
    for (int q = 0; q <= 5; ++q) {
      std::vector<std::pair<int, int>> from_cells;
      for (auto [i, j] : ladder_cells({p, q})) from_cells.emplace_back(p - i + j, q - i - j);
      std::vector<std::pair<int, int>> expected;
      const int lo = std::min(p, q);
      for (int s = 0; s <= lo; ++s) {
        for (int t = 0; s + t <= lo; ++t) expected.emplace_back(p + q - 2 * s - t, t);
      }
      std::sort(from_cells.begin(), from_cells.end());
      std::sort(expected.begin(), expected.end());
      CHECK(from_cells == expected);
    }
  }
}
