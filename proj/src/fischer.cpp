#include "harmonic2v/fischer.hpp"

#include "harmonic2v/errors.hpp"
#include "harmonic2v/rational_util.hpp"
#include "harmonic2v/transvector.hpp"

namespace harmonic2v {

Polynomial sphere_fischer_project(const Polynomial& p, int s, Variable::Block block) {
  require_operator_dimension(p.m());
  if (s < 0) throw InvalidArgument("negative Fischer power");
  if (p.is_zero()) return p;
  const bool x_block = block == Variable::Block::x;
  const Bidegree bd = p.bidegree();
  const int k = x_block ? bd.k : bd.l;
  if (2 * s > k) return Polynomial(p.m());
  const OperatorAtom lap = x_block ? OperatorAtom::laplacian_x : OperatorAtom::laplacian_u;
  Polynomial q = p;
  for (int t = 0; t < s; ++t) q = apply_atom(lap, q);
  q = x_block ? extremal_projection_x(q) : extremal_projection_u(q);
  const Polynomial norm = x_block ? Polynomial::norm_sq_x(p.m()) : Polynomial::norm_sq_u(p.m());
  // 1/(4^s s!) * Gamma(k - 2s + m/2) / Gamma(k - s + m/2)
  const mpq_class scale = 1 / (mpq_class(1 << (2 * s)) * factorial(s) *
                               rising(mpq_class(k - 2 * s) + half(p.m()), s));
  return GaussianRational(scale) * power(norm, s) * q;
}

std::vector<DoubleFischerComponent> double_fischer(const Polynomial& p) {
  require_operator_dimension(p.m());
  std::vector<DoubleFischerComponent> out;
  if (p.is_zero()) return out;
  const Bidegree bd = p.bidegree();
  const mpq_class h = half(p.m());
  Polynomial lap_x = p;
  for (int i = 0; 2 * i <= bd.k && !lap_x.is_zero(); ++i) {
    Polynomial lap_xu = lap_x;
    for (int j = 0; 2 * j <= bd.l && !lap_xu.is_zero(); ++j) {
      const mpq_class scale =
          1 / (mpq_class(1 << (2 * (i + j))) * factorial(i) * factorial(j) *
               rising(mpq_class(bd.k - 2 * i) + h, i) * rising(mpq_class(bd.l - 2 * j) + h, j));
      Polynomial part = GaussianRational(scale) * extremal_projection_s(lap_xu);
      if (!part.is_zero()) out.push_back({i, j, std::move(part)});
      lap_xu = apply_atom(OperatorAtom::laplacian_u, lap_xu);
    }
    lap_x = apply_atom(OperatorAtom::laplacian_x, lap_x);
  }
  return out;
}

Polynomial reconstruct(std::span<const DoubleFischerComponent> components, int m) {
  Polynomial sum(m);
  for (const auto& c : components) {
    sum += power(Polynomial::norm_sq_x(m), c.i) * power(Polynomial::norm_sq_u(m), c.j) * c.part;
  }
  return sum;
}

GaussianRational fischer_inner_product(const Polynomial& p, const Polynomial& q) {
  require_same_dimension(p, q);
  // d^a x^b at 0 is a! when a == b and 0 otherwise, so only shared monomials
  // contribute, each weighted by the product of its exponent factorials.
  GaussianRational total;
  auto a = p.terms().begin();
  auto b = q.terms().begin();
  while (a != p.terms().end() && b != q.terms().end()) {
    if (a->first < b->first) {
      ++b;
    } else if (b->first < a->first) {
      ++a;
    } else {
      mpz_class weight = 1;
      for (int s = 0; s < 2 * p.m(); ++s) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(a->first[s]));
        weight *= f;
      }
      total += a->second.conj() * b->second * mpq_class(weight);
      ++a;
      ++b;
    }
  }
  return total;
}

CheckReport verify_adjoints(std::span<const std::pair<Polynomial, Polynomial>> pairs) {
  CheckReport report;
  for (const auto& [p, q] : pairs) {
    const std::string where = "p = " + p.to_string() + "; q = " + q.to_string();
    if (is_double_harmonic(p) && is_double_harmonic(q)) {
      report.add("<Cp,q> = <p,Aq>",
                 fischer_inner_product(apply_generator_unchecked(GeneratorTag::c, p), q) ==
                     fischer_inner_product(p, apply_generator_unchecked(GeneratorTag::a, q)),
                 where);
      report.add("<S_u p,q> = <p,S_x q>",
                 fischer_inner_product(apply_generator_unchecked(GeneratorTag::s_u, p), q) ==
                     fischer_inner_product(p, apply_generator_unchecked(GeneratorTag::s_x, q)),
                 where);
    }
    report.add("<pi_s p,q> = <p,pi_s q>",
               fischer_inner_product(extremal_projection_s(p), q) ==
                   fischer_inner_product(p, extremal_projection_s(q)),
               where);
  }
  return report;
}

}  // namespace harmonic2v
