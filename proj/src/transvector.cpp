#include "harmonic2v/transvector.hpp"

#include "harmonic2v/errors.hpp"
#include "harmonic2v/rational_util.hpp"

namespace harmonic2v {

namespace {

using A = OperatorAtom;

// 1/(2E + m - 4) in the chosen Euler symbol.
EulerRationalScale inverse_shifted_degree(const EulerPolynomial& e, int m) {
  return {1, EulerPolynomial(2) * e + EulerPolynomial(m - 4)};
}

Polynomial extremal_projection(const Polynomial& p, bool x_block) {
  require_operator_dimension(p.m());
  const A lap = x_block ? A::laplacian_x : A::laplacian_u;
  const Polynomial norm = x_block ? Polynomial::norm_sq_x(p.m()) : Polynomial::norm_sq_u(p.m());
  PolynomialBuilder out(p.m());
  for (const auto& [bd, part] : bidegree_split(p)) {
    const int k = x_block ? bd.k : bd.l;
    const mpq_class h = -(mpq_class(k) + half(p.m()));
    out.add(part);
    // coef_j = 1 / (4^j j! (H+2)(H+3)...(H+j+1))
    mpq_class coef = 1;
    Polynomial lap_power = part;
    Polynomial norm_power = Polynomial::constant(p.m(), 1);
    for (int j = 1; 2 * j <= k; ++j) {
      lap_power = apply_atom(lap, lap_power);
      if (lap_power.is_zero()) break;
      norm_power = norm_power * norm;
      coef /= mpq_class(4 * j) * (h + 1 + j);
      out.add_scaled(norm_power * lap_power, GaussianRational(coef));
    }
  }
  return std::move(out).build();
}

std::string describe(const Polynomial& p) {
  const Bidegree bd = p.bidegree();
  return "bidegree (" + std::to_string(bd.k) + "," + std::to_string(bd.l) + "), m=" +
         std::to_string(p.m()) + ": " + p.to_string();
}

}  // namespace

Bidegree generator_shift(GeneratorTag g) {
  switch (g) {
    case GeneratorTag::s_x: return {1, -1};
    case GeneratorTag::s_u: return {-1, 1};
    case GeneratorTag::a: return {-1, -1};
    case GeneratorTag::c: return {1, 1};
  }
  return {0, 0};
}

std::string generator_name(GeneratorTag g) {
  switch (g) {
    case GeneratorTag::s_x: return "S_x";
    case GeneratorTag::s_u: return "S_u";
    case GeneratorTag::a: return "A";
    case GeneratorTag::c: return "C";
  }
  return "?";
}

LinearOperator generator_operator(GeneratorTag g, int m) {
  require_operator_dimension(m);
  const EulerRationalScale dx = inverse_shifted_degree(EulerPolynomial::ex(), m);
  const EulerRationalScale du = inverse_shifted_degree(EulerPolynomial::eu(), m);
  switch (g) {
    case GeneratorTag::s_x:
      return LinearOperator::atom(m, A::skew_xu) -
             LinearOperator::word(m, dx, {A::norm_sq_x, A::cross_dd});
    case GeneratorTag::s_u:
      return LinearOperator::atom(m, A::skew_ux) -
             LinearOperator::word(m, du, {A::norm_sq_u, A::cross_dd});
    case GeneratorTag::a:
      return LinearOperator::atom(m, A::cross_dd);
    case GeneratorTag::c:
      return LinearOperator::atom(m, A::inner_ux) -
             LinearOperator::word(m, dx, {A::norm_sq_x, A::skew_ux}) -
             LinearOperator::word(m, du, {A::norm_sq_u, A::skew_xu}) +
             LinearOperator::word(m, dx * du, {A::norm_sq_x, A::norm_sq_u, A::cross_dd});
  }
  throw InvalidArgument("unknown generator");
}

bool is_double_harmonic(const Polynomial& p) {
  return apply_atom(A::laplacian_x, p).is_zero() && apply_atom(A::laplacian_u, p).is_zero();
}

bool is_simplicial_harmonic(const Polynomial& p) {
  return is_double_harmonic(p) && apply_atom(A::cross_dd, p).is_zero() &&
         apply_atom(A::skew_xu, p).is_zero();
}

Polynomial extremal_projection_x(const Polynomial& p) { return extremal_projection(p, true); }

Polynomial extremal_projection_u(const Polynomial& p) { return extremal_projection(p, false); }

Polynomial extremal_projection_s(const Polynomial& p) {
  return extremal_projection_x(extremal_projection_u(p));
}

Polynomial apply_generator(GeneratorTag g, const Polynomial& p) {
  require_operator_dimension(p.m());
  if (!is_double_harmonic(p)) {
    throw NotDoubleHarmonic(generator_name(g) + " requires a double-harmonic operand");
  }
  return apply_generator_unchecked(g, p);
}

Polynomial apply_generator_unchecked(GeneratorTag g, const Polynomial& p) {
  return apply(generator_operator(g, p.m()), p);
}

Polynomial apply_generator_power(GeneratorTag g, int times, Polynomial p) {
  if (times < 0) throw InvalidArgument("negative generator power");
  if (times == 0 || p.is_zero()) return p;
  const LinearOperator op = generator_operator(g, p.m());
  for (int t = 0; t < times && !p.is_zero(); ++t) p = apply(op, p);
  return p;
}

CheckReport verify_quadratic_relations(std::span<const Polynomial> samples) {
  CheckReport report;
  for (const auto& h : samples) {
    if (h.is_zero()) continue;
    const int m = h.m();
    const Bidegree bd = h.bidegree();
    if (!is_double_harmonic(h)) throw NotDoubleHarmonic("relation sample is not double harmonic");
    const mpq_class hx = -(mpq_class(bd.k) + half(m));
    const mpq_class hu = -(mpq_class(bd.l) + half(m));
    auto gen = [](GeneratorTag g, const Polynomial& p) { return apply_generator_unchecked(g, p); };
    auto q = [](const mpq_class& v) { return GaussianRational(v); };
    using G = GeneratorTag;

    const Polynomial sx = gen(G::s_x, h);
    const Polynomial su = gen(G::s_u, h);
    const Polynomial a = gen(G::a, h);
    const Polynomial c = gen(G::c, h);
    const Polynomial ca = gen(G::c, a);

    const std::string where = describe(h);
    report.add("A S_x = (H_x+2)/(H_x+1) S_x A",
               gen(G::a, sx) == q((hx + 2) / (hx + 1)) * gen(G::s_x, a), where);
    report.add("A S_u = (H_u+2)/(H_u+1) S_u A",
               gen(G::a, su) == q((hu + 2) / (hu + 1)) * gen(G::s_u, a), where);
    report.add("S_u C = (H_x+2)/(H_x+1) C S_u",
               gen(G::s_u, c) == q((hx + 2) / (hx + 1)) * gen(G::c, su), where);
    report.add("S_x C = (H_u+2)/(H_u+1) C S_x",
               gen(G::s_x, c) == q((hu + 2) / (hu + 1)) * gen(G::c, sx), where);

    const Polynomial comm = gen(G::s_x, su) - gen(G::s_u, sx);
    const Polynomial comm_rhs =
        q((hx - hu) / ((1 + hx) * (1 + hu))) * ca - q(hx - hu) * h;
    report.add("[S_x, S_u] = (H_x-H_u)/((1+H_x)(1+H_u)) C A - (H_x-H_u)", comm == comm_rhs, where);

    const Polynomial ac_rhs = q((hx + hx * hu + hu) / ((hx + 1) * (hu + 1))) * ca -
                              q(hx + hu) * h + q(1 / (hx + 1)) * gen(G::s_x, su) +
                              q(1 / (hu + 1)) * gen(G::s_u, sx);
    report.add("A C = (H_x+H_xH_u+H_u)/((H_x+1)(H_u+1)) C A - (H_x+H_u) + S_xS_u/(H_x+1) + S_uS_x/(H_u+1)", gen(G::a, c) == ac_rhs, where);
  }
  return report;
}

}  // namespace harmonic2v
