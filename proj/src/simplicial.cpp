#include "harmonic2v/simplicial.hpp"

#include <algorithm>
#include <string>

#include "harmonic2v/errors.hpp"
#include "harmonic2v/fischer.hpp"
#include "harmonic2v/ladder.hpp"
#include "harmonic2v/transvector.hpp"

namespace harmonic2v {

namespace {

using G = GeneratorTag;

Polynomial gen(G g, const Polynomial& p) { return apply_generator_unchecked(g, p); }

void require_double_harmonic(const Polynomial& p, const char* who) {
  require_operator_dimension(p.m());
  if (!p.is_bihomogeneous()) throw InvalidArgument(std::string(who) + " needs a bihomogeneous input");
  if (!is_double_harmonic(p)) throw NotDoubleHarmonic(std::string(who) + " needs a double harmonic");
}

// Pi on a double harmonic of bidegree (k,l), k >= l, evaluated Horner-style:
//   Pi P = sum_a C^a ( sum_b beta_{a,b} S_u^b (A^a S_x^b P) ).
Polynomial master_projection_unchecked(const Polynomial& p, Bidegree bd) {
  if (p.is_zero()) return p;
  const int k = bd.k;
  const int l = bd.l;
  const int m = p.m();
  // y[a][b] = A^a S_x^b P for a + b <= l
  std::vector<std::vector<Polynomial>> y(static_cast<std::size_t>(l + 1));
  Polynomial sx = p;
  for (int b = 0; b <= l; ++b) {
    Polynomial cur = sx;
    for (int a = 0; a + b <= l; ++a) {
      y[a].push_back(cur);
      if (a + b < l) cur = gen(G::a, cur);
    }
    if (b < l) sx = gen(G::s_x, sx);
  }
  Polynomial total(m);
  for (int a = l; a >= 0; --a) {
    Polynomial inner(m);
    for (int b = l - a; b >= 0; --b) {
      if (!inner.is_zero()) inner = gen(G::s_u, inner);
      inner += GaussianRational(ladder_beta(a, b, k, l, m)) * y[a][b];
    }
    if (!total.is_zero()) total = gen(G::c, total);
    total += inner;
  }
  return total;
}

void check_cell_range(Bidegree pq, int i, int j) {
  if (i < 0 || j < 0 || i > pq.l || j > pq.l - i) {
    throw IndexOutOfRange("cell (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside 0 <= i <= q, 0 <= j <= q - i for bidegree (" +
                          std::to_string(pq.k) + "," + std::to_string(pq.l) + ")");
  }
}

LadderIndex target_of(Bidegree pq, int i, int j) { return {i, j, pq.k - i + j, pq.l - i - j}; }

std::vector<SimplicialComponent> decompose_direct(const Polynomial& p, Bidegree pq,
                                                  bool include_zero) {
  std::vector<SimplicialComponent> out;
  const int m = p.m();
  const int j_min = std::max(0, pq.l - pq.k);
  Polynomial sx = apply_generator_power(G::s_x, j_min, p);
  for (int j = j_min; j <= pq.l; ++j) {
    Polynomial cur = sx;
    for (int i = 0; i + j <= pq.l; ++i) {
      const LadderIndex t = target_of(pq, i, j);
      Polynomial h(m);
      if (!cur.is_zero()) {
        h = master_projection_unchecked(cur, {t.k, t.l});
        h *= GaussianRational(1 / ladder_alpha(i, j, i, j, t.k, t.l, m));
      }
      if (include_zero || !h.is_zero()) out.push_back({t, std::move(h)});
      if (i + j < pq.l) cur = gen(G::a, cur);
    }
    if (j < pq.l) sx = gen(G::s_x, sx);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.index < y.index; });
  return out;
}

std::vector<SimplicialComponent> decompose_sequential(const Polynomial& p, Bidegree pq,
                                                      bool include_zero) {
  std::vector<std::pair<int, int>> cells = ladder_cells(pq);
  // j descending, then i descending: every cell still present when (i,j) is
  // reached is annihilated by A^i S_x^j except (i,j) itself.
  std::sort(cells.begin(), cells.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second > y.second : x.first > y.first;
  });
  const int m = p.m();
  Polynomial residual = p;
  std::vector<SimplicialComponent> out;
  for (const auto& [i, j] : cells) {
    const LadderIndex t = target_of(pq, i, j);
    Polynomial h = apply_generator_power(G::a, i, apply_generator_power(G::s_x, j, residual));
    if (h.is_zero()) {
      if (include_zero) out.push_back({t, std::move(h)});
      continue;
    }
    h *= GaussianRational(1 / ladder_alpha(i, j, i, j, t.k, t.l, m));
    SimplicialComponent c{t, std::move(h)};
    residual -= embed(c);
    out.push_back(std::move(c));
  }
  if (!residual.is_zero()) throw Error("sequential decomposition left a nonzero residual");
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.index < y.index; });
  return out;
}

}  // namespace

Polynomial highest_weight_vector(int k, int l, int m) {
  require_operator_dimension(m);
  if (l < 0 || k < l) throw InvalidArgument("highest weight vector needs k >= l >= 0");
  auto complex_pair = [m](Variable re, Variable im) {
    return Polynomial::variable(m, re) + GaussianRational::i() * Polynomial::variable(m, im);
  };
  const Polynomial z1 = complex_pair(Variable::x(1), Variable::x(2));
  const Polynomial z2 = complex_pair(Variable::x(3), Variable::x(4));
  const Polynomial w1 = complex_pair(Variable::u(1), Variable::u(2));
  const Polynomial w2 = complex_pair(Variable::u(3), Variable::u(4));
  return (power(z1, k - l) * power(z1 * w2 - z2 * w1, l)).conj();
}

std::vector<std::pair<int, int>> ladder_cells(Bidegree pq) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i <= pq.l; ++i) {
    for (int j = std::max(0, pq.l - pq.k); i + j <= pq.l; ++j) cells.emplace_back(i, j);
  }
  return cells;
}

Polynomial master_projection(const Polynomial& p) {
  if (p.is_zero()) return p;
  require_double_harmonic(p, "master projection");
  const Bidegree bd = p.bidegree();
  if (bd.k < bd.l) throw InvalidArgument("master projection needs bidegree (k,l) with k >= l");
  return master_projection_unchecked(p, bd);
}

std::optional<SimplicialComponent> project_component(const Polynomial& p, int i, int j) {
  require_double_harmonic(p, "component projection");
  if (p.is_zero()) throw InvalidArgument("component projection of the zero polynomial");
  const Bidegree pq = p.bidegree();
  check_cell_range(pq, i, j);
  const LadderIndex t = target_of(pq, i, j);
  if (t.k < t.l) return std::nullopt;
  const mpq_class norm = ladder_alpha(i, j, i, j, t.k, t.l, p.m());
  if (sgn(norm) == 0) return std::nullopt;
  Polynomial h = apply_generator_power(G::a, i, apply_generator_power(G::s_x, j, p));
  h = master_projection_unchecked(h, {t.k, t.l});
  h *= GaussianRational(1 / norm);
  return SimplicialComponent{t, std::move(h)};
}

std::vector<SimplicialComponent> decompose_double_harmonic(const Polynomial& p, Strategy strategy,
                                                           bool include_zero) {
  if (p.is_zero()) return {};
  require_double_harmonic(p, "decomposition");
  const Bidegree pq = p.bidegree();
  return strategy == Strategy::direct ? decompose_direct(p, pq, include_zero)
                                      : decompose_sequential(p, pq, include_zero);
}

DecompositionResult decompose_full(const Polynomial& p, Strategy strategy, bool include_zero) {
  require_operator_dimension(p.m());
  DecompositionResult result{p.m(), {}};
  for (const auto& [bd, part] : bidegree_split(p)) {
    for (auto& f : double_fischer(part)) {
      const Bidegree pq{bd.k - 2 * f.i, bd.l - 2 * f.j};
      for (auto& c : strategy == Strategy::direct ? decompose_direct(f.part, pq, include_zero)
                                                  : decompose_sequential(f.part, pq, include_zero)) {
        result.components.push_back({bd, f.i, f.j, std::move(c)});
      }
    }
  }
  // bidegree_split and double_fischer already iterate in (source, a, b) order.
  return result;
}

Polynomial embed(const SimplicialComponent& c) {
  return apply_generator_power(G::c, c.index.i, apply_generator_power(G::s_u, c.index.j, c.harmonic));
}

Polynomial embed(const DecomposedComponent& c, int m) {
  return power(Polynomial::norm_sq_x(m), c.a) * power(Polynomial::norm_sq_u(m), c.b) *
         embed(c.component);
}

Polynomial reconstruct(const DecompositionResult& result) {
  const int m = result.m;
  PolynomialBuilder sum(m);
  // Components sharing a Fischer part are summed Horner-style,
  //   sum_i C^i ( sum_j S_u^j H_{i,j} ),
  // before the |x|^{2a} |u|^{2b} factor is applied once.
  auto& comps = result.components;
  for (std::size_t begin = 0; begin < comps.size();) {
    std::size_t end = begin;
    while (end < comps.size() && comps[end].source == comps[begin].source &&
           comps[end].a == comps[begin].a && comps[end].b == comps[begin].b) {
      ++end;
    }
    int max_i = 0;
    int max_j = 0;
    for (std::size_t n = begin; n < end; ++n) {
      max_i = std::max(max_i, comps[n].component.index.i);
      max_j = std::max(max_j, comps[n].component.index.j);
    }
    std::vector<std::vector<const Polynomial*>> grid(
        static_cast<std::size_t>(max_i + 1),
        std::vector<const Polynomial*>(static_cast<std::size_t>(max_j + 1), nullptr));
    for (std::size_t n = begin; n < end; ++n) {
      const LadderIndex& t = comps[n].component.index;
      if (grid[t.i][t.j] != nullptr) throw InvalidArgument("duplicate ladder cell in decomposition");
      grid[t.i][t.j] = &comps[n].component.harmonic;
    }
    Polynomial total(m);
    for (int i = max_i; i >= 0; --i) {
      Polynomial inner(m);
      for (int j = max_j; j >= 0; --j) {
        if (!inner.is_zero()) inner = gen(G::s_u, inner);
        if (grid[i][j] != nullptr) inner += *grid[i][j];
      }
      if (!total.is_zero()) total = gen(G::c, total);
      total += inner;
    }
    sum.add(power(Polynomial::norm_sq_x(m), comps[begin].a) *
            power(Polynomial::norm_sq_u(m), comps[begin].b) * total);
    begin = end;
  }
  return std::move(sum).build();
}

CheckReport verify_component_orthogonality(const DecompositionResult& result) {
  CheckReport report;
  std::vector<Polynomial> embedded;
  embedded.reserve(result.components.size());
  for (const auto& c : result.components) embedded.push_back(embed(c, result.m));
  auto label = [](const DecomposedComponent& c) {
    const LadderIndex& t = c.component.index;
    return "(a,b,i,j,k,l)=(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," +
           std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + "," +
           std::to_string(t.l) + ")";
  };
  for (std::size_t x = 0; x < embedded.size(); ++x) {
    for (std::size_t y = x + 1; y < embedded.size(); ++y) {
      const GaussianRational ip = fischer_inner_product(embedded[x], embedded[y]);
      report.add("orthogonal " + label(result.components[x]) + " vs " + label(result.components[y]),
                 ip.is_zero(), ip.is_zero() ? "" : "inner product " + ip.to_string());
    }
  }
  return report;
}

}  // namespace harmonic2v
