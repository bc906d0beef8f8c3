#include "harmonic2v/linear_operator.hpp"

#include "harmonic2v/errors.hpp"

namespace harmonic2v {

namespace {

// Applies `step` to every term; step(mono, coeff, emit) calls emit for each
// image monomial with its integer multiplier.
template <typename Step>
Polynomial map_terms(const Polynomial& p, Step step) {
  PolynomialBuilder out(p.m());
  for (const auto& [mono, c] : p.terms()) {
    step(mono, [&](const Monomial& image, long factor) {
      GaussianRational coeff = c;
      coeff *= factor;
      out.add(image, std::move(coeff));
    });
  }
  return std::move(out).build();
}

Polynomial laplacian(const Polynomial& p, int offset) {
  const int m = p.m();
  return map_terms(p, [&](const Monomial& mono, auto emit) {
    for (int j = 0; j < m; ++j) {
      const int e = mono[offset + j];
      if (e < 2) continue;
      Monomial image = mono;
      image.set(offset + j, e - 2);
      emit(image, static_cast<long>(e) * (e - 1));
    }
  });
}

Polynomial norm_sq(const Polynomial& p, int offset) {
  const int m = p.m();
  return map_terms(p, [&](const Monomial& mono, auto emit) {
    for (int j = 0; j < m; ++j) {
      Monomial image = mono;
      image.bump(offset + j, 2);
      emit(image, 1);
    }
  });
}

// Sum_j y_j d/dz_j where y lives at slot offset `to` and z at `from`.
Polynomial skew(const Polynomial& p, int from, int to) {
  const int m = p.m();
  return map_terms(p, [&](const Monomial& mono, auto emit) {
    for (int j = 0; j < m; ++j) {
      const int e = mono[from + j];
      if (e == 0) continue;
      Monomial image = mono;
      image.set(from + j, e - 1);
      image.bump(to + j, 1);
      emit(image, e);
    }
  });
}

}  // namespace

Bidegree atom_shift(OperatorAtom atom) {
  switch (atom) {
    case OperatorAtom::laplacian_x: return {-2, 0};
    case OperatorAtom::laplacian_u: return {0, -2};
    case OperatorAtom::norm_sq_x: return {2, 0};
    case OperatorAtom::norm_sq_u: return {0, 2};
    case OperatorAtom::inner_ux: return {1, 1};
    case OperatorAtom::cross_dd: return {-1, -1};
    case OperatorAtom::skew_ux: return {-1, 1};
    case OperatorAtom::skew_xu: return {1, -1};
    case OperatorAtom::euler_x:
    case OperatorAtom::euler_u: return {0, 0};
  }
  return {0, 0};
}

std::string atom_name(OperatorAtom atom) {
  switch (atom) {
    case OperatorAtom::laplacian_x: return "Lx";
    case OperatorAtom::laplacian_u: return "Lu";
    case OperatorAtom::norm_sq_x: return "|x|^2";
    case OperatorAtom::norm_sq_u: return "|u|^2";
    case OperatorAtom::inner_ux: return "<u,x>";
    case OperatorAtom::cross_dd: return "<du,dx>";
    case OperatorAtom::skew_ux: return "<u,dx>";
    case OperatorAtom::skew_xu: return "<x,du>";
    case OperatorAtom::euler_x: return "Ex";
    case OperatorAtom::euler_u: return "Eu";
  }
  return "?";
}

Polynomial apply_atom(OperatorAtom atom, const Polynomial& p) {
  const int m = p.m();
  switch (atom) {
    case OperatorAtom::laplacian_x: return laplacian(p, 0);
    case OperatorAtom::laplacian_u: return laplacian(p, m);
    case OperatorAtom::norm_sq_x: return norm_sq(p, 0);
    case OperatorAtom::norm_sq_u: return norm_sq(p, m);
    case OperatorAtom::skew_ux: return skew(p, 0, m);
    case OperatorAtom::skew_xu: return skew(p, m, 0);
    case OperatorAtom::inner_ux:
      return map_terms(p, [&](const Monomial& mono, auto emit) {
        for (int j = 0; j < m; ++j) {
          Monomial image = mono;
          image.bump(j, 1);
          image.bump(m + j, 1);
          emit(image, 1);
        }
      });
    case OperatorAtom::cross_dd:
      return map_terms(p, [&](const Monomial& mono, auto emit) {
        for (int j = 0; j < m; ++j) {
          const int a = mono[j];
          const int b = mono[m + j];
          if (a == 0 || b == 0) continue;
          Monomial image = mono;
          image.set(j, a - 1);
          image.set(m + j, b - 1);
          emit(image, static_cast<long>(a) * b);
        }
      });
    case OperatorAtom::euler_x:
      return map_terms(p, [](const Monomial& mono, auto emit) { emit(mono, mono.x_degree()); });
    case OperatorAtom::euler_u:
      return map_terms(p, [](const Monomial& mono, auto emit) { emit(mono, mono.u_degree()); });
  }
  throw InvalidArgument("unknown operator atom");
}

LinearOperator LinearOperator::identity(int m) { return word(m, 1, {}); }

LinearOperator LinearOperator::atom(int m, OperatorAtom a) { return word(m, 1, {a}); }

LinearOperator LinearOperator::scalar(int m, EulerRationalScale s) {
  return word(m, std::move(s), {});
}

LinearOperator LinearOperator::word(int m, EulerRationalScale s, std::vector<OperatorAtom> atoms) {
  LinearOperator op(m);
  op.terms_.push_back({std::move(s), std::move(atoms)});
  return op;
}

LinearOperator& LinearOperator::operator+=(const LinearOperator& o) {
  if (m_ != o.m_) throw DimensionMismatch("operators act in different dimensions");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

LinearOperator LinearOperator::scaled(const EulerRationalScale& s) const {
  LinearOperator out = *this;
  for (auto& t : out.terms_) t.scale = s * t.scale;
  return out;
}

std::string LinearOperator::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += t.scale.to_string();
    for (auto a : t.atoms) out += " " + atom_name(a);
  }
  return out.empty() ? "0" : out;
}

Polynomial apply(const LinearOperator& op, const Polynomial& p) {
  if (op.m() != p.m()) throw DimensionMismatch("operator and polynomial dimensions differ");
  PolynomialBuilder out(p.m());
  auto apply_part = [&](const Bidegree& bd, const Polynomial& part) {
    for (const auto& term : op.terms()) {
      Polynomial q = part;
      Bidegree image = bd;
      for (auto it = term.atoms.rbegin(); it != term.atoms.rend() && !q.is_zero(); ++it) {
        q = apply_atom(*it, q);
        const Bidegree s = atom_shift(*it);
        image.k += s.k;
        image.l += s.l;
      }
      if (q.is_zero()) continue;
      out.add_scaled(q, term.scale.evaluate(image));
    }
  };
  if (p.is_zero()) return std::move(out).build();
  if (p.is_bihomogeneous()) {
    apply_part(p.bidegree(), p);
  } else {
    for (const auto& [bd, part] : bidegree_split(p)) apply_part(bd, part);
  }
  return std::move(out).build();
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  if (a.m() != b.m()) throw DimensionMismatch("operators act in different dimensions");
  LinearOperator out(a.m());
  for (const auto& ta : a.terms()) {
    Bidegree shift{0, 0};
    for (auto atom : ta.atoms) {
      const Bidegree s = atom_shift(atom);
      shift.k += s.k;
      shift.l += s.l;
    }
    for (const auto& tb : b.terms()) {
      std::vector<OperatorAtom> atoms = ta.atoms;
      atoms.insert(atoms.end(), tb.atoms.begin(), tb.atoms.end());
      out += LinearOperator::word(a.m(), ta.scale * tb.scale.shifted(-shift.k, -shift.l),
                                  std::move(atoms));
    }
  }
  return out;
}

bool commutator_check(const LinearOperator& a, const LinearOperator& b, const LinearOperator& rhs,
                      std::span<const Polynomial> samples) {
  for (const auto& s : samples) {
    const Polynomial lhs = apply(a, apply(b, s)) - apply(b, apply(a, s));
    if (lhs != apply(rhs, s)) return false;
  }
  return true;
}

}  // namespace harmonic2v
