#pragma once

#include <span>
#include <utility>
#include <vector>

#include "harmonic2v/polynomial.hpp"
#include "harmonic2v/report.hpp"

namespace harmonic2v {

/// |x|^{2i} |u|^{2j} part, with part double harmonic.
struct DoubleFischerComponent {
  int i = 0;
  int j = 0;
  Polynomial part;
};

/// The |y|^{2s} * harmonic piece of a bihomogeneous p, y = x or u; the
/// returned polynomial already includes the |y|^{2s} factor.
Polynomial sphere_fischer_project(const Polynomial& p, int s, Variable::Block block);

/// Nonzero components of p = sum |x|^{2i}|u|^{2j} part_{i,j}, sorted by (i,j).
std::vector<DoubleFischerComponent> double_fischer(const Polynomial& p);

/// Reassembles sum |x|^{2i}|u|^{2j} part.
Polynomial reconstruct(std::span<const DoubleFischerComponent> components, int m);

/// <p, q> = conj(p)(d_x, d_u) q evaluated at 0.
GaussianRational fischer_inner_product(const Polynomial& p, const Polynomial& q);

/// For each pair (p, q): <Cp,q> = <p,Aq> and <S_u p,q> = <p,S_x q> when both are
/// double harmonic, and <pi_s p,q> = <p,pi_s q> always.
CheckReport verify_adjoints(std::span<const std::pair<Polynomial, Polynomial>> pairs);

}  // namespace harmonic2v
