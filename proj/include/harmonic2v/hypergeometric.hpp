#pragma once

#include <gmpxx.h>

#include <vector>

namespace harmonic2v {

/// pFq(a_1..a_p; b_1..b_q; z). Exact evaluation needs a terminating series.
struct PFQSpec {
  std::vector<mpq_class> upper;
  std::vector<mpq_class> lower;
  mpq_class argument{1};
};

/// Sum over j of prod (a_i)^{(j)} / prod (b_i)^{(j)} * z^j / j!, which stops at
/// N = min{-a : a upper, a a non-positive integer}.
/// Throws NonTerminating when no upper parameter is a non-positive integer and
/// LowerParameterPole when some lower parameter -M has M < N.
mpq_class eval_pfq(const PFQSpec& spec);

/// Both sides of an exact identity.
struct IdentityCheck {
  mpq_class lhs;
  mpq_class rhs;
  bool holds() const { return lhs == rhs; }
  explicit operator bool() const { return holds(); }
};

/// 4F3(a,b,c,d; e-1,f,g; 1)
///   = 4F3(a,b,c,d; e,f,g; 1) + abcd/((e-1)efg) 4F3(a+1,b+1,c+1,d+1; e+1,f+1,g+1; 1).
IdentityCheck verify_contiguous(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                                const mpq_class& d, const mpq_class& e, const mpq_class& f,
                                const mpq_class& g);

/// Whipple's transformation of a terminating 1-balanced 4F3:
///   4F3(a,b,-z,-n; u,v,w; 1)
///     = (v+z)^{(n)} (w+z)^{(n)} / ((v)^{(n)} (w)^{(n)})
///       * 4F3(u-a, u-b, -z, -n; u, 1-v-z-n, 1-w-z-n; 1).
/// Needs n >= 0 and a + b - z - n + 1 == u + v + w (InvalidArgument otherwise).
/// GammaPole is thrown when (v)^{(n)} or (w)^{(n)} vanishes.
IdentityCheck verify_whipple(const mpq_class& a, const mpq_class& b, const mpq_class& z, int n,
                             const mpq_class& u, const mpq_class& v, const mpq_class& w);

/// Product/difference identity for n >= 1:
///   3F2(-1, a+c, b-c; a+n, b+n; z) 4F3(1-n, a+b+n+1, a+c, b-c; a+1, b+1, a+b+1; z)
///     - 4F3(-n, a+b+n, a+c, b-c; a+1, b+1, a+b+1; z)
///   = z(z-1)(1-n)(a+b+n+1)(a+c)(b-c) / ((a+1)(b+1)(a+n)(b+n))
///     * 4F3(2-n, a+b+n+2, a+c+1, b-c+1; a+2, b+2, a+b+1; z).
/// At n = 1 the right-hand side is 0 (its prefactor vanishes).
IdentityCheck verify_product_identity(const mpq_class& a, const mpq_class& b, const mpq_class& c,
                              const mpq_class& z, int n);

/// z = 1 specialisation: the first check is the product identity with a zero
/// right-hand side, the second the closed form
///   3F2(-1, a+c, b-c; a+n, b+n; 1) = 1 - (a+c)(b-c)/((a+n)(b+n)).
std::vector<IdentityCheck> verify_product_identity_at_one(const mpq_class& a, const mpq_class& b,
                                         const mpq_class& c, int n);

/// Coefficient of C^i S_u^j H in Pi[C^i S_u^j H] for the master projection onto
/// H_{k,l}, where H sits in H_{k-i+j, l-i-j}. Equals 1 at (i,j) = (0,0).
mpq_class g_sum(int k, int l, int i, int j, int m);

/// g_sum == 0 for a non-trivial cell (1 <= i+j <= l, k >= l).
bool verify_g_vanishes(int k, int l, int i, int j, int m);

}  // namespace harmonic2v
