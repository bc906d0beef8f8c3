#pragma once

#include <gmpxx.h>

namespace harmonic2v {

// Coefficients of the generator action on the ladder C^i S_u^j H_{k,l}
// (k >= l >= 0, 0 <= j <= k - l), all exact in dimension m > 4.

/// S_x C^i S_u^j H = phi_{i,j}(k,l) C^i S_u^{j-1} H.
mpq_class ladder_phi(int i, int j, int k, int l, int m);

/// A C^i H = c_i(k,l) C^{i-1} H, with c_0 = 0.
mpq_class ladder_c(int i, int k, int l, int m);

/// A C^i S_u^j H = psi_{i,j}(k,l) C^{i-1} S_u^j H.
mpq_class ladder_psi(int i, int j, int k, int l, int m);

/// A^p S_x^q C^i S_u^j H = alpha^{p,q}_{i,j}(k,l) C^{i-p} S_u^{j-q} H  (p <= i, q <= j).
mpq_class ladder_alpha(int i, int j, int p, int q, int k, int l, int m);

/// Coefficient of C^i S_u^j A^i S_x^j in the master projection onto H_{k,l}
/// (i + j <= l).
mpq_class ladder_beta(int i, int j, int k, int l, int m);

}  // namespace harmonic2v
