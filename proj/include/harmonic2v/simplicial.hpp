#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "harmonic2v/polynomial.hpp"
#include "harmonic2v/report.hpp"

namespace harmonic2v {

/// Cell C^i S_u^j H_{k,l} of the ladder.
struct LadderIndex {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;
  friend auto operator<=>(const LadderIndex&, const LadderIndex&) = default;
};

/// A simplicial harmonic of bidegree (k,l) together with its ladder cell.
struct SimplicialComponent {
  LadderIndex index;
  Polynomial harmonic;
};

enum class Strategy {
  direct,      // Pi_{i,j} = Pi A^i S_x^j / alpha for every cell
  sequential,  // peel cells off one at a time, no master projection needed
};

/// One term |x|^{2a} |u|^{2b} C^i S_u^j H of a full decomposition.
struct DecomposedComponent {
  Bidegree source;  // bidegree of the bihomogeneous input part
  int a = 0;
  int b = 0;
  SimplicialComponent component;
};

struct DecompositionResult {
  int m = 0;
  std::vector<DecomposedComponent> components;  // sorted by (source, a, b, i, j)
};

/// conj(z_1^{k-l} (z_1 w_2 - z_2 w_1)^l) with z_j = x_{2j-1} + i x_{2j},
/// w_j = u_{2j-1} + i u_{2j}; a highest weight vector of H_{k,l}.
Polynomial highest_weight_vector(int k, int l, int m);

/// Ladder cells (i,j) of a double harmonic of bidegree (p,q): i + j <= q and
/// j >= max(0, q - p), so that the target label (p-i+j, q-i-j) has k >= l.
std::vector<std::pair<int, int>> ladder_cells(Bidegree pq);

/// Projection of a bihomogeneous double harmonic of bidegree (k,l), k >= l,
/// onto its H_{k,l} component.
Polynomial master_projection(const Polynomial& p);

/// The H_{p-i+j, q-i-j} component of cell (i,j). Returns nullopt when the cell
/// does not occur for this bidegree (target label with k < l); throws
/// IndexOutOfRange when i > q or j > q - i.
std::optional<SimplicialComponent> project_component(const Polynomial& p, int i, int j);

/// Components of a bihomogeneous double harmonic, sorted by (i,j). Cells whose
/// harmonic vanishes for this input are dropped unless `include_zero` is set.
std::vector<SimplicialComponent> decompose_double_harmonic(const Polynomial& p,
                                                           Strategy strategy = Strategy::direct,
                                                           bool include_zero = false);

/// Two-stage pipeline: double Fischer split, then ladder decomposition.
DecompositionResult decompose_full(const Polynomial& p, Strategy strategy = Strategy::direct,
                                   bool include_zero = false);

/// C^i S_u^j H.
Polynomial embed(const SimplicialComponent& c);
/// |x|^{2a} |u|^{2b} C^i S_u^j H.
Polynomial embed(const DecomposedComponent& c, int m);
/// Sum of all embedded components.
Polynomial reconstruct(const DecompositionResult& result);

/// Pairwise Fischer orthogonality of the embedded components.
CheckReport verify_component_orthogonality(const DecompositionResult& result);

}  // namespace harmonic2v
