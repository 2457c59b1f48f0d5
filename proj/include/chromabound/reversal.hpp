#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chromabound/graph.hpp"
#include "chromabound/matrix.hpp"
#include "chromabound/weights.hpp"

namespace chromabound {

struct ReversalTerm {
  double weight = 0.0;
  Matrix unitary;
};

/// Weighted unitaries (r_j, U_j) with sum_j r_j U_j^dagger M U_j = -M for the
/// matrices the map is built for. Construction checks r_j > 0 and that every
/// U_j is n x n and unitary to 1e-10; it does not check the reversal itself
/// (see verify_reversal).
class SignReversalMap {
 public:
  SignReversalMap(std::size_t n, std::vector<ReversalTerm> terms);

  std::size_t dim() const { return n_; }
  const std::vector<ReversalTerm>& terms() const { return terms_; }

 private:
  std::size_t n_;
  std::vector<ReversalTerm> terms_;
};

/// sum_j r_j.
double reversal_cost(const SignReversalMap& map);

/// sum_j r_j U_j^dagger M U_j. Throws DimensionError on size mismatch.
HermitianMatrix apply_reversal(const SignReversalMap& map, const HermitianMatrix& target);

struct ReversalCheck {
  bool ok = false;
  double residual = 0.0;  ///< ||apply_reversal(map, M) + M||_F
};

/// ok iff residual <= tol * max(1, ||M||_F).
ReversalCheck verify_reversal(const SignReversalMap& map, const HermitianMatrix& target,
                              double tol = 1e-9);

/// Terms (1, D^j) for j = 1..q-1 with D = diag(omega^{c_k}) and omega = e^{2 pi i / q},
/// q = coloring.num_colors. Reverses W*A for every W; cost q - 1.
/// Throws ColoringError if the coloring is not proper for g.
SignReversalMap reversal_from_coloring(const Graph& g, const Coloring& coloring);

/// As above, and additionally checks the map against M = W*A
/// (residual <= 1e-9), throwing ContractError if it fails.
SignReversalMap reversal_from_coloring(const Graph& g, const Coloring& coloring,
                                       const WeightMatrix& w);

/// The n^2 unitaries X^a Z^b (a, b in [0, n)), X the cyclic shift
/// |k> -> |k+1 mod n>, Z = diag(omega^k). Index a*n + b; entry 0 is the identity.
std::vector<Matrix> weyl_heisenberg_family(std::size_t n);

/// (1/n^2) sum over the family of U^dagger M U, which equals (tr M / n) I.
HermitianMatrix schur_average(const HermitianMatrix& m);

/// Unit-weight terms over the n^2 - 1 non-identity family members; reverses
/// every traceless M. Throws ParameterError for n < 2.
SignReversalMap group_sign_reversal(std::size_t n);

/// Convex combination t*a + (1-t)*b of two maps of the same dimension, 0 < t < 1.
SignReversalMap mix(const SignReversalMap& a, const SignReversalMap& b, double t);

/// minimal_tau(Spec(M)): no sign reversal map for M costs less.
/// Throws ContractError unless |tr M| <= 1e-9 max(1, ||M||_F), DegenerateError for M = 0.
double cost_lower_bound(const HermitianMatrix& target);

/// JSON document {"n": n, "terms": [{"r": r, "u": [[re, im], ...]}]} with the
/// unitary row-major and numbers at 12 significant digits.
std::string serialize_map(const SignReversalMap& map);
/// Throws ParseError on malformed input; validation as in the constructor.
SignReversalMap parse_map(std::string_view text);

}  // namespace chromabound
