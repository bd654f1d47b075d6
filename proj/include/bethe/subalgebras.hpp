#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bethe/comm_poly.hpp"
#include "bethe/lie_algebra.hpp"
#include "bethe/poisson.hpp"
#include "bethe/subspace.hpp"

namespace bethe {

/// A named generator with its grading metadata.
struct FamilyElement {
  std::string label;
  CommPoly value;
  int degree = 0;  // deg1 for loop/congruence families, polynomial degree for S(g)
};

/// Generators of a commutative family. `context` says where the elements live:
/// "S(g[t])", "S(g)" or "O(G1)".
struct GeneratorFamily {
  std::string context;
  std::vector<FamilyElement> elements;

  /// Appends after checking that the element is nonzero.
  void add(std::string label, CommPoly value, int degree);
  std::vector<Graded<CommPoly>> graded() const;
  std::vector<CommPoly> values() const;
};

/// {D^k Φ_i : k <= kmax} in S(g[t]/t^R). D^k Φ_i has deg1 = deg Φ_i + k, deg2 = k.
GeneratorFamily gaudin_generators(const LoopContext& ctx, int kmax);

/// {∂_χ^k Φ_l : 0 <= k < deg Φ_l} in S(g); χ a Cartan vector with no root vanishing.
GeneratorFamily soa_generators(const LieAlgebra& g, const Vector& chi);

/// Rank of the Jacobian d(gens)/d(x_a[0]) at a point.
std::size_t jacobian_rank(const std::vector<CommPoly>& gens, const std::vector<VarId>& vars,
                          const std::map<VarId, Rational>& point);

/// Congruence coordinate γ_ij^{(r)} (1-based i, j; r >= 1).
VarId gamma_var(int n, int i, int j, int r);
/// Taylor coordinate Y_ij of g - I at the identity.
VarId taylor_var(int n, int i, int j);

/// Series [u^0 .. u^{-max_order}] of a polynomial in Taylor coordinates evaluated at
/// g(u) = I + Σ_r γ^{(r)} u^{-r}.
std::vector<CommPoly> congruence_series(int n, const CommPoly& f, int max_order);

/// Σ_{|S|=k} c_S det(I + Y)_{SS} in Taylor coordinates.
CommPoly bethe_function(int n, int k, const std::vector<Rational>& c);

/// σ_k^{(r)}(C) for 1 <= k <= n, 1 <= r <= rmax, as polynomials in γ.
GeneratorFamily classical_bethe(int n, const std::vector<Rational>& c, int rmax);

/// Top F2 part of a polynomial in γ (fewest variable factors per deg1 class), with
/// γ_ij^{(s)} -> x_{e_ji}[s-1] in gl_n.
CommPoly congruence_gr2(int n, const CommPoly& p);
/// γ_ij^{(s)} -> x_{e_ji}[s-1] on every term.
CommPoly congruence_to_loop(int n, const CommPoly& p);

/// gr2 f^{(r)} by expanding f on g(u) and extracting the top class.
CommPoly gr2_leading(int n, const CommPoly& f, int r);
/// The same by D^{r-k} f_k / (r-k)!, f_k the lowest nonconstant homogeneous part.
CommPoly gr2_leading_formula(int n, const CommPoly& f, int r);

/// All monomials of S(g[t]/t^R) with the given deg1 (and deg2 when >= 0).
std::vector<Monomial> component_monomials(int dim, int truncation, int d1, int d2 = -1);

/// Kernel of p -> {seed, p}_shift on the deg1 = d component, intersected with the
/// g[0]-invariants under {,}_0 when requested. Columns are registered in `coords`.
Subspace centralizer_subalgebra(const LoopContext& ctx, const CommPoly& seed, int d, int shift,
                                bool invariant_only, MonomialCoordinates& coords);

/// Products of generators with total degree d.
std::vector<CommPoly> generated_component(const GeneratorFamily& gens, int d);

/// span{a b : a in A[i], b in B[d - i]} from per-degree element lists.
Subspace product_span(const std::vector<std::vector<CommPoly>>& a, const std::vector<std::vector<CommPoly>>& b, int d,
                      MonomialCoordinates& coords);

/// Dimensions of the degree components 0..cutoff of the generated subalgebra.
std::vector<std::size_t> poincare_series(const GeneratorFamily& gens, int cutoff);

/// Coefficients of Π_i (1 - q^{d_i})^{-1} through q^cutoff.
std::vector<std::size_t> free_poincare(const std::vector<int>& degrees, int cutoff);

/// Components of the classical Bethe algebra along C(ε) = C0 exp(εχ).
struct BetheLimit {
  Subspace limit;
  Subspace at_base;  // B(C0) component
  std::size_t generic_dim = 0;
  int exp_order = 0;  // ε-order at which the limit stabilized
};

/// ε -> 0 limit of the deg1 = d component, raising the exp truncation order until two
/// consecutive orders agree (hard cap `max_order`, DomainError past it).
BetheLimit bethe_limit_component(int n, const std::vector<Rational>& c0, const std::vector<Rational>& chi, int d,
                                 MonomialCoordinates& coords, int max_order = 8);

/// A_χ ⊂ S(z(C0)) moved to congruence coordinates γ^{(1)} via x_{e_ij}[0] -> γ_ij^{(1)}.
GeneratorFamily shift_family_in_congruence(int n, const std::vector<Rational>& c0, const std::vector<Rational>& chi);

/// Universal Gaudin family of z(C) ⊂ gl_n written in gl_n loop variables.
GeneratorFamily centralizer_gaudin(int n, const std::vector<Rational>& c, int kmax, int truncation);

}  // namespace bethe
