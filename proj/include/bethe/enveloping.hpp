#pragma once

#include <memory>
#include <vector>

#include "bethe/comm_poly.hpp"
#include "bethe/lie_algebra.hpp"
#include "bethe/pbw.hpp"

namespace bethe {

/// U(g): letter a = basis index a.
PbwAlgebra enveloping(const LieAlgebra& g);

/// U(g)^{⊗n} as U(g^{⊕n}): letter copy*dim + a.
PbwAlgebra tensor_power(const LieAlgebra& g, int copies);

/// U(g ⊗ C[t]/t^R): letter r*dim + a for x_a[r].
PbwAlgebra current_algebra(const LieAlgebra& g, int truncation);

inline Letter current_letter(const LieAlgebra& g, int a, int r) {
  return static_cast<Letter>(r * g.dim() + a);
}

/// Symmetrization S(g[t]) -> U(g[t]/t^R) of a commutative polynomial: each
/// monomial becomes the average of its orderings, normal-ordered.
NCPoly symmetrize(const PbwAlgebra& u, const LieAlgebra& g, const CommPoly& p);

/// Leading symbol: the top-length part of a normal-ordered element, read as a
/// commutative polynomial in x_a[r].
CommPoly symbol(const LieAlgebra& g, const NCPoly& p);

/// ev_z on S(g[t]): x_a[r] -> Σ_i z_i^r x_a^{(i)}, variables make_var(i*dim + a, 0).
CommPoly gaudin_evaluation(const LieAlgebra& g, const CommPoly& p, const std::vector<Rational>& z);

/// ev_z on U(g[t]) (words over current_algebra letters) into U(g)^{⊗n}.
NCPoly gaudin_evaluation(const LieAlgebra& g, const PbwAlgebra& target, const NCPoly& p,
                         const std::vector<Rational>& z);

/// Σ_a Σ_{r+s=m} x_a[r] x^a[s] in U(g[t]/t^R): the quantum quadratic Gaudin elements.
NCPoly quadratic_gaudin(const LieAlgebra& g, const PbwAlgebra& u, int m);

/// Σ_a x_a^{(i)} x^{a,(j)} in U(g)^{⊗n}.
NCPoly casimir_tensor(const LieAlgebra& g, const PbwAlgebra& target, int i, int j);

/// Coefficients of cdet(∂_z - L(z)), L_ij(z) = Σ_{r<R} e_ij[r] z^{-r-1}, in
/// U(gl_n[t]/t^R).
struct TalalaevCoefficient {
  int d_power;  // power of ∂_z
  int z_power;  // s in z^{-s}
  NCPoly value;
};

std::vector<TalalaevCoefficient> talalaev_generators(const LieAlgebra& gl_n, const PbwAlgebra& u, int max_z_power);

/// Σ_{α>0} (α,h)/(α,χ) e_α e_{-α} in U(g).
NCPoly quadratic_soa_element(const LieAlgebra& g, const PbwAlgebra& u, const Vector& chi, const Vector& h);

LetterNamer current_namer(const LieAlgebra& g);
LetterNamer tensor_namer(const LieAlgebra& g);

}  // namespace bethe
