#pragma once

#include <map>
#include <utility>

#include "bethe/comm_poly.hpp"
#include "bethe/lie_algebra.hpp"

namespace bethe {

/// S(g[t]/t^R): loop variables x_a[r] with r < R.
class LoopContext {
 public:
  LoopContext(const LieAlgebra& g, int truncation);

  const LieAlgebra& algebra() const { return *g_; }
  int truncation() const { return r_; }

  /// x_a[r]; throws TruncationOverflow when r >= R.
  CommPoly x(int a, int r) const;
  VarId var(int a, int r) const;

  CommPoly poisson0(const CommPoly& p, const CommPoly& q) const { return bracket(p, q, 0); }
  CommPoly poisson1(const CommPoly& p, const CommPoly& q) const { return bracket(p, q, 1); }
  CommPoly pencil(const Rational& u, const Rational& v, const CommPoly& p, const CommPoly& q) const;
  /// {x[n], y[m]} = [x,y][n+m+shift], extended by Leibniz.
  CommPoly bracket(const CommPoly& p, const CommPoly& q, int shift) const;

  /// D(x[n]) = (n+1) x[n+1].
  CommPoly derivation(const CommPoly& p) const;
  CommPoly derivation(const CommPoly& p, int times) const;

  /// x[m] -> Σ_{k<=cutoff} (-v)^k x[m+k], truncated at v^cutoff.
  ParamPoly phi_1v(const CommPoly& p, int cutoff) const;
  /// x[m] -> x[m] + v x[m+1], truncated at v^cutoff.
  ParamPoly phi_1v_inverse(const ParamPoly& p, int cutoff) const;
  /// {P, Q}_0 + v {P, Q}_1 for v-polynomials, truncated at v^cutoff.
  ParamPoly transported_bracket(const ParamPoly& p, const ParamPoly& q, int cutoff) const;

  /// Σ_a x_a[0] x^a[0] and Σ_a x_a[0] x^a[1].
  CommPoly omega() const;
  CommPoly Omega() const;

  /// Φ_l lifted to x_a[0] variables (identity on variable ids).
  const std::vector<InvariantPolynomial>& invariants() const { return g_->invariants(); }

  VarNamer namer() const { return level_namer(*g_); }

 private:
  const LieAlgebra* g_;
  int r_;
};

/// Bihomogeneous decomposition keyed by (deg1, deg2).
std::map<std::pair<int, int>, CommPoly> bigrade(const CommPoly& p);

}  // namespace bethe
