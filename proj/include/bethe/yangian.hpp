#pragma once

#include <vector>

#include "bethe/comm_poly.hpp"
#include "bethe/pbw.hpp"

namespace bethe {

/// Y(gl_n) in the RTT presentation, generators t_ij^{(r)} for 1 <= r <= N.
/// Letter of t_ij^{(r)} is (r-1)n^2 + (i-1)n + (j-1), which is also the
/// current-algebra letter of e_ij[r-1].
class Yangian {
 public:
  Yangian(int n, int truncation);
  Yangian(const Yangian&) = delete;
  Yangian& operator=(const Yangian&) = delete;

  int n() const { return n_; }
  int truncation() const { return N_; }
  const PbwAlgebra& algebra() const { return pbw_; }

  Letter letter(int i, int j, int r) const;
  /// t_ij^{(r)} as an element; r = 0 gives δ_ij.
  NCPoly t(int i, int j, int r) const;

  struct Generator {
    int i, j, r;
  };
  Generator decode(Letter x) const;

  /// [t_ij^{(r)}, t_kl^{(s)}] = Σ_{p=1}^{min(r,s)} (t_kj^{(p-1)} t_il^{(r+s-p)} - t_kj^{(r+s-p)} t_il^{(p-1)}),
  /// before normal ordering.
  NCPoly raw_commutator(int i, int j, int r, int k, int l, int s) const;

  NCPoly normal_form(const NCPoly& p) const { return pbw_.normal_form(p); }
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const { return pbw_.multiply(a, b); }
  NCPoly commutator(const NCPoly& a, const NCPoly& b) const { return pbw_.commutator(a, b); }

  /// Series coefficients [u^0 .. u^{-max_order}] of t_ab(u - shift).
  std::vector<NCPoly> shifted_series(int a, int b, int shift, int max_order) const;
  /// Σ_σ sgn σ t_{a_σ(1) b_1}(u) t_{a_σ(2) b_2}(u-1) ... t_{a_σ(k) b_k}(u-k+1).
  std::vector<NCPoly> quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols, int max_order) const;
  /// τ_k(u, C) = Σ_{|S|=k} c_S · qminor(S|S), coefficients of u^{-s}, s <= max_order.
  std::vector<NCPoly> bethe_series(int k, const std::vector<Rational>& c, int max_order) const;

  static int f1(const Word& w, int n);
  static int f2(const Word& w, int n);
  int f1_degree(const NCPoly& p) const;  // -1 for zero
  int f2_degree(const NCPoly& p) const;

  /// Top F1 part, t_ij^{(r)} -> γ_ij^{(r)} = make_var((i-1)n+(j-1), r-1).
  CommPoly gr1(const NCPoly& p) const;
  /// Top F2 part, t_ij^{(r)} -> e_ij[r-1]; words with e[r-1] at or past the
  /// current-algebra truncation are dropped.
  NCPoly gr2(const NCPoly& p, int current_truncation) const;

  LetterNamer namer() const;

 private:
  int n_;
  int N_;
  PbwAlgebra pbw_;
};

/// Names γ_ij^{(r)} variables as "g12(3)".
VarNamer congruence_namer(int n);

}  // namespace bethe
