#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bethe/comm_poly.hpp"
#include "bethe/linear.hpp"

namespace bethe {

/// Sparse g-vector: (basis index, coefficient) with distinct indices.
using SparseVec = std::vector<std::pair<int, Rational>>;

struct RootDatum {
  Vector alpha;  // values on the Cartan basis elements, in cartan_indices order
  int positive;  // index of e_α
  int negative;  // index of e_{-α}
};

/// Φ on t-degree-0 variables x_a[0] = make_var(a, 0).
struct InvariantPolynomial {
  CommPoly poly;
  int degree = 0;
};

/// Torus element C. Diagonal entries for matrix algebras; per-root values
/// e^α(C) (aligned with root_data) otherwise.
struct TorusElement {
  std::vector<Rational> diagonal;
  std::vector<Rational> root_values;

  static TorusElement diag(std::vector<Rational> entries) { return {std::move(entries), {}}; }
  static TorusElement identity(std::size_t n) { return diag(std::vector<Rational>(n, Rational(1))); }
};

class LieAlgebra {
 public:
  struct Data {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<SparseVec>> brackets;  // brackets[a][b] = [x_a, x_b]
    Matrix form;
    std::vector<int> cartan_indices;
    std::vector<RootDatum> roots;
    std::vector<InvariantPolynomial> invariants;
    std::optional<int> rank;
    std::vector<Matrix> matrices;  // optional defining representation
  };

  /// Validates antisymmetry, Jacobi, form symmetry, nondegeneracy and
  /// invariance, and ad-invariance of every supplied invariant.
  explicit LieAlgebra(Data data);

  /// Structure constants and trace form from a faithful matrix basis.
  /// Invariants are the blockwise traces tr X_B^k; root data is read off
  /// matrix units.
  static LieAlgebra from_matrices(std::string name, std::vector<std::string> labels,
                                  std::vector<Matrix> matrices);

  const std::string& name() const { return d_.name; }
  int dim() const { return static_cast<int>(d_.labels.size()); }
  const std::vector<std::string>& labels() const { return d_.labels; }
  const std::string& label(int a) const { return d_.labels.at(static_cast<std::size_t>(a)); }
  int index_of(const std::string& label) const;
  int rank() const { return rank_; }
  std::vector<int> exponents() const;
  const Matrix& form() const { return d_.form; }
  const Matrix& inverse_form() const { return inverse_form_; }
  const std::vector<int>& cartan_indices() const { return d_.cartan_indices; }
  const std::vector<RootDatum>& roots() const { return d_.roots; }
  const std::vector<InvariantPolynomial>& invariants() const { return d_.invariants; }
  const std::vector<Matrix>& matrices() const { return d_.matrices; }
  bool has_matrices() const { return !d_.matrices.empty(); }
  int matrix_size() const;

  const SparseVec& bracket_basis(int a, int b) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Rational pairing(const Vector& x, const Vector& y) const;
  /// Dual basis element x^a = Σ_b (B^{-1})_{ab} x_b, sparse.
  const SparseVec& dual(int a) const { return dual_.at(static_cast<std::size_t>(a)); }

  /// Coordinates of a matrix in the matrix basis; throws when outside the span.
  Vector from_matrix(const Matrix& m) const;
  /// Diagonal matrix expressed in the basis (for matrix algebras).
  Vector diagonal_element(const std::vector<Rational>& entries) const;

  /// α(χ) for a g-vector χ supported on the Cartan part.
  Rational root_value(const RootDatum& root, const Vector& chi) const;

  /// Eigenvalue of Ad(C) on basis element a.
  Rational torus_eigenvalue(const TorusElement& c, int a) const;
  bool is_regular(const TorusElement& c) const;

  struct Embedded;
  /// Fixed subalgebra of Ad(C) with embedding into this algebra's indices.
  Embedded centralizer(const TorusElement& c) const;

  /// ∂_χ f = Σ_a ⟨x_a, χ⟩ ∂f/∂x_a[0].
  CommPoly directional_derivative(const CommPoly& f, const Vector& chi) const;

  /// Ad-invariance check: {x_a[0], Φ}_0 = 0 for every a.
  bool is_ad_invariant(const CommPoly& phi) const;

 private:
  void validate() const;
  std::vector<InvariantPolynomial> trace_invariants() const;

  Data d_;
  int rank_ = 0;
  Matrix inverse_form_;
  std::vector<SparseVec> dual_;
};

struct LieAlgebra::Embedded {
  LieAlgebra algebra;
  std::vector<int> embedding;  // sub index -> ambient index
};

/// Built-in presets: sl2 (e,h,f), sl3, gl2, gl3, gl4, all with the trace form.
LieAlgebra preset(const std::string& name);
std::vector<std::string> preset_names();
LieAlgebra gl(int n);

/// Loads the JSON config format (see docs/config.md).
LieAlgebra load_config_file(const std::string& path);
LieAlgebra parse_config(const std::string& json_text);

/// Poisson-style bracket of two polynomials in t-degree-0 variables under
/// the Lie bracket (no truncation concerns).
CommPoly lie_poisson(const LieAlgebra& g, const CommPoly& p, const CommPoly& q);

VarNamer level_namer(const LieAlgebra& g);

}  // namespace bethe
