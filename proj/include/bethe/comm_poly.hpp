#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

/// A commuting variable x_a[r]: basis index a, level r (t-degree, or r-1 for
/// congruence coordinates γ^{(r)}). Packed so that numeric order is (level, index).
using VarId = std::uint32_t;

constexpr VarId make_var(std::uint32_t index, std::uint32_t level) { return (level << 16) | index; }
constexpr std::uint32_t var_index(VarId v) { return v & 0xFFFFu; }
constexpr std::uint32_t var_level(VarId v) { return v >> 16; }

/// Sorted multiset of variables.
using Monomial = std::vector<VarId>;

int deg1(const Monomial& m);  // Σ (level + 1)
int deg2(const Monomial& m);  // Σ level

/// Graded order: deg1, then length, then lexicographic on the sorted variables.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial multiply(const Monomial& a, const Monomial& b);

using VarNamer = std::function<std::string(VarId)>;

std::string default_var_name(VarId v);

/// Exact commutative polynomial with rational coefficients. No zero
/// coefficient is ever stored.
class CommPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  CommPoly() = default;
  static CommPoly constant(const Rational& c);
  static CommPoly var(VarId v);
  static CommPoly term(Monomial m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const Rational& c);

  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator-(CommPoly a) { return a *= Rational(-1); }
  friend CommPoly operator*(CommPoly a, const Rational& c) { return a *= c; }
  friend CommPoly operator*(const Rational& c, CommPoly a) { return a *= c; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

  CommPoly pow(int k) const;

  /// -1 for the zero polynomial and for constants.
  int max_level() const;
  /// Largest number of variable factors in a term (-1 for zero).
  int max_factors() const;
  /// Partial derivative with respect to one variable.
  CommPoly derivative(VarId v) const;
  /// Replaces each variable by a polynomial (algebra homomorphism).
  CommPoly substitute(const std::function<CommPoly(VarId)>& image) const;
  /// Renames variables; the map must be injective on the support.
  CommPoly rename(const std::function<VarId(VarId)>& f) const;

  std::string to_string(const VarNamer& namer = default_var_name) const;

 private:
  Terms terms_;
};

/// Polynomial in a formal parameter (v for the pencil map, ε for torus paths)
/// with CommPoly coefficients; coeffs[k] multiplies param^k.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(CommPoly c) : coeffs_{std::move(c)} {}
  explicit ParamPoly(std::vector<CommPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<CommPoly>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const CommPoly& at(int k) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Product with all powers above `max_degree` dropped (max_degree < 0: exact).
  static ParamPoly multiply(const ParamPoly& a, const ParamPoly& b, int max_degree = -1);
  /// Scalar polynomial in the parameter times a CommPoly.
  static ParamPoly scale(const std::vector<Rational>& scalar, const CommPoly& p);
  ParamPoly truncated(int max_degree) const;
  /// Multiplies by param^k.
  ParamPoly shifted(int k) const;
  ParamPoly map(const std::function<CommPoly(const CommPoly&)>& f) const;

 private:
  void trim();
  std::vector<CommPoly> coeffs_;
};

}  // namespace bethe
