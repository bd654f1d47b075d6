#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bethe/comm_poly.hpp"
#include "bethe/linear.hpp"
#include "bethe/pbw.hpp"

namespace bethe {

/// Subspace of Q^ambient held as a canonical reduced row-echelon basis.
/// Binary operations pad the smaller ambient space with trailing zero
/// coordinates, so subspaces built against a growing coordinate index compare
/// correctly.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Subspace span(Matrix rows, std::size_t ambient);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  Subspace padded(std::size_t ambient) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;
  /// A basis vector of `o` outside this subspace, if any.
  std::optional<Vector> witness_not_contained(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Growable coordinate system: key -> column, in first-seen order.
template <class Key, class Compare = std::less<Key>>
class Coordinates {
 public:
  std::size_t index(const Key& k) {
    auto [it, inserted] = columns_.try_emplace(k, keys_.size());
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  std::optional<std::size_t> find(const Key& k) const {
    auto it = columns_.find(k);
    if (it == columns_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return keys_.size(); }
  const Key& key(std::size_t i) const { return keys_.at(i); }
  const std::vector<Key>& keys() const { return keys_; }

 private:
  std::map<Key, std::size_t, Compare> columns_;
  std::vector<Key> keys_;
};

using MonomialCoordinates = Coordinates<Monomial, MonomialOrder>;
using WordCoordinates = Coordinates<Word, WordOrder>;

/// Registers all monomials of the inputs, then returns dense rows.
Matrix to_rows(const std::vector<CommPoly>& elements, MonomialCoordinates& coords);
Matrix to_rows(const std::vector<NCPoly>& elements, WordCoordinates& coords);
Subspace span_of(const std::vector<CommPoly>& elements, MonomialCoordinates& coords);
Subspace span_of(const std::vector<NCPoly>& elements, WordCoordinates& coords);
CommPoly to_poly(const Vector& v, const MonomialCoordinates& coords);
NCPoly to_poly(const Vector& v, const WordCoordinates& coords);

/// Associated graded of span(rows) for a filtration given by a level on each
/// column (an element's degree is the largest level among its support). Returns
/// level -> top-part subspace.
std::map<int, Subspace> associated_graded(const Matrix& rows, std::size_t ambient,
                                          const std::function<int(std::size_t)>& level);

/// A generator with its degree under the chosen grading.
template <class Elem>
struct Graded {
  Elem value;
  int degree;
};

/// All products g_{i1} ... g_{ik} (i1 <= ... <= ik) of total degree d; d = 0
/// gives {one}. Generators of degree <= 0 are rejected.
template <class Elem>
std::vector<Elem> products_of_degree(const std::vector<Graded<Elem>>& gens, int d,
                                     const std::function<Elem(const Elem&, const Elem&)>& mul, const Elem& one);

/// Elements {a * b : a in A[i], b in B[d - i]} from per-degree bases.
template <class Elem>
std::vector<Elem> product_elements(const std::vector<std::vector<Elem>>& a, const std::vector<std::vector<Elem>>& b, int d,
                                   const std::function<Elem(const Elem&, const Elem&)>& mul);

/// Polynomial in ε: coefficient k multiplies ε^k.
using UniPoly = std::vector<Rational>;

UniPoly uni_trim(UniPoly p);
UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const UniPoly& a, const Rational& c);
Rational uni_eval(const UniPoly& p, const Rational& x);
/// Smallest k with nonzero coefficient; -1 for zero.
int uni_valuation(const UniPoly& p);
/// Σ_{k<=order} (c x)^k / k!.
UniPoly truncated_exp(const Rational& c, int order);

/// Rows with entries in Q[ε].
using EpsMatrix = std::vector<std::vector<UniPoly>>;

/// Rank over Q(ε).
std::size_t generic_rank(const EpsMatrix& rows, std::size_t ambient);

/// ε -> 0 limit of span(rows) in the Grassmannian. Rows may be dependent; the
/// result has dimension equal to the generic rank.
Subspace limit_subspace(const EpsMatrix& rows, std::size_t ambient);

}  // namespace bethe

#include "bethe/subspace_impl.hpp"
