#include "bethe/lie_algebra.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

Vector densify(const SparseVec& s, int dim) {
  Vector v(static_cast<std::size_t>(dim));
  for (const auto& [i, c] : s) v[static_cast<std::size_t>(i)] += c;
  return v;
}

SparseVec sparsify(const Vector& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) s.emplace_back(static_cast<int>(i), v[i]);
  }
  return s;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Vector flatten(const Matrix& m) {
  Vector v;
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

Rational trace_product(const Matrix& a, const Matrix& b) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) t += a[i][k] * b[k][i];
  }
  return t;
}

// (i, j) when the matrix is a single off-diagonal unit, (-1, -1) when diagonal,
// (-2, -2) otherwise.
std::pair<int, int> weight_of(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  int oi = -1, oj = -1;
  bool offdiag = false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || sgn(m[i][j]) == 0) continue;
      if (offdiag) return {-2, -2};
      offdiag = true;
      oi = i;
      oj = j;
    }
  }
  if (!offdiag) return {-1, -1};
  for (int i = 0; i < n; ++i) {
    if (sgn(m[i][i]) != 0) return {-2, -2};
  }
  return {oi, oj};
}

}  // namespace

CommPoly lie_poisson(const LieAlgebra& g, const CommPoly& p, const CommPoly& q) {
  CommPoly out;
  for (const auto& [m1, c1] : p.terms()) {
    for (std::size_t i = 0; i < m1.size();) {
      std::size_t i2 = i;
      while (i2 < m1.size() && m1[i2] == m1[i]) ++i2;
      Monomial r1(m1.begin(), m1.begin() + static_cast<long>(i));
      r1.insert(r1.end(), m1.begin() + static_cast<long>(i) + 1, m1.end());
      for (const auto& [m2, c2] : q.terms()) {
        for (std::size_t j = 0; j < m2.size();) {
          std::size_t j2 = j;
          while (j2 < m2.size() && m2[j2] == m2[j]) ++j2;
          const auto& br = g.bracket_basis(static_cast<int>(var_index(m1[i])),
                                           static_cast<int>(var_index(m2[j])));
          if (!br.empty()) {
            Monomial r2(m2.begin(), m2.begin() + static_cast<long>(j));
            r2.insert(r2.end(), m2.begin() + static_cast<long>(j) + 1, m2.end());
            Monomial rest = multiply(r1, r2);
            const std::uint32_t level = var_level(m1[i]) + var_level(m2[j]);
            Rational k = c1 * c2 * static_cast<long>((i2 - i) * (j2 - j));
            for (const auto& [d, c] : br) {
              Monomial mono = rest;
              mono.insert(std::upper_bound(mono.begin(), mono.end(), make_var(d, level)),
                          make_var(static_cast<std::uint32_t>(d), level));
              out.add_term(mono, k * c);
            }
          }
          j = j2;
        }
      }
      i = i2;
    }
  }
  return out;
}

LieAlgebra::LieAlgebra(Data data) : d_(std::move(data)) {
  const int n = dim();
  if (n <= 0) throw ValidationError("Lie algebra must have positive dimension");
  if (static_cast<int>(d_.brackets.size()) != n) throw DimensionError("bracket table has wrong size");
  for (const auto& row : d_.brackets) {
    if (static_cast<int>(row.size()) != n) throw DimensionError("bracket table has wrong size");
  }
  if (static_cast<int>(d_.form.size()) != n) throw DimensionError("form has wrong size");
  for (const auto& row : d_.form) {
    if (static_cast<int>(row.size()) != n) throw DimensionError("form has wrong size");
  }
  try {
    inverse_form_ = invert(d_.form);
  } catch (const ValidationError&) {
    throw ValidationError("invariant form is degenerate");
  }
  dual_.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) dual_[static_cast<std::size_t>(a)] = sparsify(inverse_form_[static_cast<std::size_t>(a)]);
  validate();
  if (d_.rank) {
    rank_ = *d_.rank;
  } else if (!d_.invariants.empty()) {
    rank_ = static_cast<int>(d_.invariants.size());
  } else {
    rank_ = static_cast<int>(d_.cartan_indices.size());
  }
  if (!d_.invariants.empty() && static_cast<int>(d_.invariants.size()) != rank_) {
    throw ValidationError("number of invariant generators differs from the rank");
  }
}

void LieAlgebra::validate() const {
  const int n = dim();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Vector ab = densify(bracket_basis(a, b), n);
      Vector ba = densify(bracket_basis(b, a), n);
      for (int k = 0; k < n; ++k) {
        if (ab[static_cast<std::size_t>(k)] != -ba[static_cast<std::size_t>(k)]) {
          throw ValidationError("bracket is not antisymmetric at (" + label(a) + ", " + label(b) + ")");
        }
      }
      if (d_.form[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
          d_.form[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) {
        throw ValidationError("form is not symmetric");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        Vector total(static_cast<std::size_t>(n));
        auto acc = [&](int x, int y, int z) {
          for (const auto& [d, k] : bracket_basis(y, z)) {
            for (const auto& [e, k2] : bracket_basis(x, d)) total[static_cast<std::size_t>(e)] += k * k2;
          }
        };
        acc(a, b, c);
        acc(b, c, a);
        acc(c, a, b);
        if (!is_zero(total)) {
          throw ValidationError("Jacobi identity fails at (" + label(a) + ", " + label(b) + ", " + label(c) + ")");
        }
      }
    }
  }
  // ⟨[x,y],z⟩ + ⟨y,[x,z]⟩ = 0
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        Rational s = 0;
        for (const auto& [d, k] : bracket_basis(x, y)) s += k * d_.form[static_cast<std::size_t>(d)][static_cast<std::size_t>(z)];
        for (const auto& [d, k] : bracket_basis(x, z)) s += k * d_.form[static_cast<std::size_t>(y)][static_cast<std::size_t>(d)];
        if (sgn(s) != 0) throw ValidationError("form is not ad-invariant");
      }
    }
  }
  for (int c : d_.cartan_indices) {
    if (c < 0 || c >= n) throw DimensionError("cartan index out of range");
  }
  for (const auto& r : d_.roots) {
    if (r.alpha.size() != d_.cartan_indices.size() || r.positive < 0 || r.positive >= n ||
        r.negative < 0 || r.negative >= n) {
      throw DimensionError("malformed root datum");
    }
  }
  for (const auto& inv : d_.invariants) {
    if (inv.poly.is_zero() || inv.poly.max_level() > 0) {
      throw ValidationError("invariant must be a nonzero polynomial in t-degree-0 variables");
    }
    for (const auto& [m, c] : inv.poly.terms()) {
      for (VarId v : m) {
        if (static_cast<int>(var_index(v)) >= n) throw DimensionError("invariant uses an unknown variable");
      }
      if (static_cast<int>(m.size()) != inv.degree) throw ValidationError("invariant is not homogeneous of its degree");
    }
    if (!is_ad_invariant(inv.poly)) throw ValidationError("supplied invariant is not ad-invariant");
  }
}

bool LieAlgebra::is_ad_invariant(const CommPoly& phi) const {
  for (int a = 0; a < dim(); ++a) {
    if (!lie_poisson(*this, CommPoly::var(make_var(static_cast<std::uint32_t>(a), 0)), phi).is_zero()) return false;
  }
  return true;
}

int LieAlgebra::index_of(const std::string& l) const {
  auto it = std::find(d_.labels.begin(), d_.labels.end(), l);
  if (it == d_.labels.end()) throw ParseError("unknown basis label '" + l + "'");
  return static_cast<int>(it - d_.labels.begin());
}

std::vector<int> LieAlgebra::exponents() const {
  std::vector<int> e;
  for (const auto& inv : d_.invariants) e.push_back(inv.degree - 1);
  return e;
}

int LieAlgebra::matrix_size() const {
  return d_.matrices.empty() ? 0 : static_cast<int>(d_.matrices.front().size());
}

const SparseVec& LieAlgebra::bracket_basis(int a, int b) const {
  return d_.brackets.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const int n = dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw DimensionError("bracket: vector length differs from dim");
  }
  Vector out(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    if (sgn(x[static_cast<std::size_t>(a)]) == 0) continue;
    for (int b = 0; b < n; ++b) {
      if (sgn(y[static_cast<std::size_t>(b)]) == 0) continue;
      Rational k = x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)];
      for (const auto& [d, c] : bracket_basis(a, b)) out[static_cast<std::size_t>(d)] += k * c;
    }
  }
  return out;
}

Rational LieAlgebra::pairing(const Vector& x, const Vector& y) const {
  Rational s = 0;
  for (int a = 0; a < dim(); ++a) {
    if (sgn(x.at(static_cast<std::size_t>(a))) == 0) continue;
    for (int b = 0; b < dim(); ++b) {
      s += x[static_cast<std::size_t>(a)] * d_.form[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
           y.at(static_cast<std::size_t>(b));
    }
  }
  return s;
}

Vector LieAlgebra::from_matrix(const Matrix& m) const {
  if (!has_matrices()) throw ValidationError(name() + " has no matrix realization");
  Matrix basis;
  for (const auto& b : d_.matrices) basis.push_back(flatten(b));
  Vector target = flatten(m);
  Vector y;
  if (target.size() != basis.front().size() || !solve_in_rowspace(basis, target, target.size(), y)) {
    throw DomainError("matrix does not lie in " + name());
  }
  return y;
}

Vector LieAlgebra::diagonal_element(const std::vector<Rational>& entries) const {
  const int n = matrix_size();
  if (static_cast<int>(entries.size()) != n) throw DimensionError("expected " + std::to_string(n) + " diagonal entries");
  Matrix m(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = entries[static_cast<std::size_t>(i)];
  return from_matrix(m);
}

Rational LieAlgebra::root_value(const RootDatum& root, const Vector& chi) const {
  Rational s = 0;
  for (std::size_t k = 0; k < d_.cartan_indices.size(); ++k) {
    s += root.alpha[k] * chi.at(static_cast<std::size_t>(d_.cartan_indices[k]));
  }
  return s;
}

Rational LieAlgebra::torus_eigenvalue(const TorusElement& c, int a) const {
  if (!c.diagonal.empty()) {
    if (!has_matrices()) throw ValidationError("diagonal torus element needs a matrix realization");
    if (static_cast<int>(c.diagonal.size()) != matrix_size()) throw DimensionError("torus element has wrong size");
    for (const auto& x : c.diagonal) {
      if (sgn(x) == 0) throw DomainError("torus element entries must be invertible");
    }
    auto [i, j] = weight_of(d_.matrices[static_cast<std::size_t>(a)]);
    if (i == -2) throw ValidationError("basis element " + label(a) + " is not a torus weight vector");
    if (i == -1) return 1;
    return c.diagonal[static_cast<std::size_t>(i)] / c.diagonal[static_cast<std::size_t>(j)];
  }
  if (c.root_values.size() != d_.roots.size()) throw DimensionError("torus element needs one value per root");
  for (std::size_t r = 0; r < d_.roots.size(); ++r) {
    if (sgn(c.root_values[r]) == 0) throw DomainError("torus element entries must be invertible");
    if (d_.roots[r].positive == a) return c.root_values[r];
    if (d_.roots[r].negative == a) return 1 / c.root_values[r];
  }
  return 1;
}

bool LieAlgebra::is_regular(const TorusElement& c) const {
  if (d_.roots.empty()) return true;
  for (const auto& r : d_.roots) {
    if (torus_eigenvalue(c, r.positive) == 1) return false;
  }
  return true;
}

LieAlgebra::Embedded LieAlgebra::centralizer(const TorusElement& c) const {
  std::vector<int> keep;
  for (int a = 0; a < dim(); ++a) {
    if (torus_eigenvalue(c, a) == 1) keep.push_back(a);
  }
  std::map<int, int> position;
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<int>(i);
  const std::size_t k = keep.size();
  Data sub;
  sub.name = "z(" + name() + ")";
  for (int a : keep) sub.labels.push_back(label(a));
  sub.brackets.assign(k, std::vector<SparseVec>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (const auto& [d, coef] : bracket_basis(keep[i], keep[j])) {
        auto it = position.find(d);
        if (it == position.end()) throw InternalError("centralizer is not closed under the bracket");
        sub.brackets[i][j].emplace_back(it->second, coef);
      }
    }
  }
  sub.form.assign(k, Vector(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sub.form[i][j] = d_.form[static_cast<std::size_t>(keep[i])][static_cast<std::size_t>(keep[j])];
  }
  for (int h : d_.cartan_indices) {
    auto it = position.find(h);
    if (it != position.end()) sub.cartan_indices.push_back(it->second);
  }
  if (sub.cartan_indices.size() == d_.cartan_indices.size()) {
    for (const auto& r : d_.roots) {
      if (position.count(r.positive) && position.count(r.negative)) {
        sub.roots.push_back({r.alpha, position[r.positive], position[r.negative]});
      }
    }
  }
  sub.rank = rank();
  if (has_matrices()) {
    for (int a : keep) sub.matrices.push_back(d_.matrices[static_cast<std::size_t>(a)]);
    LieAlgebra tmp(sub);
    sub.invariants = tmp.trace_invariants();
  } else if (k == static_cast<std::size_t>(dim())) {
    sub.invariants = d_.invariants;
  } else if (k == static_cast<std::size_t>(rank())) {
    for (int h : sub.cartan_indices) {
      sub.invariants.push_back({CommPoly::var(make_var(static_cast<std::uint32_t>(h), 0)), 1});
    }
  } else {
    throw ValidationError("centralizer invariants need a matrix realization or user data");
  }
  return {LieAlgebra(std::move(sub)), keep};
}

std::vector<InvariantPolynomial> LieAlgebra::trace_invariants() const {
  const int n = matrix_size();
  // X = Σ_a x_a[0] ρ(x^a)
  std::vector<std::vector<CommPoly>> x(static_cast<std::size_t>(n), std::vector<CommPoly>(static_cast<std::size_t>(n)));
  for (int a = 0; a < dim(); ++a) {
    CommPoly va = CommPoly::var(make_var(static_cast<std::uint32_t>(a), 0));
    for (const auto& [b, coef] : dual(a)) {
      const Matrix& m = d_.matrices[static_cast<std::size_t>(b)];
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) != 0) {
            x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += va * (coef * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
          }
        }
      }
    }
  }
  // blocks: connected components of the support graph of the basis matrices
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int i) {
    return parent[static_cast<std::size_t>(i)] == i ? i : parent[static_cast<std::size_t>(i)] = find(parent[static_cast<std::size_t>(i)]);
  };
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& m : d_.matrices) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (sgn(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) == 0) continue;
        used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
        parent[static_cast<std::size_t>(find(i))] = find(j);
      }
    }
  }
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) blocks[find(i)].push_back(i);
  }
  std::vector<InvariantPolynomial> out;
  Matrix linear_rows;  // coefficient vectors of accepted degree-1 invariants
  for (const auto& [root, idx] : blocks) {
    const std::size_t b = idx.size();
    std::vector<std::vector<CommPoly>> xb(b, std::vector<CommPoly>(b));
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) xb[i][j] = x[static_cast<std::size_t>(idx[i])][static_cast<std::size_t>(idx[j])];
    }
    auto power = xb;
    for (std::size_t k = 1; k <= b; ++k) {
      if (k > 1) {
        std::vector<std::vector<CommPoly>> next(b, std::vector<CommPoly>(b));
        for (std::size_t i = 0; i < b; ++i) {
          for (std::size_t l = 0; l < b; ++l) {
            if (power[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < b; ++j) next[i][j] += power[i][l] * xb[l][j];
          }
        }
        power = std::move(next);
      }
      CommPoly tr;
      for (std::size_t i = 0; i < b; ++i) tr += power[i][i];
      if (tr.is_zero()) continue;
      if (k == 1) {
        Vector row(static_cast<std::size_t>(dim()));
        for (const auto& [m, c] : tr.terms()) row[var_index(m[0])] = c;
        Matrix trial = linear_rows;
        trial.push_back(row);
        if (bethe::rank(trial, row.size()) == linear_rows.size()) continue;
        linear_rows = std::move(trial);
      }
      out.push_back({tr, static_cast<int>(k)});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });
  return out;
}

CommPoly LieAlgebra::directional_derivative(const CommPoly& f, const Vector& chi) const {
  CommPoly out;
  for (int a = 0; a < dim(); ++a) {
    Rational w = 0;
    for (int b = 0; b < dim(); ++b) w += d_.form[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * chi.at(static_cast<std::size_t>(b));
    if (sgn(w) == 0) continue;
    out += f.derivative(make_var(static_cast<std::uint32_t>(a), 0)) * w;
  }
  return out;
}

LieAlgebra LieAlgebra::from_matrices(std::string name, std::vector<std::string> labels, std::vector<Matrix> matrices) {
  const std::size_t dim = matrices.size();
  if (labels.size() != dim) throw DimensionError("one label per matrix required");
  Matrix basis;
  for (const auto& m : matrices) basis.push_back(flatten(m));
  const std::size_t width = basis.front().size();
  if (bethe::rank(basis, width) != dim) throw ValidationError("matrix basis is linearly dependent");
  Data d;
  d.name = std::move(name);
  d.labels = std::move(labels);
  d.brackets.assign(dim, std::vector<SparseVec>(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      Matrix ab = matmul(matrices[a], matrices[b]);
      Matrix ba = matmul(matrices[b], matrices[a]);
      for (std::size_t i = 0; i < ab.size(); ++i) {
        for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
      }
      Vector y;
      if (!solve_in_rowspace(basis, flatten(ab), width, y)) throw ValidationError("matrix span is not closed under commutators");
      d.brackets[a][b] = sparsify(y);
    }
  }
  d.form.assign(dim, Vector(dim));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) d.form[a][b] = trace_product(matrices[a], matrices[b]);
  }
  const int n = static_cast<int>(matrices.front().size());
  std::map<std::pair<int, int>, int> unit;
  for (std::size_t a = 0; a < dim; ++a) {
    auto w = weight_of(matrices[a]);
    if (w.first == -1) d.cartan_indices.push_back(static_cast<int>(a));
    if (w.first >= 0) unit[w] = static_cast<int>(a);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto p = unit.find({i, j});
      auto q = unit.find({j, i});
      if (p == unit.end() || q == unit.end()) continue;
      Vector alpha;
      for (int h : d.cartan_indices) {
        const Matrix& m = matrices[static_cast<std::size_t>(h)];
        alpha.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] - m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)]);
      }
      d.roots.push_back({alpha, p->second, q->second});
    }
  }
  d.matrices = std::move(matrices);
  d.rank = static_cast<int>(d.cartan_indices.size());
  LieAlgebra tmp(d);
  d.invariants = tmp.trace_invariants();
  return LieAlgebra(std::move(d));
}

namespace {

Matrix unit_matrix(int n, int i, int j) {
  Matrix m(static_cast<std::size_t>(n), Vector(static_cast<std::size_t>(n)));
  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
  return m;
}

}  // namespace

LieAlgebra gl(int n) {
  if (n < 1 || n > 9) throw BoundError("gl_n supported for 1 <= n <= 9");
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
      mats.push_back(unit_matrix(n, i, j));
    }
  }
  return LieAlgebra::from_matrices("gl" + std::to_string(n), labels, mats);
}

LieAlgebra preset(const std::string& name) {
  if (name == "sl2") {
    Matrix h = unit_matrix(2, 0, 0);
    h[1][1] = -1;
    return LieAlgebra::from_matrices("sl2", {"e", "h", "f"}, {unit_matrix(2, 0, 1), h, unit_matrix(2, 1, 0)});
  }
  if (name == "sl3") {
    std::vector<std::string> labels;
    std::vector<Matrix> mats;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
        mats.push_back(unit_matrix(3, i, j));
      }
    }
    for (int k = 0; k < 2; ++k) {
      Matrix h = unit_matrix(3, k, k);
      h[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(k + 1)] = -1;
      labels.push_back("h" + std::to_string(k + 1));
      mats.push_back(h);
    }
    return LieAlgebra::from_matrices("sl3", labels, mats);
  }
  if (name == "gl1" || name == "gl2" || name == "gl3" || name == "gl4") return gl(name[2] - '0');
  throw ParseError("unknown algebra preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"sl2", "sl3", "gl2", "gl3", "gl4"}; }

LieAlgebra parse_config(const std::string& json_text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    LieAlgebra::Data d;
    const int dim = j.at("dim").get<int>();
    if (dim <= 0 || dim > 4096) throw BoundError("config dim out of range");
    d.name = j.value("name", std::string("custom"));
    if (j.contains("labels")) {
      d.labels = j.at("labels").get<std::vector<std::string>>();
    } else {
      for (int a = 0; a < dim; ++a) d.labels.push_back("x" + std::to_string(a));
    }
    if (static_cast<int>(d.labels.size()) != dim) throw DimensionError("labels length differs from dim");
    auto index = [&](const json& v) {
      int i = v.is_string() ? -1 : v.get<int>();
      if (v.is_string()) {
        auto it = std::find(d.labels.begin(), d.labels.end(), v.get<std::string>());
        if (it == d.labels.end()) throw ParseError("unknown label " + v.get<std::string>());
        i = static_cast<int>(it - d.labels.begin());
      }
      if (i < 0 || i >= dim) throw DimensionError("basis index out of range");
      return i;
    };
    auto rational = [](const json& v) {
      if (v.is_string()) return parse_rational(v.get<std::string>());
      if (v.is_number_integer()) return Rational(v.get<long>());
      throw ParseError("rational values must be strings \"p/q\" or integers");
    };
    std::vector<std::vector<Vector>> dense(static_cast<std::size_t>(dim),
                                           std::vector<Vector>(static_cast<std::size_t>(dim), Vector(static_cast<std::size_t>(dim))));
    for (const auto& t : j.at("brackets")) {
      if (t.size() != 4) throw ParseError("bracket entries are [a, b, d, coeff]");
      int a = index(t[0]), b = index(t[1]), c = index(t[2]);
      Rational k = rational(t[3]);
      dense[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] += k;
      if (a != b) dense[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] -= k;
    }
    d.brackets.assign(static_cast<std::size_t>(dim), std::vector<SparseVec>(static_cast<std::size_t>(dim)));
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) d.brackets[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = sparsify(dense[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    }
    d.form.assign(static_cast<std::size_t>(dim), Vector(static_cast<std::size_t>(dim)));
    for (const auto& t : j.at("form")) {
      if (t.size() != 3) throw ParseError("form entries are [a, b, value]");
      int a = index(t[0]), b = index(t[1]);
      Rational k = rational(t[2]);
      d.form[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = k;
      d.form[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = k;
    }
    if (j.contains("cartan")) {
      for (const auto& v : j.at("cartan")) d.cartan_indices.push_back(index(v));
    }
    if (j.contains("roots")) {
      for (const auto& r : j.at("roots")) {
        RootDatum rd;
        for (const auto& v : r.at("alpha")) rd.alpha.push_back(rational(v));
        rd.positive = index(r.at("positive"));
        rd.negative = index(r.at("negative"));
        d.roots.push_back(std::move(rd));
      }
    }
    if (j.contains("rank")) d.rank = j.at("rank").get<int>();
    if (j.contains("invariants")) {
      for (const auto& inv : j.at("invariants")) {
        CommPoly p;
        int degree = -1;
        for (const auto& term : inv) {
          if (term.size() != 2) throw ParseError("invariant terms are [coeff, [indices...]]");
          Monomial m;
          for (const auto& v : term[1]) m.push_back(make_var(static_cast<std::uint32_t>(index(v)), 0));
          if (degree >= 0 && degree != static_cast<int>(m.size())) throw ValidationError("invariant is not homogeneous");
          degree = static_cast<int>(m.size());
          p += CommPoly::term(m, rational(term[0]));
        }
        d.invariants.push_back({p, degree});
      }
    }
    return LieAlgebra(std::move(d));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
}

LieAlgebra load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

VarNamer level_namer(const LieAlgebra& g) {
  std::vector<std::string> labels = g.labels();
  return [labels](VarId v) {
    const auto i = var_index(v);
    std::string base = i < labels.size() ? labels[i] : "x" + std::to_string(i);
    return base + "[" + std::to_string(var_level(v)) + "]";
  };
}

}  // namespace bethe
