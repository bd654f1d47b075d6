#include "bethe/subspace.hpp"

#include <algorithm>
#include <numeric>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

Matrix pad_rows(Matrix rows, std::size_t ambient) {
  for (auto& r : rows) {
    if (r.size() > ambient) throw DimensionError("vector longer than the ambient space");
    r.resize(ambient);
  }
  return rows;
}

}  // namespace

Subspace Subspace::span(Matrix rows, std::size_t ambient) {
  Subspace s(ambient);
  EchelonForm e = rref(pad_rows(std::move(rows), ambient), ambient);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::padded(std::size_t ambient) const {
  if (ambient < ambient_) throw DimensionError("cannot shrink a subspace");
  Subspace s = *this;
  s.ambient_ = ambient;
  for (auto& r : s.basis_) r.resize(ambient);
  return s;
}

bool Subspace::contains(const Vector& v) const {
  Vector r = v;
  if (r.size() > ambient_) {
    for (std::size_t i = ambient_; i < r.size(); ++i) {
      if (sgn(r[i]) != 0) return false;
    }
  }
  r.resize(ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Rational f = r[pivots_[k]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = pivots_[k]; c < ambient_; ++c) r[c] -= f * basis_[k][c];
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& o) const { return !witness_not_contained(o).has_value(); }

std::optional<Vector> Subspace::witness_not_contained(const Subspace& o) const {
  for (const auto& v : o.basis_) {
    if (!contains(v)) return v;
  }
  return std::nullopt;
}

Subspace Subspace::sum(const Subspace& o) const {
  const std::size_t n = std::max(ambient_, o.ambient_);
  Matrix rows = pad_rows(basis_, n);
  Matrix other = pad_rows(o.basis_, n);
  rows.insert(rows.end(), other.begin(), other.end());
  return span(std::move(rows), n);
}

Subspace Subspace::intersect(const Subspace& o) const {
  const std::size_t n = std::max(ambient_, o.ambient_);
  Matrix a = pad_rows(basis_, n), b = pad_rows(o.basis_, n);
  // y_a A = y_b B  <=>  [y_a, y_b] [A; -B] = 0
  Matrix stacked = a;
  for (auto row : b) {
    for (auto& x : row) x = -x;
    stacked.push_back(std::move(row));
  }
  Matrix ker = left_nullspace(stacked, n);
  Matrix rows;
  for (const auto& y : ker) {
    Vector v(n);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (sgn(y[k]) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) v[c] += y[k] * a[k][c];
    }
    rows.push_back(std::move(v));
  }
  return span(std::move(rows), n);
}

bool operator==(const Subspace& a, const Subspace& b) {
  const std::size_t n = std::max(a.ambient_, b.ambient_);
  return a.pivots_ == b.pivots_ && pad_rows(a.basis_, n) == pad_rows(b.basis_, n);
}

Matrix to_rows(const std::vector<CommPoly>& elements, MonomialCoordinates& coords) {
  for (const auto& p : elements)
    for (const auto& [m, c] : p.terms()) coords.index(m);
  Matrix rows;
  for (const auto& p : elements) {
    Vector v(coords.size());
    for (const auto& [m, c] : p.terms()) v[*coords.find(m)] = c;
    rows.push_back(std::move(v));
  }
  return rows;
}

Matrix to_rows(const std::vector<NCPoly>& elements, WordCoordinates& coords) {
  for (const auto& p : elements)
    for (const auto& [w, c] : p.terms()) coords.index(w);
  Matrix rows;
  for (const auto& p : elements) {
    Vector v(coords.size());
    for (const auto& [w, c] : p.terms()) v[*coords.find(w)] = c;
    rows.push_back(std::move(v));
  }
  return rows;
}

Subspace span_of(const std::vector<CommPoly>& elements, MonomialCoordinates& coords) {
  Matrix rows = to_rows(elements, coords);
  return Subspace::span(std::move(rows), coords.size());
}

Subspace span_of(const std::vector<NCPoly>& elements, WordCoordinates& coords) {
  Matrix rows = to_rows(elements, coords);
  return Subspace::span(std::move(rows), coords.size());
}

CommPoly to_poly(const Vector& v, const MonomialCoordinates& coords) {
  CommPoly p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) p.add_term(coords.key(i), v[i]);
  }
  return p;
}

NCPoly to_poly(const Vector& v, const WordCoordinates& coords) {
  NCPoly p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) p.add_term(coords.key(i), v[i]);
  }
  return p;
}

std::map<int, Subspace> associated_graded(const Matrix& rows, std::size_t ambient,
                                          const std::function<int(std::size_t)>& level) {
  std::vector<std::size_t> order(ambient);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> lv(ambient);
  for (std::size_t c = 0; c < ambient; ++c) lv[c] = level(c);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lv[a] > lv[b]; });
  Matrix permuted;
  for (const auto& r : rows) {
    Vector v(ambient);
    for (std::size_t k = 0; k < ambient; ++k) v[k] = k < r.size() ? r[order[k]] : Rational(0);
    permuted.push_back(std::move(v));
  }
  EchelonForm e = rref(std::move(permuted), ambient);
  std::map<int, Matrix> parts;
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const int top = lv[order[e.pivots[i]]];
    Vector v(ambient);
    for (std::size_t k = 0; k < ambient; ++k) {
      if (lv[order[k]] == top) v[order[k]] = e.rows[i][k];
    }
    parts[top].push_back(std::move(v));
  }
  std::map<int, Subspace> out;
  for (auto& [l, m] : parts) out.emplace(l, Subspace::span(std::move(m), ambient));
  return out;
}

UniPoly uni_trim(UniPoly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return uni_trim(std::move(out));
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return uni_trim(std::move(out));
}

UniPoly uni_scale(const UniPoly& a, const Rational& c) {
  UniPoly out = a;
  for (auto& x : out) x *= c;
  return uni_trim(std::move(out));
}

Rational uni_eval(const UniPoly& p, const Rational& x) {
  Rational r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

int uni_valuation(const UniPoly& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sgn(p[i]) != 0) return static_cast<int>(i);
  }
  return -1;
}

UniPoly truncated_exp(const Rational& c, int order) {
  UniPoly out;
  Rational term = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) term = term * c / k;
    out.push_back(term);
  }
  return uni_trim(std::move(out));
}

namespace {

Matrix evaluate(const EpsMatrix& rows, std::size_t ambient, const Rational& x) {
  Matrix m;
  for (const auto& r : rows) {
    Vector v(ambient);
    for (std::size_t c = 0; c < r.size(); ++c) v[c] = uni_eval(r[c], x);
    m.push_back(std::move(v));
  }
  return m;
}

std::size_t max_degree(const EpsMatrix& rows) {
  std::size_t d = 0;
  for (const auto& r : rows)
    for (const auto& e : r) d = std::max(d, e.size());
  return d;
}

// Evaluation point where the rank is generic: a k x k minor is a nonzero
// polynomial of degree <= k * deg, so among k * deg + 1 points one is good.
std::pair<std::size_t, Rational> generic_point(const EpsMatrix& rows, std::size_t ambient) {
  const std::size_t bound = rows.size() * max_degree(rows) + 1;
  std::size_t best = 0;
  Rational at = 1;
  for (std::size_t k = 1; k <= bound + 1; ++k) {
    Rational x(static_cast<long>(k), 7);
    std::size_t r = rank(evaluate(rows, ambient, x), ambient);
    if (r > best) {
      best = r;
      at = x;
    }
    if (best == std::min(rows.size(), ambient)) break;
  }
  return {best, at};
}

}  // namespace

std::size_t generic_rank(const EpsMatrix& rows, std::size_t ambient) { return generic_point(rows, ambient).first; }

Subspace limit_subspace(const EpsMatrix& input, std::size_t ambient) {
  for (const auto& r : input) {
    if (r.size() > ambient) throw DimensionError("row longer than the ambient space");
  }
  auto [k, point] = generic_point(input, ambient);
  // keep rows independent at a generic point
  EpsMatrix rows;
  {
    Matrix kept;
    Matrix values = evaluate(input, ambient, point);
    for (std::size_t i = 0; i < input.size() && rows.size() < k; ++i) {
      Matrix trial = kept;
      trial.push_back(values[i]);
      if (rank(trial, ambient) > kept.size()) {
        kept = std::move(trial);
        EpsMatrix::value_type r = input[i];
        r.resize(ambient);
        for (auto& e : r) e = uni_trim(e);
        rows.push_back(std::move(r));
      }
    }
  }
  if (rows.size() != k) throw InternalError("limit: failed to select a generic basis");
  for (std::size_t iter = 0;; ++iter) {
    // divide each row by ε^{valuation}
    for (auto& r : rows) {
      int v = -1;
      for (const auto& e : r) {
        int ve = uni_valuation(e);
        if (ve >= 0 && (v < 0 || ve < v)) v = ve;
      }
      if (v < 0) throw DomainError("rank drop at generic epsilon");
      if (v == 0) continue;
      for (auto& e : r) {
        if (!e.empty()) e.erase(e.begin(), e.begin() + std::min<std::size_t>(e.size(), static_cast<std::size_t>(v)));
      }
    }
    Matrix at_zero;
    for (const auto& r : rows) {
      Vector v(ambient);
      for (std::size_t c = 0; c < ambient; ++c) v[c] = r[c].empty() ? Rational(0) : r[c][0];
      at_zero.push_back(std::move(v));
    }
    Matrix deps = left_nullspace(at_zero, ambient);
    if (deps.empty()) return Subspace::span(std::move(at_zero), ambient);
    const Vector& y = deps.front();
    std::size_t target = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (sgn(y[i]) != 0) target = i;
    }
    std::vector<UniPoly> combo(ambient);
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (sgn(y[i]) == 0) continue;
      for (std::size_t c = 0; c < ambient; ++c) combo[c] = uni_add(combo[c], uni_scale(rows[i][c], y[i]));
    }
    rows[target] = std::move(combo);
    if (iter > 100000) throw InternalError("limit: no convergence");
  }
}

}  // namespace bethe
