#include "bethe/subalgebras.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

std::uint32_t u32(int v) { return static_cast<std::uint32_t>(v); }

// D x[m] = (m+1) x[m+1], no truncation.
CommPoly loop_derivation(const CommPoly& p) {
  std::set<VarId> vars;
  for (const auto& [m, c] : p.terms()) vars.insert(m.begin(), m.end());
  CommPoly out;
  for (VarId v : vars) {
    const auto level = var_level(v);
    out += p.derivative(v) * CommPoly::var(make_var(var_index(v), level + 1)) * Rational(static_cast<long>(level) + 1);
  }
  return out;
}

Rational evaluate(const CommPoly& p, const std::map<VarId, Rational>& point) {
  Rational s = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (VarId v : m) {
      auto it = point.find(v);
      if (it == point.end()) throw DomainError("evaluation point misses a variable");
      t *= it->second;
    }
    s += t;
  }
  return s;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// det(I + Y)_{SS} in Taylor coordinates.
CommPoly principal_minor(int n, const std::vector<int>& s) {
  const std::size_t k = s.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  CommPoly out;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    CommPoly term = CommPoly::constant(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t col = 0; col < k; ++col) {
      const int i = s[perm[col]], j = s[col];
      CommPoly entry = CommPoly::var(taylor_var(n, i + 1, j + 1));
      if (i == j) entry += CommPoly::constant(1);
      term = term * entry;
    }
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Rational subset_product(const std::vector<Rational>& c, const std::vector<int>& s) {
  Rational p = 1;
  for (int i : s) p *= c[static_cast<std::size_t>(i)];
  return p;
}

void check_diagonal(int n, const std::vector<Rational>& c) {
  if (n < 1) throw BoundError("n must be positive");
  if (static_cast<int>(c.size()) != n) throw DimensionError("C needs n diagonal entries");
  for (const auto& x : c) {
    if (sgn(x) == 0) throw DomainError("C must be invertible");
  }
}

Matrix diagonal_matrix(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), Vector(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) m[i][i] = entries[i];
  return m;
}

}  // namespace

void GeneratorFamily::add(std::string label, CommPoly value, int degree) {
  if (value.is_zero()) throw InternalError("generator " + label + " vanishes");
  elements.push_back({std::move(label), std::move(value), degree});
}

std::vector<Graded<CommPoly>> GeneratorFamily::graded() const {
  std::vector<Graded<CommPoly>> out;
  for (const auto& e : elements) out.push_back({e.value, e.degree});
  return out;
}

std::vector<CommPoly> GeneratorFamily::values() const {
  std::vector<CommPoly> out;
  for (const auto& e : elements) out.push_back(e.value);
  return out;
}

GeneratorFamily gaudin_generators(const LoopContext& ctx, int kmax) {
  if (kmax < 0) throw BoundError("kmax must be nonnegative");
  GeneratorFamily fam{"S(g[t])", {}};
  const auto& inv = ctx.invariants();
  for (int k = 0; k <= kmax; ++k) {
    for (std::size_t i = 0; i < inv.size(); ++i) {
      CommPoly v = ctx.derivation(inv[i].poly, k);
      fam.add("D^" + std::to_string(k) + " Phi_" + std::to_string(i + 1), std::move(v), inv[i].degree + k);
    }
  }
  return fam;
}

GeneratorFamily soa_generators(const LieAlgebra& g, const Vector& chi) {
  if (static_cast<int>(chi.size()) != g.dim()) throw DimensionError("chi has wrong length");
  for (const auto& r : g.roots()) {
    if (sgn(g.root_value(r, chi)) == 0) throw DomainError("chi is not regular");
  }
  GeneratorFamily fam{"S(g)", {}};
  const auto& inv = g.invariants();
  for (std::size_t l = 0; l < inv.size(); ++l) {
    CommPoly f = inv[l].poly;
    for (int k = 0; k < inv[l].degree; ++k) {
      fam.add("d_chi^" + std::to_string(k) + " Phi_" + std::to_string(l + 1), f, inv[l].degree - k);
      f = g.directional_derivative(f, chi);
    }
  }
  return fam;
}

std::size_t jacobian_rank(const std::vector<CommPoly>& gens, const std::vector<VarId>& vars,
                          const std::map<VarId, Rational>& point) {
  Matrix jac;
  for (const auto& f : gens) {
    Vector row;
    for (VarId v : vars) row.push_back(evaluate(f.derivative(v), point));
    jac.push_back(std::move(row));
  }
  return rank(jac, vars.size());
}

VarId gamma_var(int n, int i, int j, int r) {
  if (r < 1) throw BoundError("gamma superscript must be positive");
  return make_var(u32((i - 1) * n + (j - 1)), u32(r - 1));
}

VarId taylor_var(int n, int i, int j) { return make_var(u32((i - 1) * n + (j - 1)), 0); }

std::vector<CommPoly> congruence_series(int n, const CommPoly& f, int max_order) {
  if (max_order < 0) throw BoundError("order must be nonnegative");
  std::map<VarId, ParamPoly> images;
  ParamPoly out;
  for (const auto& [m, c] : f.terms()) {
    ParamPoly t(CommPoly::constant(c));
    for (VarId v : m) {
      auto it = images.find(v);
      if (it == images.end()) {
        const int idx = static_cast<int>(var_index(v));
        if (var_level(v) != 0 || idx >= n * n) throw DomainError("not a Taylor coordinate");
        std::vector<CommPoly> coeffs(1);
        for (int r = 1; r <= max_order; ++r) coeffs.push_back(CommPoly::var(make_var(u32(idx), u32(r - 1))));
        it = images.emplace(v, ParamPoly(std::move(coeffs))).first;
      }
      t = ParamPoly::multiply(t, it->second, max_order);
    }
    out += t;
  }
  std::vector<CommPoly> series(static_cast<std::size_t>(max_order) + 1);
  for (int r = 0; r <= out.degree(); ++r) series[static_cast<std::size_t>(r)] = out.at(r);
  return series;
}

CommPoly bethe_function(int n, int k, const std::vector<Rational>& c) {
  check_diagonal(n, c);
  if (k < 1 || k > n) throw BoundError("k must lie in 1..n");
  CommPoly f;
  for (const auto& s : subsets(n, k)) f += principal_minor(n, s) * subset_product(c, s);
  return f;
}

GeneratorFamily classical_bethe(int n, const std::vector<Rational>& c, int rmax) {
  check_diagonal(n, c);
  if (rmax < 1) throw BoundError("rmax must be positive");
  GeneratorFamily fam{"O(G1)", {}};
  for (int k = 1; k <= n; ++k) {
    auto series = congruence_series(n, bethe_function(n, k, c), rmax);
    for (int r = 1; r <= rmax; ++r) {
      fam.add("sigma_" + std::to_string(k) + "^(" + std::to_string(r) + ")", series[static_cast<std::size_t>(r)], r);
    }
  }
  return fam;
}

CommPoly congruence_to_loop(int n, const CommPoly& p) {
  return p.rename([n](VarId v) {
    const int idx = static_cast<int>(var_index(v));
    if (idx >= n * n) throw DomainError("not a congruence coordinate");
    const int i = idx / n, j = idx % n;
    return make_var(u32(j * n + i), var_level(v));
  });
}

CommPoly congruence_gr2(int n, const CommPoly& p) {
  int top = -1;
  for (const auto& [m, c] : p.terms()) top = std::max(top, deg2(m));
  CommPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (deg2(m) == top) out.add_term(m, c);
  }
  return congruence_to_loop(n, out);
}

namespace {

int taylor_order(const CommPoly& f) {
  int k = -1;
  for (const auto& [m, c] : f.terms()) {
    if (m.empty()) continue;
    const int len = static_cast<int>(m.size());
    if (k < 0 || len < k) k = len;
  }
  if (k < 0) throw DomainError("f is constant");
  return k;
}

}  // namespace

CommPoly gr2_leading(int n, const CommPoly& f, int r) {
  if (r < 1) throw BoundError("r must be positive");
  const int k = taylor_order(f);
  auto series = congruence_series(n, f, r);
  const CommPoly& fr = series[static_cast<std::size_t>(r)];
  if (fr.is_zero()) {
    if (r < k) return {};
    throw InternalError("f^(r) vanishes for r >= k");
  }
  return congruence_gr2(n, fr);
}

CommPoly gr2_leading_formula(int n, const CommPoly& f, int r) {
  if (r < 1) throw BoundError("r must be positive");
  const int k = taylor_order(f);
  if (r < k) return {};
  CommPoly fk;
  for (const auto& [m, c] : f.terms()) {
    if (static_cast<int>(m.size()) == k) fk.add_term(m, c);
  }
  CommPoly out = congruence_to_loop(n, fk);
  for (int i = 0; i < r - k; ++i) out = loop_derivation(out);
  return out * (Rational(1) / factorial(r - k));
}

std::vector<Monomial> component_monomials(int dim, int truncation, int d1, int d2) {
  if (d1 < 0) return {};
  std::vector<VarId> vars;
  for (int r = 0; r < truncation && r + 1 <= d1; ++r)
    for (int a = 0; a < dim; ++a) vars.push_back(make_var(u32(a), u32(r)));
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      if (d2 < 0 || deg2(cur) == d2) out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < vars.size(); ++i) {
      const int w = static_cast<int>(var_level(vars[i])) + 1;
      if (w > remaining) continue;
      cur.push_back(vars[i]);
      rec(i, remaining - w);
      cur.pop_back();
    }
  };
  rec(0, d1);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

Subspace centralizer_subalgebra(const LoopContext& ctx, const CommPoly& seed, int d, int shift, bool invariant_only,
                                MonomialCoordinates& coords) {
  const auto monos = component_monomials(ctx.algebra().dim(), ctx.truncation(), d);
  for (const auto& m : monos) coords.index(m);
  if (monos.empty()) return Subspace(coords.size());
  // image of each monomial under every constraint map, in separate coordinate blocks
  std::vector<std::vector<CommPoly>> images(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) {
    CommPoly p = CommPoly::term(monos[i], 1);
    images[i].push_back(ctx.bracket(seed, p, shift));
    if (invariant_only) {
      for (int a = 0; a < ctx.algebra().dim(); ++a) images[i].push_back(ctx.poisson0(ctx.x(a, 0), p));
    }
  }
  const std::size_t blocks = images.front().size();
  std::vector<MonomialCoordinates> block_coords(blocks);
  for (const auto& im : images)
    for (std::size_t b = 0; b < blocks; ++b)
      for (const auto& [m, c] : im[b].terms()) block_coords[b].index(m);
  std::vector<std::size_t> offset(blocks + 1, 0);
  for (std::size_t b = 0; b < blocks; ++b) offset[b + 1] = offset[b] + block_coords[b].size();
  Matrix map;
  for (const auto& im : images) {
    Vector row(offset[blocks]);
    for (std::size_t b = 0; b < blocks; ++b)
      for (const auto& [m, c] : im[b].terms()) row[offset[b] + *block_coords[b].find(m)] = c;
    map.push_back(std::move(row));
  }
  Matrix kernel = left_nullspace(map, offset[blocks]);
  Matrix rows;
  for (const auto& y : kernel) {
    Vector v(coords.size());
    for (std::size_t i = 0; i < monos.size(); ++i) v[*coords.find(monos[i])] = y[i];
    rows.push_back(std::move(v));
  }
  return Subspace::span(std::move(rows), coords.size());
}

std::vector<CommPoly> generated_component(const GeneratorFamily& gens, int d) {
  std::function<CommPoly(const CommPoly&, const CommPoly&)> mul = [](const CommPoly& a, const CommPoly& b) {
    return a * b;
  };
  return products_of_degree<CommPoly>(gens.graded(), d, mul, CommPoly::constant(1));
}

Subspace product_span(const std::vector<std::vector<CommPoly>>& a, const std::vector<std::vector<CommPoly>>& b, int d,
                      MonomialCoordinates& coords) {
  std::function<CommPoly(const CommPoly&, const CommPoly&)> mul = [](const CommPoly& x, const CommPoly& y) { return x * y; };
  return span_of(product_elements(a, b, d, mul), coords);
}

std::vector<std::size_t> poincare_series(const GeneratorFamily& gens, int cutoff) {
  if (cutoff < 0) throw BoundError("cutoff must be nonnegative");
  std::vector<std::size_t> out;
  for (int d = 0; d <= cutoff; ++d) {
    MonomialCoordinates coords;
    out.push_back(span_of(generated_component(gens, d), coords).dim());
  }
  return out;
}

std::vector<std::size_t> free_poincare(const std::vector<int>& degrees, int cutoff) {
  std::vector<std::size_t> series(static_cast<std::size_t>(cutoff) + 1, 0);
  series[0] = 1;
  for (int deg : degrees) {
    if (deg <= 0) throw DomainError("generator degrees must be positive");
    for (int k = deg; k <= cutoff; ++k) series[static_cast<std::size_t>(k)] += series[static_cast<std::size_t>(k - deg)];
  }
  return series;
}

namespace {

// σ_k^{(r)}(C0 exp(εχ)) with exp truncated at ε^order; coefficient j of ε^j.
std::vector<Graded<ParamPoly>> eps_bethe(int n, const std::vector<Rational>& c0, const std::vector<Rational>& chi,
                                         int rmax, int order) {
  std::vector<Graded<ParamPoly>> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<ParamPoly> per_r(static_cast<std::size_t>(rmax) + 1);
    for (const auto& s : subsets(n, k)) {
      Rational shift = 0;
      for (int i : s) shift += chi[static_cast<std::size_t>(i)];
      UniPoly weight = uni_scale(truncated_exp(shift, order), subset_product(c0, s));
      auto series = congruence_series(n, principal_minor(n, s), rmax);
      for (int r = 1; r <= rmax; ++r) {
        per_r[static_cast<std::size_t>(r)] += ParamPoly::scale(weight, series[static_cast<std::size_t>(r)]);
      }
    }
    for (int r = 1; r <= rmax; ++r) out.push_back({per_r[static_cast<std::size_t>(r)], r});
  }
  return out;
}

Subspace limit_at_order(int n, const std::vector<Rational>& c0, const std::vector<Rational>& chi, int d, int order,
                        MonomialCoordinates& coords, std::size_t& generic_dim) {
  std::function<ParamPoly(const ParamPoly&, const ParamPoly&)> mul = [](const ParamPoly& a, const ParamPoly& b) {
    return ParamPoly::multiply(a, b);
  };
  auto products = products_of_degree<ParamPoly>(eps_bethe(n, c0, chi, d, order), d, mul,
                                                ParamPoly(CommPoly::constant(1)));
  for (const auto& p : products)
    for (const auto& c : p.coeffs())
      for (const auto& [m, x] : c.terms()) coords.index(m);
  EpsMatrix rows;
  for (const auto& p : products) {
    std::vector<UniPoly> row(coords.size());
    for (int j = 0; j <= p.degree(); ++j) {
      for (const auto& [m, x] : p.at(j).terms()) {
        UniPoly& e = row[*coords.find(m)];
        if (e.size() <= static_cast<std::size_t>(j)) e.resize(static_cast<std::size_t>(j) + 1);
        e[static_cast<std::size_t>(j)] = x;
      }
    }
    for (auto& e : row) e = uni_trim(std::move(e));
    rows.push_back(std::move(row));
  }
  generic_dim = generic_rank(rows, coords.size());
  return limit_subspace(rows, coords.size());
}

}  // namespace

BetheLimit bethe_limit_component(int n, const std::vector<Rational>& c0, const std::vector<Rational>& chi, int d,
                                 MonomialCoordinates& coords, int max_order) {
  check_diagonal(n, c0);
  if (static_cast<int>(chi.size()) != n) throw DimensionError("chi needs n entries");
  if (d < 1) throw BoundError("component degree must be positive");
  BetheLimit out;
  out.at_base = span_of(generated_component(classical_bethe(n, c0, d), d), coords);
  std::size_t gdim = 0;
  Subspace prev = limit_at_order(n, c0, chi, d, 1, coords, gdim);
  for (int order = 2; order <= max_order; ++order) {
    std::size_t dim_now = 0;
    Subspace cur = limit_at_order(n, c0, chi, d, order, coords, dim_now);
    if (cur == prev && dim_now == gdim) {
      out.limit = cur.padded(coords.size());
      out.generic_dim = dim_now;
      out.exp_order = order - 1;
      out.at_base = out.at_base.padded(coords.size());
      return out;
    }
    prev = std::move(cur);
    gdim = dim_now;
  }
  throw DomainError("limit did not stabilize below the exp order cap");
}

GeneratorFamily shift_family_in_congruence(int n, const std::vector<Rational>& c0, const std::vector<Rational>& chi) {
  check_diagonal(n, c0);
  LieAlgebra g = gl(n);
  auto z = g.centralizer(TorusElement::diag(c0));
  Vector chi_z = z.algebra.from_matrix(diagonal_matrix(chi));
  GeneratorFamily local = soa_generators(z.algebra, chi_z);
  GeneratorFamily out{"O(G1)", {}};
  const auto& emb = z.embedding;
  for (auto& e : local.elements) {
    CommPoly v = e.value.rename([&emb](VarId x) { return make_var(u32(emb.at(var_index(x))), 0); });
    out.add(e.label, std::move(v), e.degree);
  }
  return out;
}

GeneratorFamily centralizer_gaudin(int n, const std::vector<Rational>& c, int kmax, int truncation) {
  check_diagonal(n, c);
  LieAlgebra g = gl(n);
  auto z = g.centralizer(TorusElement::diag(c));
  LoopContext ctx(z.algebra, truncation);
  GeneratorFamily local = gaudin_generators(ctx, kmax);
  GeneratorFamily out{"S(g[t])", {}};
  const auto& emb = z.embedding;
  for (auto& e : local.elements) {
    CommPoly v = e.value.rename([&emb](VarId x) { return make_var(u32(emb.at(var_index(x))), var_level(x)); });
    out.add(e.label, std::move(v), e.degree);
  }
  return out;
}

}  // namespace bethe
