#include "bethe/enveloping.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

NCPoly linear(const SparseVec& v, Letter offset) {
  NCPoly out;
  for (const auto& [d, c] : v) out.add_term({static_cast<Letter>(d) + offset}, c);
  return out;
}

void check_distinct(const std::vector<Rational>& z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (z[i] == z[j]) throw DomainError("evaluation points must be pairwise distinct");
    }
  }
  if (z.empty()) throw DomainError("at least one evaluation point is required");
}

}  // namespace

LetterNamer current_namer(const LieAlgebra& g) {
  auto labels = g.labels();
  return [labels](Letter x) {
    const auto d = labels.size();
    return labels[x % d] + "[" + std::to_string(x / d) + "]";
  };
}

LetterNamer tensor_namer(const LieAlgebra& g) {
  auto labels = g.labels();
  return [labels](Letter x) {
    const auto d = labels.size();
    return labels[x % d] + "^(" + std::to_string(x / d + 1) + ")";
  };
}

PbwAlgebra enveloping(const LieAlgebra& g) {
  return PbwAlgebra(static_cast<std::size_t>(g.dim()),
                    [g](Letter hi, Letter lo) { return linear(g.bracket_basis(static_cast<int>(hi), static_cast<int>(lo)), 0); },
                    [g](Letter x) { return g.label(static_cast<int>(x)); });
}

PbwAlgebra tensor_power(const LieAlgebra& g, int copies) {
  if (copies < 1) throw BoundError("tensor power needs at least one copy");
  const Letter d = static_cast<Letter>(g.dim());
  return PbwAlgebra(static_cast<std::size_t>(copies) * d,
                    [g, d](Letter hi, Letter lo) {
                      if (hi / d != lo / d) return NCPoly();
                      return linear(g.bracket_basis(static_cast<int>(hi % d), static_cast<int>(lo % d)), (hi / d) * d);
                    },
                    tensor_namer(g));
}

PbwAlgebra current_algebra(const LieAlgebra& g, int truncation) {
  if (truncation < 1) throw BoundError("truncation R must be positive");
  const Letter d = static_cast<Letter>(g.dim());
  const Letter r = static_cast<Letter>(truncation);
  return PbwAlgebra(static_cast<std::size_t>(truncation) * d,
                    [g, d, r](Letter hi, Letter lo) {
                      const Letter level = hi / d + lo / d;
                      if (level >= r) return NCPoly();  // t^R = 0 in the quotient
                      return linear(g.bracket_basis(static_cast<int>(hi % d), static_cast<int>(lo % d)), level * d);
                    },
                    current_namer(g));
}

NCPoly symmetrize(const PbwAlgebra& u, const LieAlgebra& g, const CommPoly& p) {
  NCPoly out;
  const Letter d = static_cast<Letter>(g.dim());
  for (const auto& [m, c] : p.terms()) {
    Word w;
    for (VarId v : m) {
      Letter x = var_level(v) * d + var_index(v);
      if (x >= u.letters()) throw TruncationOverflow("symmetrize: variable beyond the truncation");
      w.push_back(x);
    }
    std::sort(w.begin(), w.end());
    NCPoly sum;
    long count = 0;
    do {
      sum.add_term(w, 1);
      ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    sum *= c / Rational(count);
    out += u.normal_form(sum);
  }
  return out;
}

CommPoly symbol(const LieAlgebra& g, const NCPoly& p) {
  std::size_t top = 0;
  for (const auto& [w, c] : p.terms()) top = std::max(top, w.size());
  const Letter d = static_cast<Letter>(g.dim());
  CommPoly out;
  for (const auto& [w, c] : p.terms()) {
    if (w.size() != top) continue;
    Monomial m;
    for (Letter x : w) m.push_back(make_var(x % d, x / d));
    std::sort(m.begin(), m.end());
    out.add_term(m, c);
  }
  return out;
}

CommPoly gaudin_evaluation(const LieAlgebra& g, const CommPoly& p, const std::vector<Rational>& z) {
  check_distinct(z);
  const std::uint32_t d = static_cast<std::uint32_t>(g.dim());
  return p.substitute([&](VarId v) {
    CommPoly img;
    for (std::size_t i = 0; i < z.size(); ++i) {
      img += CommPoly::var(make_var(static_cast<std::uint32_t>(i) * d + var_index(v), 0)) *
             power(z[i], static_cast<long>(var_level(v)));
    }
    return img;
  });
}

NCPoly gaudin_evaluation(const LieAlgebra& g, const PbwAlgebra& target, const NCPoly& p, const std::vector<Rational>& z) {
  check_distinct(z);
  const Letter d = static_cast<Letter>(g.dim());
  if (target.letters() != z.size() * d) throw DimensionError("target tensor power does not match the number of points");
  std::map<Letter, NCPoly> images;
  auto image = [&](Letter x) -> const NCPoly& {
    auto it = images.find(x);
    if (it != images.end()) return it->second;
    NCPoly img;
    for (std::size_t i = 0; i < z.size(); ++i) {
      img.add_term({static_cast<Letter>(i) * d + x % d}, power(z[i], static_cast<long>(x / d)));
    }
    return images.emplace(x, std::move(img)).first->second;
  };
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly t = NCPoly::constant(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = target.multiply(image(*it), t);
    out += t;
  }
  return out;
}

NCPoly quadratic_gaudin(const LieAlgebra& g, const PbwAlgebra& u, int m) {
  const Letter d = static_cast<Letter>(g.dim());
  if (static_cast<std::size_t>(m + 1) * d > u.letters()) throw TruncationOverflow("quadratic Gaudin element beyond the truncation");
  NCPoly out;
  for (int r = 0; r <= m; ++r) {
    for (int a = 0; a < g.dim(); ++a) {
      for (const auto& [b, c] : g.dual(a)) {
        out.add_term({static_cast<Letter>(r) * d + static_cast<Letter>(a), static_cast<Letter>(m - r) * d + static_cast<Letter>(b)}, c);
      }
    }
  }
  return u.normal_form(out);
}

NCPoly casimir_tensor(const LieAlgebra& g, const PbwAlgebra& target, int i, int j) {
  const Letter d = static_cast<Letter>(g.dim());
  NCPoly out;
  for (int a = 0; a < g.dim(); ++a) {
    for (const auto& [b, c] : g.dual(a)) {
      out.add_term({static_cast<Letter>(i) * d + static_cast<Letter>(a), static_cast<Letter>(j) * d + static_cast<Letter>(b)}, c);
    }
  }
  return target.normal_form(out);
}

namespace {

// Σ coefficient · z^{-s} ∂^p, coefficients written to the left.
using DiffOp = std::map<std::pair<int, int>, NCPoly>;

DiffOp multiply(const PbwAlgebra& u, const DiffOp& x, const DiffOp& y, int max_z) {
  DiffOp out;
  for (const auto& [kx, a] : x) {
    const auto [p, s] = kx;
    for (const auto& [ky, b] : y) {
      const auto [q, t] = ky;
      NCPoly ab = u.multiply(a, b);
      if (ab.is_zero()) continue;
      // ∂^p z^{-t} = Σ_j C(p,j) (-1)^j t(t+1)...(t+j-1) z^{-t-j} ∂^{p-j}
      Rational rising = 1;
      for (int j = 0; j <= p; ++j) {
        if (j > 0) rising *= (t + j - 1);
        if (sgn(rising) == 0) break;
        const int z = s + t + j;
        if (z > max_z) break;
        Rational k = binomial(p, j) * rising * (j % 2 ? -1 : 1);
        out[{p - j + q, z}] += ab * k;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

std::vector<TalalaevCoefficient> talalaev_generators(const LieAlgebra& g, const PbwAlgebra& u, int max_z_power) {
  const int n = g.matrix_size();
  if (n < 1 || g.dim() != n * n) throw ValidationError("Talalaev generators need gl_n");
  const int d = g.dim();
  if (u.letters() % static_cast<std::size_t>(d) != 0) throw DimensionError("current algebra does not match gl_n");
  const int R = static_cast<int>(u.letters()) / d;
  if (max_z_power < 0) throw BoundError("max z power must be nonnegative");
  // entries of ∂ - L(z), L_ij = Σ_r e_ij[r] z^{-r-1}
  std::vector<std::vector<DiffOp>> a(static_cast<std::size_t>(n), std::vector<DiffOp>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto& entry = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == j) entry[{1, 0}] = NCPoly::constant(1);
      const int idx = g.index_of("e" + std::to_string(i + 1) + std::to_string(j + 1));
      for (int r = 0; r < R && r + 1 <= max_z_power; ++r) {
        entry[{0, r + 1}] = NCPoly::word({current_letter(g, idx, r)}, -1);
      }
    }
  }
  // cdet = Σ_σ sgn σ A_{σ(1)1} ... A_{σ(n)n}
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  DiffOp total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    DiffOp prod;
    prod[{0, 0}] = NCPoly::constant(inversions % 2 ? -1 : 1);
    for (int col = 0; col < n; ++col) {
      prod = multiply(u, prod, a[static_cast<std::size_t>(perm[static_cast<std::size_t>(col)])][static_cast<std::size_t>(col)], max_z_power);
    }
    for (auto& [k, v] : prod) total[k] += v;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<TalalaevCoefficient> out;
  for (auto& [k, v] : total) {
    if (v.is_zero()) continue;
    out.push_back({k.first, k.second, std::move(v)});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.z_power, x.d_power) < std::tie(y.z_power, y.d_power);
  });
  return out;
}

NCPoly quadratic_soa_element(const LieAlgebra& g, const PbwAlgebra& u, const Vector& chi, const Vector& h) {
  if (g.roots().empty()) throw ValidationError(g.name() + " has no root data");
  NCPoly out;
  for (const auto& root : g.roots()) {
    Rational denom = g.root_value(root, chi);
    if (sgn(denom) == 0) throw DomainError("chi lies on a root hyperplane");
    out.add_term({static_cast<Letter>(root.positive), static_cast<Letter>(root.negative)}, g.root_value(root, h) / denom);
  }
  return u.normal_form(out);
}

}  // namespace bethe
