#include "bethe/yangian.hpp"

#include <algorithm>

#include "bethe/errors.hpp"

namespace bethe {

namespace {

PbwAlgebra::CommutatorFn make_commutator(const Yangian* y) {
  return [y](Letter hi, Letter lo) {
    auto a = y->decode(hi);
    auto b = y->decode(lo);
    return y->raw_commutator(a.i, a.j, a.r, b.i, b.j, b.r);
  };
}

}  // namespace

Yangian::Yangian(int n, int truncation)
    : n_(n), N_(truncation),
      pbw_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(truncation, 0)),
           make_commutator(this), [n](Letter x) {
             const Letter sq = static_cast<Letter>(n * n);
             const Letter r = x / sq + 1, i = (x % sq) / static_cast<Letter>(n) + 1, j = x % static_cast<Letter>(n) + 1;
             return "t" + std::to_string(i) + std::to_string(j) + "(" + std::to_string(r) + ")";
           }) {
  if (n < 1 || n > 9) throw BoundError("Yangian supports 1 <= n <= 9");
  if (truncation < 1) throw BoundError("Yangian truncation N must be positive");
}

Letter Yangian::letter(int i, int j, int r) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw DimensionError("Yangian index out of range");
  if (r < 1) throw DimensionError("Yangian generator superscript must be positive");
  if (r > N_) {
    throw TruncationOverflow("generator t^(" + std::to_string(r) + ") exceeds Yangian truncation N = " + std::to_string(N_));
  }
  return static_cast<Letter>((r - 1) * n_ * n_ + (i - 1) * n_ + (j - 1));
}

NCPoly Yangian::t(int i, int j, int r) const {
  if (r == 0) return i == j ? NCPoly::constant(1) : NCPoly();
  return NCPoly::letter(letter(i, j, r));
}

Yangian::Generator Yangian::decode(Letter x) const {
  const int sq = n_ * n_;
  const int v = static_cast<int>(x);
  return {(v % sq) / n_ + 1, v % n_ + 1, v / sq + 1};
}

NCPoly Yangian::raw_commutator(int i, int j, int r, int k, int l, int s) const {
  NCPoly out;
  for (int p = 1; p <= std::min(r, s); ++p) {
    out += t(k, j, p - 1) * t(i, l, r + s - p);
    out -= t(k, j, r + s - p) * t(i, l, p - 1);
  }
  return out;
}

std::vector<NCPoly> Yangian::shifted_series(int a, int b, int shift, int max_order) const {
  std::vector<NCPoly> out(static_cast<std::size_t>(max_order) + 1);
  if (a == b) out[0] = NCPoly::constant(1);
  // (u - j)^{-r} = Σ_m C(r+m-1, m) j^m u^{-r-m}
  for (int r = 1; r <= max_order; ++r) {
    NCPoly gen = t(a, b, r);
    for (int m = 0; r + m <= max_order; ++m) {
      Rational k = binomial(r + m - 1, m) * power(Rational(shift), m);
      if (sgn(k) == 0) continue;
      out[static_cast<std::size_t>(r + m)] += gen * k;
    }
  }
  return out;
}

std::vector<NCPoly> Yangian::quantum_minor(const std::vector<int>& rows, const std::vector<int>& cols, int max_order) const {
  const std::size_t k = rows.size();
  if (k != cols.size() || k == 0 || static_cast<int>(k) > n_) throw DimensionError("quantum minor needs k row and k column indices, k <= n");
  std::vector<std::vector<std::vector<NCPoly>>> series(k, std::vector<std::vector<NCPoly>>(k));
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) series[p][q] = shifted_series(rows[p], cols[q], static_cast<int>(q), max_order);
  }
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  std::vector<NCPoly> total(static_cast<std::size_t>(max_order) + 1);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::vector<NCPoly> prod(static_cast<std::size_t>(max_order) + 1);
    prod[0] = NCPoly::constant(inversions % 2 ? -1 : 1);
    for (std::size_t col = 0; col < k; ++col) {
      const auto& s = series[perm[col]][col];
      std::vector<NCPoly> next(static_cast<std::size_t>(max_order) + 1);
      for (int a = 0; a <= max_order; ++a) {
        if (prod[static_cast<std::size_t>(a)].is_zero()) continue;
        for (int b = 0; a + b <= max_order; ++b) {
          if (s[static_cast<std::size_t>(b)].is_zero()) continue;
          next[static_cast<std::size_t>(a + b)] += multiply(prod[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]);
        }
      }
      prod = std::move(next);
    }
    for (int a = 0; a <= max_order; ++a) total[static_cast<std::size_t>(a)] += prod[static_cast<std::size_t>(a)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<NCPoly> Yangian::bethe_series(int k, const std::vector<Rational>& c, int max_order) const {
  if (static_cast<int>(c.size()) != n_) throw DimensionError("torus element must have n entries");
  for (const auto& x : c) {
    if (sgn(x) == 0) throw DomainError("torus element entries must be invertible");
  }
  if (k < 1 || k > n_) throw DimensionError("k must be in [1, n]");
  std::vector<NCPoly> total(static_cast<std::size_t>(max_order) + 1);
  std::vector<bool> mask(static_cast<std::size_t>(n_), false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<int> subset;
    Rational weight = 1;
    for (int i = 0; i < n_; ++i) {
      if (mask[static_cast<std::size_t>(i)]) {
        subset.push_back(i + 1);
        weight *= c[static_cast<std::size_t>(i)];
      }
    }
    auto minor = quantum_minor(subset, subset, max_order);
    for (int s = 0; s <= max_order; ++s) total[static_cast<std::size_t>(s)] += minor[static_cast<std::size_t>(s)] * weight;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return total;
}

int Yangian::f1(const Word& w, int n) {
  int d = 0;
  for (Letter x : w) d += static_cast<int>(x) / (n * n) + 1;
  return d;
}

int Yangian::f2(const Word& w, int n) {
  int d = 0;
  for (Letter x : w) d += static_cast<int>(x) / (n * n);
  return d;
}

int Yangian::f1_degree(const NCPoly& p) const {
  int d = -1;
  for (const auto& [w, c] : p.terms()) d = std::max(d, f1(w, n_));
  return d;
}

int Yangian::f2_degree(const NCPoly& p) const {
  int d = -1;
  for (const auto& [w, c] : p.terms()) d = std::max(d, f2(w, n_));
  return d;
}

CommPoly Yangian::gr1(const NCPoly& p) const {
  const int top = f1_degree(p);
  CommPoly out;
  for (const auto& [w, c] : p.terms()) {
    if (f1(w, n_) != top) continue;
    Monomial m;
    for (Letter x : w) {
      auto g = decode(x);
      m.push_back(make_var(static_cast<std::uint32_t>((g.i - 1) * n_ + (g.j - 1)), static_cast<std::uint32_t>(g.r - 1)));
    }
    std::sort(m.begin(), m.end());
    out.add_term(m, c);
  }
  return out;
}

NCPoly Yangian::gr2(const NCPoly& p, int current_truncation) const {
  const int top = f2_degree(p);
  const Letter bound = static_cast<Letter>(current_truncation * n_ * n_);
  return p.filter([&](const Word& w) {
    if (f2(w, n_) != top) return false;
    for (Letter x : w) {
      if (x >= bound) return false;
    }
    return true;
  });
}

LetterNamer Yangian::namer() const { return pbw_.namer(); }

VarNamer congruence_namer(int n) {
  return [n](VarId v) {
    const int idx = static_cast<int>(var_index(v));
    return "g" + std::to_string(idx / n + 1) + std::to_string(idx % n + 1) + "(" + std::to_string(var_level(v) + 1) + ")";
  };
}

}  // namespace bethe
