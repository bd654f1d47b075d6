#include "bethe/poisson.hpp"

#include <algorithm>

#include "bethe/errors.hpp"

namespace bethe {

LoopContext::LoopContext(const LieAlgebra& g, int truncation) : g_(&g), r_(truncation) {
  if (truncation < 1 || truncation > 0xFFFF) throw BoundError("truncation R must be in [1, 65535]");
}

VarId LoopContext::var(int a, int r) const {
  if (a < 0 || a >= g_->dim()) throw DimensionError("basis index out of range");
  if (r < 0) throw DimensionError("negative t-degree");
  if (r >= r_) {
    throw TruncationOverflow("t-degree " + std::to_string(r) + " reaches truncation R = " + std::to_string(r_));
  }
  return make_var(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(r));
}

CommPoly LoopContext::x(int a, int r) const { return CommPoly::var(var(a, r)); }

CommPoly LoopContext::bracket(const CommPoly& p, const CommPoly& q, int shift) const {
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
          const auto& br = g_->bracket_basis(static_cast<int>(var_index(m1[i])), static_cast<int>(var_index(m2[j])));
          if (!br.empty()) {
            const int level = static_cast<int>(var_level(m1[i]) + var_level(m2[j])) + shift;
            Monomial r2(m2.begin(), m2.begin() + static_cast<long>(j));
            r2.insert(r2.end(), m2.begin() + static_cast<long>(j) + 1, m2.end());
            Monomial rest = multiply(r1, r2);
            Rational k = c1 * c2 * static_cast<long>((i2 - i) * (j2 - j));
            for (const auto& [d, c] : br) {
              VarId v = var(d, level);
              Monomial mono = rest;
              mono.insert(std::upper_bound(mono.begin(), mono.end(), v), v);
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

CommPoly LoopContext::pencil(const Rational& u, const Rational& v, const CommPoly& p, const CommPoly& q) const {
  CommPoly out;
  if (sgn(u) != 0) out += poisson0(p, q) * u;
  if (sgn(v) != 0) out += poisson1(p, q) * v;
  return out;
}

CommPoly LoopContext::derivation(const CommPoly& p) const {
  CommPoly out;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size();) {
      std::size_t i2 = i;
      while (i2 < m.size() && m[i2] == m[i]) ++i2;
      const int a = static_cast<int>(var_index(m[i]));
      const int r = static_cast<int>(var_level(m[i]));
      VarId up = var(a, r + 1);
      Monomial mono(m.begin(), m.begin() + static_cast<long>(i));
      mono.insert(mono.end(), m.begin() + static_cast<long>(i) + 1, m.end());
      mono.insert(std::upper_bound(mono.begin(), mono.end(), up), up);
      out.add_term(mono, c * static_cast<long>(i2 - i) * (r + 1));
      i = i2;
    }
  }
  return out;
}

CommPoly LoopContext::derivation(const CommPoly& p, int times) const {
  CommPoly out = p;
  for (int k = 0; k < times; ++k) out = derivation(out);
  return out;
}

ParamPoly LoopContext::phi_1v(const CommPoly& p, int cutoff) const {
  if (cutoff < 0) throw BoundError("cutoff must be nonnegative");
  std::map<VarId, ParamPoly> images;
  ParamPoly out;
  for (const auto& [m, c] : p.terms()) {
    ParamPoly t(CommPoly::constant(c));
    for (VarId v : m) {
      auto it = images.find(v);
      if (it == images.end()) {
        const int a = static_cast<int>(var_index(v));
        const int r = static_cast<int>(var_level(v));
        std::vector<CommPoly> coeffs;
        for (int k = 0; k <= cutoff; ++k) coeffs.push_back(x(a, r + k) * Rational(k % 2 == 0 ? 1 : -1));
        it = images.emplace(v, ParamPoly(std::move(coeffs))).first;
      }
      t = ParamPoly::multiply(t, it->second, cutoff);
    }
    out += t;
  }
  return out;
}

ParamPoly LoopContext::phi_1v_inverse(const ParamPoly& p, int cutoff) const {
  std::map<VarId, ParamPoly> images;
  ParamPoly out;
  for (int deg = 0; deg <= p.degree(); ++deg) {
    for (const auto& [m, c] : p.at(deg).terms()) {
      ParamPoly t(CommPoly::constant(c));
      t = t.shifted(deg);
      for (VarId v : m) {
        auto it = images.find(v);
        if (it == images.end()) {
          const int a = static_cast<int>(var_index(v));
          const int r = static_cast<int>(var_level(v));
          it = images.emplace(v, ParamPoly(std::vector<CommPoly>{x(a, r), x(a, r + 1)})).first;
        }
        t = ParamPoly::multiply(t, it->second, cutoff);
      }
      out += t;
    }
  }
  return out.truncated(cutoff);
}

ParamPoly LoopContext::transported_bracket(const ParamPoly& p, const ParamPoly& q, int cutoff) const {
  std::vector<CommPoly> out(static_cast<std::size_t>(cutoff) + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    for (int j = 0; j <= q.degree() && i + j <= cutoff; ++j) {
      if (p.at(i).is_zero() || q.at(j).is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += poisson0(p.at(i), q.at(j));
      if (i + j + 1 <= cutoff) out[static_cast<std::size_t>(i + j + 1)] += poisson1(p.at(i), q.at(j));
    }
  }
  return ParamPoly(std::move(out));
}

CommPoly LoopContext::omega() const {
  CommPoly out;
  for (int a = 0; a < g_->dim(); ++a) {
    for (const auto& [b, c] : g_->dual(a)) out += x(a, 0) * x(b, 0) * c;
  }
  return out;
}

CommPoly LoopContext::Omega() const {
  CommPoly out;
  for (int a = 0; a < g_->dim(); ++a) {
    for (const auto& [b, c] : g_->dual(a)) out += x(a, 0) * x(b, 1) * c;
  }
  return out;
}

std::map<std::pair<int, int>, CommPoly> bigrade(const CommPoly& p) {
  std::map<std::pair<int, int>, CommPoly> out;
  for (const auto& [m, c] : p.terms()) out[{deg1(m), deg2(m)}].add_term(m, c);
  return out;
}

}  // namespace bethe
