#include "bethe/comm_poly.hpp"

#include <algorithm>
#include <sstream>

namespace bethe {

int deg1(const Monomial& m) {
  int d = 0;
  for (VarId v : m) d += static_cast<int>(var_level(v)) + 1;
  return d;
}

int deg2(const Monomial& m) {
  int d = 0;
  for (VarId v : m) d += static_cast<int>(var_level(v));
  return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = deg1(a), db = deg1(b);
  if (da != db) return da < db;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string default_var_name(VarId v) {
  return "x" + std::to_string(var_index(v)) + "[" + std::to_string(var_level(v)) + "]";
}

CommPoly CommPoly::constant(const Rational& c) { return term({}, c); }

CommPoly CommPoly::var(VarId v) { return term({v}, 1); }

CommPoly CommPoly::term(Monomial m, const Rational& c) {
  CommPoly p;
  std::sort(m.begin(), m.end());
  p.add_term(m, c);
  return p;
}

Rational CommPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CommPoly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CommPoly& CommPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  }
  return out;
}

CommPoly CommPoly::pow(int k) const {
  CommPoly result = constant(1);
  CommPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

int CommPoly::max_level() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    for (VarId v : m) best = std::max(best, static_cast<int>(var_level(v)));
  }
  return best;
}

int CommPoly::max_factors() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, static_cast<int>(m.size()));
  return best;
}

CommPoly CommPoly::derivative(VarId v) const {
  CommPoly out;
  for (const auto& [m, c] : terms_) {
    auto first = std::lower_bound(m.begin(), m.end(), v);
    if (first == m.end() || *first != v) continue;
    auto last = std::upper_bound(first, m.end(), v);
    Monomial reduced(m.begin(), first);
    reduced.insert(reduced.end(), first + 1, m.end());
    out.add_term(reduced, c * static_cast<long>(last - first));
  }
  return out;
}

CommPoly CommPoly::substitute(const std::function<CommPoly(VarId)>& image) const {
  std::map<VarId, CommPoly> cache;
  CommPoly out;
  for (const auto& [m, c] : terms_) {
    CommPoly t = constant(c);
    for (VarId v : m) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, image(v)).first;
      t = t * it->second;
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

CommPoly CommPoly::rename(const std::function<VarId(VarId)>& f) const {
  CommPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial r;
    r.reserve(m.size());
    for (VarId v : m) r.push_back(f(v));
    std::sort(r.begin(), r.end());
    out.add_term(r, c);
  }
  return out;
}

std::string CommPoly::to_string(const VarNamer& namer) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational shown = c;
    if (first) {
      first = false;
    } else if (sgn(c) < 0) {
      out << " - ";
      shown = -c;
    } else {
      out << " + ";
    }
    out << bethe::to_string(shown);
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      out << " * " << namer(m[i]);
      if (j - i > 1) out << "^" << (j - i);
      i = j;
    }
  }
  return out.str();
}

const CommPoly& ParamPoly::at(int k) const {
  static const CommPoly zero;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(k)];
}

void ParamPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

ParamPoly ParamPoly::multiply(const ParamPoly& a, const ParamPoly& b, int max_degree) {
  if (a.is_zero() || b.is_zero()) return {};
  std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (max_degree >= 0) len = std::min(len, static_cast<std::size_t>(max_degree) + 1);
  std::vector<CommPoly> out(len);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::scale(const std::vector<Rational>& scalar, const CommPoly& p) {
  std::vector<CommPoly> out;
  out.reserve(scalar.size());
  for (const auto& s : scalar) out.push_back(p * s);
  return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  std::vector<CommPoly> out(coeffs_.begin(),
                            coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), max_degree + 1));
  return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<CommPoly> out(static_cast<std::size_t>(k));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return ParamPoly(std::move(out));
}

ParamPoly ParamPoly::map(const std::function<CommPoly(const CommPoly&)>& f) const {
  std::vector<CommPoly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(f(c));
  return ParamPoly(std::move(out));
}

}  // namespace bethe
