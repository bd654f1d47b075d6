#include "bethe/pbw.hpp"

#include <algorithm>
#include <sstream>

#include "bethe/errors.hpp"

namespace bethe {

NCPoly NCPoly::word(Word w, const Rational& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NCPoly NCPoly::filter(const std::function<bool(const Word&)>& keep) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    if (keep(w)) out.terms_.emplace(w, c);
  }
  return out;
}

NCPoly NCPoly::rename(const std::function<Letter(Letter)>& f) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    Word r;
    r.reserve(w.size());
    for (Letter x : w) r.push_back(f(x));
    out.add_term(r, c);
  }
  return out;
}

std::string NCPoly::to_string(const LetterNamer& namer) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
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
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      out << " * " << namer(w[i]);
      if (j - i > 1) out << "^" << (j - i);
      i = j;
    }
  }
  return out.str();
}

PbwAlgebra::PbwAlgebra(std::size_t letters, CommutatorFn fn, LetterNamer namer)
    : letters_(letters), fn_(std::move(fn)), namer_(std::move(namer)), insert_cache_(letters) {}

std::size_t PbwAlgebra::cache_size() const {
  std::lock_guard<std::mutex> lock(*mutex_);
  std::size_t n = commutator_cache_.size();
  for (const auto& m : insert_cache_) n += m.size();
  return n;
}

const NCPoly& PbwAlgebra::letter_commutator(Letter hi, Letter lo) const {
  {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto it = commutator_cache_.find({hi, lo});
    if (it != commutator_cache_.end()) return it->second;
  }
  NCPoly nf = normal_form(fn_(hi, lo));
  std::lock_guard<std::mutex> lock(*mutex_);
  return commutator_cache_.emplace(std::make_pair(hi, lo), std::move(nf)).first->second;
}

const NCPoly& PbwAlgebra::insert(Letter x, const Word& w) const {
  if (x >= letters_) throw DimensionError("letter out of range");
  {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto& cache = insert_cache_[x];
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  NCPoly result;
  if (w.empty() || x <= w.front()) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(x);
    out.insert(out.end(), w.begin(), w.end());
    result.add_term(out, 1);
  } else {
    const Letter u0 = w.front();
    const Word rest(w.begin() + 1, w.end());
    // u0 · NF(x · rest)
    for (const auto& [v, c] : insert(x, rest).terms()) {
      const NCPoly& moved = insert(u0, v);
      for (const auto& [v2, c2] : moved.terms()) result.add_term(v2, c * c2);
    }
    // NF([x, u0] · rest)
    for (const auto& [v, c] : letter_commutator(x, u0).terms()) {
      NCPoly t = insert_word(v, rest);
      t *= c;
      result += t;
    }
  }
  std::lock_guard<std::mutex> lock(*mutex_);
  return insert_cache_[x].emplace(w, std::move(result)).first->second;
}

NCPoly PbwAlgebra::insert_word(const Word& v, const Word& w) const {
  NCPoly current = NCPoly::word(w);
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    NCPoly next;
    for (const auto& [u, c] : current.terms()) {
      for (const auto& [u2, c2] : insert(*it, u).terms()) next.add_term(u2, c * c2);
    }
    current = std::move(next);
  }
  return current;
}

NCPoly PbwAlgebra::normal_form(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    if (std::is_sorted(w.begin(), w.end())) {
      out.add_term(w, c);
      continue;
    }
    NCPoly t = insert_word(w, {});
    t *= c;
    out += t;
  }
  return out;
}

NCPoly PbwAlgebra::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly nb = normal_form(b);
  NCPoly out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : nb.terms()) {
      NCPoly t = insert_word(wa, wb);
      t *= ca * cb;
      out += t;
    }
  }
  return out;
}

NCPoly PbwAlgebra::commutator(const NCPoly& a, const NCPoly& b) const {
  return multiply(a, b) - multiply(b, a);
}

bool PbwAlgebra::is_normal(const NCPoly& p) const {
  for (const auto& [w, c] : p.terms()) {
    if (!std::is_sorted(w.begin(), w.end())) return false;
  }
  return true;
}

}  // namespace bethe
