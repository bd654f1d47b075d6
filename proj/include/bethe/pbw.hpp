#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using LetterNamer = std::function<std::string(Letter)>;

/// Noncommutative polynomial: word -> nonzero coefficient. Products here are
/// plain concatenation; normal forms come from a PbwAlgebra.
class NCPoly {
 public:
  using Terms = std::map<Word, Rational, WordOrder>;

  NCPoly() = default;
  static NCPoly constant(const Rational& c) { return word({}, c); }
  static NCPoly letter(Letter x) { return word({x}, 1); }
  static NCPoly word(Word w, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;
  void add_term(const Word& w, const Rational& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(NCPoly a) { return a *= Rational(-1); }
  friend NCPoly operator*(NCPoly a, const Rational& c) { return a *= c; }
  friend NCPoly operator*(const Rational& c, NCPoly a) { return a *= c; }
  /// Concatenation product (not normal-ordered).
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  /// Keeps the terms whose word satisfies the predicate.
  NCPoly filter(const std::function<bool(const Word&)>& keep) const;
  /// Renames letters (letter-wise substitution by single letters).
  NCPoly rename(const std::function<Letter(Letter)>& f) const;

  std::string to_string(const LetterNamer& namer) const;

 private:
  Terms terms_;
};

/// PBW rewriting system: letters 0..L-1 in their numeric order, with a
/// commutator [a, b] for a > b. Normal forms are sums of nondecreasing words.
/// Rewriting x u0 ... -> u0 x ... + [x, u0] ... terminates when every
/// commutator is strictly lower in a well-order compatible with products
/// (length for Lie algebras, the F1 degree for the Yangian).
class PbwAlgebra {
 public:
  /// Returns [hi, lo] for hi > lo, in any form; it is normal-ordered here.
  using CommutatorFn = std::function<NCPoly(Letter hi, Letter lo)>;

  PbwAlgebra(std::size_t letters, CommutatorFn fn, LetterNamer namer);

  std::size_t letters() const { return letters_; }
  const LetterNamer& namer() const { return namer_; }

  NCPoly normal_form(const NCPoly& p) const;
  /// Normal form of a·b; a and b are taken as given (need not be normal).
  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  NCPoly commutator(const NCPoly& a, const NCPoly& b) const;
  /// Normal form of [hi, lo] (cached).
  const NCPoly& letter_commutator(Letter hi, Letter lo) const;
  bool is_normal(const NCPoly& p) const;

  std::string to_string(const NCPoly& p) const { return p.to_string(namer_); }

  std::size_t cache_size() const;

 private:
  /// NF(x · w) for w nondecreasing.
  const NCPoly& insert(Letter x, const Word& w) const;
  /// NF(v · w) for w nondecreasing, v arbitrary.
  NCPoly insert_word(const Word& v, const Word& w) const;

  std::size_t letters_;
  CommutatorFn fn_;
  LetterNamer namer_;
  mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
  mutable std::vector<std::map<Word, NCPoly, WordOrder>> insert_cache_;
  mutable std::map<std::pair<Letter, Letter>, NCPoly> commutator_cache_;
};

}  // namespace bethe
