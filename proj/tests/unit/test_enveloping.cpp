#include <doctest.h>

#include <random>

#include "bethe/enveloping.hpp"
#include "bethe/errors.hpp"
#include "bethe/poisson.hpp"

using namespace bethe;

namespace {

NCPoly random_word_poly(std::mt19937& rng, std::size_t letters, int max_len) {
  std::uniform_int_distribution<int> coef(-2, 2), len(0, max_len);
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(letters - 1));
  NCPoly p;
  for (int t = 0; t < 3; ++t) {
    Word w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(letter(rng));
    p.add_term(w, coef(rng));
  }
  return p;
}

// Independent oracle: bubble-sort rewriting with a random choice of the
// out-of-order adjacent pair at every step.
NCPoly random_strategy_normal_form(const LieAlgebra& g, NCPoly p, std::mt19937& rng) {
  NCPoly done;
  while (!p.is_zero()) {
    auto it = p.terms().begin();
    Word w = it->first;
    Rational c = it->second;
    p.add_term(w, -c);
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) bad.push_back(i);
    if (bad.empty()) {
      done.add_term(w, c);
      continue;
    }
    std::size_t i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    p.add_term(swapped, c);
    for (const auto& [d, k] : g.bracket_basis(static_cast<int>(w[i]), static_cast<int>(w[i + 1]))) {
      Word shorter(w.begin(), w.begin() + static_cast<long>(i));
      shorter.push_back(static_cast<Letter>(d));
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      p.add_term(shorter, c * k);
    }
  }
  return done;
}

}  // namespace

TEST_CASE("sl2 normal ordering") {
  LieAlgebra g = preset("sl2");
  PbwAlgebra u = enveloping(g);
  const Letter e = 0, h = 1, f = 2;
  CHECK(u.normal_form(NCPoly::word({f, e})) == NCPoly::word({e, f}) - NCPoly::letter(h));
  CHECK(u.normal_form(NCPoly::word({e, h, f})) == NCPoly::word({e, h, f}));
  NCPoly casimir = NCPoly::word({e, f}) + NCPoly::word({f, e}) + NCPoly::word({h, h}) * Rational(1, 2);
  CHECK(u.commutator(casimir, NCPoly::letter(e)).is_zero());
  CHECK(u.to_string(u.normal_form(NCPoly::word({f, e}))) == "-1 * h + 1 * e * f");
}

TEST_CASE("normal form is idempotent, multiplicative and strategy independent") {
  std::mt19937 rng(17);
  for (const char* name : {"sl2", "sl3", "gl2"}) {
    LieAlgebra g = preset(name);
    PbwAlgebra u = enveloping(g);
    for (int i = 0; i < 15; ++i) {
      NCPoly p = random_word_poly(rng, u.letters(), 5);
      NCPoly q = random_word_poly(rng, u.letters(), 3);
      NCPoly np = u.normal_form(p);
      CHECK(u.is_normal(np));
      CHECK(u.normal_form(np) == np);
      CHECK(random_strategy_normal_form(g, p, rng) == np);
      CHECK(u.normal_form(p * q) == u.normal_form(np * u.normal_form(q)));
    }
  }
}

TEST_CASE("tensor powers and current algebras") {
  LieAlgebra g = preset("sl2");
  PbwAlgebra t = tensor_power(g, 2);
  CHECK(t.letter_commutator(3, 2).is_zero());  // e^(2) and f^(1)
  CHECK(t.letter_commutator(5, 3) == NCPoly::letter(4) * Rational(-1));  // [f, e] = -h in copy 2
  PbwAlgebra c = current_algebra(g, 3);
  // [f[1], e[1]] = -h[2]; [f[2], e[1]] vanishes modulo t^3
  CHECK(c.letter_commutator(current_letter(g, 2, 1), current_letter(g, 0, 1)) == NCPoly::letter(current_letter(g, 1, 2)) * Rational(-1));
  CHECK(c.letter_commutator(current_letter(g, 2, 2), current_letter(g, 0, 1)).is_zero());
}

TEST_CASE("Gaudin evaluation") {
  LieAlgebra g = preset("sl2");
  LoopContext ctx(g, 4);
  // n = 1, z = 0
  CommPoly p = ctx.x(0, 0) * ctx.x(2, 1) + ctx.x(1, 0);
  CHECK(gaudin_evaluation(g, p, {0}) == CommPoly::var(make_var(1, 0)));
  CHECK_THROWS_AS(gaudin_evaluation(g, p, {1, 1}), DomainError);

  // n = 2: ev(Ω) = Σ_a (z1 x_a^(1) + z2 x_a^(2)) (x^a(1) + x^a(2)), independently assembled
  PbwAlgebra cur = current_algebra(g, 4);
  PbwAlgebra t2 = tensor_power(g, 2);
  std::vector<Rational> z = {2, -3};
  NCPoly omega_u;
  for (int a = 0; a < 3; ++a)
    for (const auto& [b, c] : g.dual(a)) omega_u.add_term({current_letter(g, a, 0), current_letter(g, b, 1)}, c);
  NCPoly expected;
  for (int a = 0; a < 3; ++a)
    for (const auto& [b, c] : g.dual(a))
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          expected.add_term({static_cast<Letter>(3 * i + a), static_cast<Letter>(3 * j + b)}, c * z[static_cast<std::size_t>(j)]);
  CHECK(gaudin_evaluation(g, t2, omega_u, z) == t2.normal_form(expected));

  // homomorphism on low-level words
  std::mt19937 rng(2);
  for (int i = 0; i < 10; ++i) {
    NCPoly a = random_word_poly(rng, 6, 2), b = random_word_poly(rng, 6, 2);  // levels 0, 1 only
    NCPoly ab = cur.multiply(a, b);
    CHECK(gaudin_evaluation(g, t2, ab, z) ==
          t2.multiply(gaudin_evaluation(g, t2, a, z), gaudin_evaluation(g, t2, b, z)));
  }
}

TEST_CASE("classical Gaudin images span the Hamiltonians") {
  LieAlgebra g = preset("sl2");
  LoopContext ctx(g, 6);
  std::vector<Rational> z = {0, 1, 4};
  // quadratic A_sl2 generators D^k Φ, k <= 4
  std::vector<CommPoly> images;
  CommPoly phi = g.invariants()[0].poly;
  for (int k = 0; k <= 4; ++k) {
    images.push_back(gaudin_evaluation(g, phi, z));
    phi = ctx.derivation(phi);
  }
  auto omega_ij = [&](int i, int j) {
    CommPoly o;
    for (int a = 0; a < 3; ++a)
      for (const auto& [b, c] : g.dual(a))
        o += CommPoly::var(make_var(static_cast<std::uint32_t>(3 * i + a), 0)) * CommPoly::var(make_var(static_cast<std::uint32_t>(3 * j + b), 0)) * c;
    return o;
  };
  std::vector<CommPoly> hamiltonians;
  for (int i = 0; i < 3; ++i) {
    CommPoly h;
    for (int j = 0; j < 3; ++j)
      if (j != i) h += omega_ij(i, j) * (1 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]));
    hamiltonians.push_back(h);
  }
  std::vector<CommPoly> casimirs = {omega_ij(0, 0), omega_ij(1, 1), omega_ij(2, 2)};
  // compare spans via coefficient vectors
  std::map<Monomial, std::size_t, MonomialOrder> cols;
  auto vec = [&](const CommPoly& p) {
    for (const auto& [m, c] : p.terms()) cols.emplace(m, cols.size());
    return p;
  };
  for (auto& p : images) vec(p);
  for (auto& p : hamiltonians) vec(p);
  for (auto& p : casimirs) vec(p);
  auto dense = [&](const std::vector<CommPoly>& ps) {
    Matrix m;
    for (const auto& p : ps) {
      Vector v(cols.size());
      for (const auto& [mono, c] : p.terms()) v[cols.at(mono)] = c;
      m.push_back(v);
    }
    return m;
  };
  Matrix a = dense(images);
  std::vector<CommPoly> hc = hamiltonians;
  hc.insert(hc.end(), casimirs.begin(), casimirs.end());
  Matrix b = dense(hc);
  Matrix ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  CHECK(rank(a, cols.size()) == rank(b, cols.size()));
  CHECK(rank(ab, cols.size()) == rank(a, cols.size()));
}

TEST_CASE("Talalaev generators") {
  LieAlgebra g1 = gl(1);
  PbwAlgebra c1 = current_algebra(g1, 3);
  auto t1 = talalaev_generators(g1, c1, 3);
  REQUIRE(t1.size() == 4);  // ∂ and -e11[r] z^{-r-1}
  CHECK(t1[0].d_power == 1);
  for (int r = 0; r < 3; ++r) CHECK(t1[static_cast<std::size_t>(r + 1)].value == NCPoly::letter(static_cast<Letter>(r)) * Rational(-1));

  LieAlgebra g = preset("gl2");
  PbwAlgebra c = current_algebra(g, 3);
  auto gens = talalaev_generators(g, c, 4);
  const NCPoly* coeff = nullptr;
  for (const auto& t : gens)
    if (t.d_power == 0 && t.z_power == 2) coeff = &t.value;
  REQUIRE(coeff != nullptr);
  // e11 e22 - e12 e21 + e11 in the order e11 < e12 < e21 < e22
  NCPoly expected = NCPoly::word({0, 3}) - NCPoly::word({1, 2}) + NCPoly::letter(0);
  CHECK(*coeff == expected);
  for (const auto& a : gens)
    for (const auto& b : gens) CHECK(c.commutator(a.value, b.value).is_zero());
}

TEST_CASE("quadratic shift-of-argument elements") {
  LieAlgebra g = preset("sl2");
  PbwAlgebra u = enveloping(g);
  Vector h = {0, 1, 0};
  CHECK(quadratic_soa_element(g, u, h, h) == NCPoly::word({0, 2}));
  LieAlgebra s = preset("sl3");
  PbwAlgebra us = enveloping(s);
  Vector chi = s.diagonal_element({1, 2, -3});
  Vector h1 = s.diagonal_element({1, -1, 0}), h2 = s.diagonal_element({0, 1, -1});
  NCPoly a = quadratic_soa_element(s, us, chi, h1), b = quadratic_soa_element(s, us, chi, h2);
  CHECK(us.commutator(a, b).is_zero());
  NCPoly all = quadratic_soa_element(s, us, chi, chi);
  CHECK(all == quadratic_soa_element(s, us, h1, h1));
  CHECK_THROWS_AS(quadratic_soa_element(s, us, s.diagonal_element({1, 1, -2}), h1), DomainError);
}
