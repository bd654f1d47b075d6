#include <doctest.h>

#include "bethe/errors.hpp"
#include "bethe/yangian.hpp"
#include "support/oracles.hpp"

using namespace bethe;

TEST_CASE("generator commutators") {
  Yangian y(2, 4);
  auto br = [&](int i, int j, int r, int k, int l, int s) { return y.commutator(y.t(i, j, r), y.t(k, l, s)); };
  CHECK(br(1, 1, 1, 1, 2, 2) == y.t(1, 2, 2));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          NCPoly expected = y.t(i, l, 1) * Rational(k == j ? 1 : 0) - y.t(k, j, 1) * Rational(i == l ? 1 : 0);
          CHECK(br(i, j, 1, k, l, 1) == expected);
        }
  CHECK(br(1, 2, 3, 1, 2, 3).is_zero());
  // t21 t12 -> t12 t21 + t22 - t11
  CHECK(y.normal_form(y.t(2, 1, 1) * y.t(1, 2, 1)) == y.t(1, 2, 1) * y.t(2, 1, 1) + y.t(2, 2, 1) - y.t(1, 1, 1));
  CHECK_THROWS_AS(br(1, 2, 3, 2, 1, 3), TruncationOverflow);
}

TEST_CASE("RTT relation holds for small orders") {
  for (int n : {2, 3}) {
    Yangian y(n, 7);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            for (int a = -1; a <= 2; ++a)
              for (int b = -1; b <= 2; ++b) CHECK(oracle::rtt_defect(y, i, j, k, l, a, b).is_zero());
  }
}

TEST_CASE("associativity of normal ordering on random triples") {
  Yangian y(2, 9);
  const std::size_t letters = 4 * 3;  // superscripts up to 3
  unsigned state = 12345;
  auto next = [&] { state = state * 1103515245u + 12345u; return (state >> 8) % letters; };
  for (int trial = 0; trial < 25; ++trial) {
    NCPoly a = NCPoly::letter(static_cast<Letter>(next()));
    NCPoly b = NCPoly::letter(static_cast<Letter>(next()));
    NCPoly c = NCPoly::letter(static_cast<Letter>(next()));
    CHECK(y.multiply(y.multiply(a, b), c) == y.multiply(a, y.multiply(b, c)));
  }
}

TEST_CASE("PBW monomial count matches the free Poincare series") {
  // ordered monomials in t_ij^{(r)} of F1-degree exactly d
  for (int n : {1, 2}) {
    const int d_max = 4;
    std::vector<long> count(static_cast<std::size_t>(d_max) + 1, 0);
    // generators: n^2 copies of each degree r
    auto expected = oracle::free_series(oracle::repeated_degrees(n * n, 1, d_max), d_max);
    // enumerate nondecreasing words over letters with weight r
    std::vector<int> weights;
    for (int r = 1; r <= d_max; ++r)
      for (int k = 0; k < n * n; ++k) weights.push_back(r);
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int deg) {
      count[static_cast<std::size_t>(deg)]++;
      for (std::size_t x = from; x < weights.size(); ++x)
        if (deg + weights[x] <= d_max) rec(x, deg + weights[x]);
    };
    rec(0, 0);
    CHECK(count == expected);
  }
}

TEST_CASE("quantum minors") {
  Yangian y(2, 4);
  auto t1 = y.quantum_minor({1}, {2}, 3);
  for (int s = 1; s <= 3; ++s) CHECK(t1[static_cast<std::size_t>(s)] == y.t(1, 2, s));
  auto qdet = y.quantum_minor({1, 2}, {1, 2}, 3);
  CHECK(qdet[0] == NCPoly::constant(1));
  CHECK(qdet[1] == y.t(1, 1, 1) + y.t(2, 2, 1));
  auto swapped = y.quantum_minor({2, 1}, {1, 2}, 3);
  for (int s = 0; s <= 3; ++s) CHECK(swapped[static_cast<std::size_t>(s)] == -qdet[static_cast<std::size_t>(s)]);
  // qdet coefficients are central
  for (int s = 1; s <= 3; ++s)
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        for (int r = 1; r <= 2; ++r) CHECK(y.commutator(qdet[static_cast<std::size_t>(s)], y.t(i, j, r)).is_zero());
}

TEST_CASE("Bethe series") {
  Yangian y(2, 8);
  std::vector<Rational> c = {1, 2};
  auto tau1 = y.bethe_series(1, c, 3);
  for (int s = 1; s <= 3; ++s) CHECK(tau1[static_cast<std::size_t>(s)] == y.t(1, 1, s) + y.t(2, 2, s) * Rational(2));
  auto tau2 = y.bethe_series(2, c, 3);
  CHECK(tau2[0] == NCPoly::constant(2));
  CHECK(y.commutator(tau1[1], tau2[2]).is_zero());
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) CHECK(y.commutator(tau1[static_cast<std::size_t>(a)], tau2[static_cast<std::size_t>(b)]).is_zero());
}

TEST_CASE("associated graded maps") {
  Yangian y(2, 4);
  CHECK(y.gr1(y.t(1, 2, 3)) == CommPoly::var(make_var(1, 2)));
  CHECK(y.gr1(NCPoly::constant(5)) == CommPoly::constant(5));
  NCPoly p = y.t(1, 2, 1) * y.t(2, 1, 1) + y.t(1, 1, 1);
  CHECK(y.gr1(p) == CommPoly::var(make_var(1, 0)) * CommPoly::var(make_var(2, 0)));
  CHECK(y.gr2(y.t(2, 1, 3), 4) == NCPoly::letter(2 + 2 * 4));
  // gr2 of [t_ij^(1), t_kl^(1)] is the gl2 bracket (same letters)
  NCPoly br = y.commutator(y.t(1, 2, 1), y.t(2, 1, 1));
  CHECK(y.gr2(br, 4) == NCPoly::letter(0) - NCPoly::letter(3));
  // mixed F2: t11^(2) + t11^(1) t22^(1) keeps the F2 = 1 word
  CHECK(y.gr2(y.t(1, 1, 2) + y.t(1, 1, 1) * y.t(2, 2, 1), 4) == NCPoly::letter(4));
  // words past the current truncation are dropped
  CHECK(y.gr2(y.t(1, 1, 3), 2).is_zero());
}
