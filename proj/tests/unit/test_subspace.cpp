#include <doctest.h>

#include <random>

#include "bethe/errors.hpp"
#include "bethe/subspace.hpp"

using namespace bethe;

namespace {

UniPoly eps() { return {0, 1}; }
UniPoly c(long v) { return uni_trim({Rational(v)}); }

}  // namespace

TEST_CASE("span and containment") {
  auto s = Subspace::span({{1, 2, 0}, {2, 4, 0}}, 3);
  CHECK(s.dim() == 1);
  CHECK(s.contains(Vector{3, 6, 0}));
  CHECK_FALSE(s.contains(Vector{0, 0, 1}));
  auto t = Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3);
  CHECK(t.contains(s));
  CHECK_FALSE(s.contains(t));
  CHECK(s.witness_not_contained(t).has_value());
}

TEST_CASE("intersection and sum") {
  auto a = Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3);
  auto b = Subspace::span({{0, 1, 0}, {0, 0, 1}}, 3);
  auto i = a.intersect(b);
  CHECK(i.dim() == 1);
  CHECK(i == Subspace::span({{0, 1, 0}}, 3));
  CHECK(a.sum(b).dim() == 3);
}

TEST_CASE("dimension formula on random subspaces") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix x(3, Vector(5)), y(3, Vector(5));
    for (auto& r : x)
      for (auto& v : r) v = d(rng);
    for (auto& r : y)
      for (auto& v : r) v = d(rng);
    auto a = Subspace::span(x, 5), b = Subspace::span(y, 5);
    CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
    auto meet = a.intersect(b);
    for (const auto& v : meet.basis()) {
      CHECK(a.contains(v));
      CHECK(b.contains(v));
    }
  }
}

TEST_CASE("padding to a larger ambient space") {
  auto a = Subspace::span({{1, 1}}, 2);
  auto b = Subspace::span({{1, 1, 0}}, 3);
  CHECK(a == b);
  CHECK(a.padded(4).ambient() == 4);
  CHECK_THROWS_AS(b.padded(2), DimensionError);
}

TEST_CASE("polynomial coordinates round trip") {
  MonomialCoordinates coords;
  CommPoly p = CommPoly::var(make_var(0, 0)) * CommPoly::var(make_var(1, 2)) + CommPoly::constant(3);
  auto rows = to_rows({p}, coords);
  CHECK(coords.size() == 2);
  CHECK(to_poly(rows[0], coords) == p);
  auto s = span_of({p, p * Rational(2)}, coords);
  CHECK(s.dim() == 1);
}

TEST_CASE("associated graded keeps top parts") {
  // levels: column 0 -> 1, columns 1, 2 -> 0
  auto level = [](std::size_t c) { return c == 0 ? 1 : 0; };
  auto gr = associated_graded({{1, 1, 0}, {1, 0, 1}}, 3, level);
  REQUIRE(gr.size() == 2);
  CHECK(gr.at(1) == Subspace::span({{1, 0, 0}}, 3));
  CHECK(gr.at(0) == Subspace::span({{0, 1, -1}}, 3));
}

TEST_CASE("uni poly helpers") {
  CHECK(uni_mul({1, 1}, {1, -1}) == UniPoly{1, 0, -1});
  CHECK(uni_valuation({0, 0, 3}) == 2);
  CHECK(uni_valuation({}) == -1);
  CHECK(uni_eval({1, 2, 3}, 2) == 17);
  auto e = truncated_exp(2, 3);
  CHECK(e == UniPoly{1, 2, 2, Rational(4, 3)});
}

TEST_CASE("limit of span(1, eps) is the first axis") {
  EpsMatrix rows = {{c(1), eps()}};
  auto l = limit_subspace(rows, 2);
  CHECK(l == Subspace::span({{1, 0}}, 2));
}

TEST_CASE("limit of span((1,1),(1,1+eps)) is the plane") {
  EpsMatrix rows = {{c(1), c(1)}, {c(1), uni_add(c(1), eps())}};
  CHECK(generic_rank(rows, 2) == 2);
  auto l = limit_subspace(rows, 2);
  CHECK(l.dim() == 2);
}

TEST_CASE("limit is invariant under a unimodular change of rows") {
  // span{(1, eps, 0), (0, 1, eps^2)} mixed by [[1, eps], [0, 1]] and [[1, 0], [3, 1]]
  std::vector<UniPoly> r1 = {c(1), eps(), {}};
  std::vector<UniPoly> r2 = {{}, c(1), UniPoly{0, 0, 1}};
  auto base = limit_subspace({r1, r2}, 3);
  std::vector<UniPoly> m1(3), m2(3);
  for (int k = 0; k < 3; ++k) {
    m1[k] = uni_add(r1[k], uni_mul(eps(), r2[k]));
    m2[k] = uni_add(uni_scale(r1[k], 3), r2[k]);
  }
  CHECK(limit_subspace({m1, m2}, 3) == base);
  CHECK(base == Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3));
}

TEST_CASE("limit is invariant under random unimodular changes of rows") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-2, 2), pick(0, 2);
  // family span{(1, ε, 0, ε²), (0, 1, ε, 0), (ε, 0, 1, 1)} in Q^4
  EpsMatrix base = {{c(1), eps(), {}, UniPoly{0, 0, 1}}, {{}, c(1), eps(), {}}, {eps(), {}, c(1), c(1)}};
  const Subspace expected = limit_subspace(base, 4);
  for (int trial = 0; trial < 15; ++trial) {
    EpsMatrix rows = base;
    // row_i += p(ε) row_j with i != j keeps determinant 1
    for (int step = 0; step < 4; ++step) {
      const int i = pick(rng), j = (i + 1 + pick(rng) % 2) % 3;
      UniPoly p = uni_trim({Rational(coef(rng)), Rational(coef(rng))});
      for (int col = 0; col < 4; ++col) rows[i][col] = uni_add(rows[i][col], uni_mul(p, rows[j][col]));
    }
    CHECK(limit_subspace(rows, 4) == expected);
  }
}

TEST_CASE("epsilon independent family is its own limit") {
  EpsMatrix rows = {{c(1), c(2), {}}, {{}, c(1), c(-1)}};
  CHECK(limit_subspace(rows, 3) == Subspace::span({{1, 2, 0}, {0, 1, -1}}, 3));
}

TEST_CASE("limit of a degenerating pair") {
  // span{(1, 0, eps), (1, eps, 0)} -> span{(1,0,0), (0,1,-1)}
  EpsMatrix rows = {{c(1), {}, eps()}, {c(1), eps(), {}}};
  auto l = limit_subspace(rows, 3);
  CHECK(l == Subspace::span({{1, 0, 0}, {0, 1, -1}}, 3));
}

TEST_CASE("dependent rows are reduced to the generic rank") {
  EpsMatrix rows = {{c(1), eps()}, {c(2), uni_scale(eps(), 2)}};
  CHECK(generic_rank(rows, 2) == 1);
  CHECK(limit_subspace(rows, 2).dim() == 1);
}
