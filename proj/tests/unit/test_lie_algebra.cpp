#include <doctest.h>

#include "bethe/errors.hpp"
#include "bethe/lie_algebra.hpp"

using namespace bethe;

namespace {

Vector basis_vector(const LieAlgebra& g, const std::string& label) {
  Vector v(static_cast<std::size_t>(g.dim()));
  v[static_cast<std::size_t>(g.index_of(label))] = 1;
  return v;
}

CommPoly x0(const LieAlgebra& g, const std::string& label) {
  return CommPoly::var(make_var(static_cast<std::uint32_t>(g.index_of(label)), 0));
}

}  // namespace

TEST_CASE("sl2 bracket") {
  LieAlgebra g = preset("sl2");
  Vector e = basis_vector(g, "e"), h = basis_vector(g, "h"), f = basis_vector(g, "f");
  Vector two_e = e;
  two_e[0] = 2;
  CHECK(g.bracket(h, e) == two_e);
  CHECK(is_zero(g.bracket(e, e)));
  CHECK(g.bracket(e, f) == h);
  CHECK_THROWS_AS(g.bracket(e, Vector{1}), DimensionError);
}

TEST_CASE("gl3 matrix units") {
  LieAlgebra g = preset("gl3");
  CHECK(g.bracket(basis_vector(g, "e12"), basis_vector(g, "e23")) == basis_vector(g, "e13"));
  CHECK(g.rank() == 3);
  CHECK(g.roots().size() == 3);
}

TEST_CASE("sl2 invariant is the trace-form Casimir") {
  LieAlgebra g = preset("sl2");
  REQUIRE(g.invariants().size() == 1);
  CommPoly expected = x0(g, "h") * x0(g, "h") * Rational(1, 2) + x0(g, "e") * x0(g, "f") * Rational(2);
  CHECK(g.invariants()[0].poly == expected);
  CHECK(g.invariants()[0].degree == 2);
}

TEST_CASE("invariant degrees") {
  auto degrees = [](const LieAlgebra& g) {
    std::vector<int> d;
    for (const auto& inv : g.invariants()) d.push_back(inv.degree);
    return d;
  };
  CHECK(degrees(preset("gl2")) == std::vector<int>{1, 2});
  CHECK(degrees(preset("sl3")) == std::vector<int>{2, 3});
  CHECK(degrees(preset("gl4")) == std::vector<int>{1, 2, 3, 4});
  CHECK(preset("sl3").exponents() == std::vector<int>{1, 2});
  for (const auto& name : preset_names()) {
    LieAlgebra g = preset(name);
    for (const auto& inv : g.invariants()) CHECK(g.is_ad_invariant(inv.poly));
  }
}

TEST_CASE("centralizers of diagonal torus elements") {
  LieAlgebra g = preset("gl3");
  auto z = g.centralizer(TorusElement::diag({1, 1, 2}));
  CHECK(z.algebra.dim() == 5);
  CHECK(z.algebra.rank() == 3);
  CHECK(z.embedding == std::vector<int>{0, 1, 3, 4, 8});
  std::vector<int> degrees;
  for (const auto& inv : z.algebra.invariants()) degrees.push_back(inv.degree);
  CHECK(degrees == std::vector<int>{1, 1, 2});
  for (const auto& inv : z.algebra.invariants()) CHECK(z.algebra.is_ad_invariant(inv.poly));

  auto cartan = g.centralizer(TorusElement::diag({1, 2, 3}));
  CHECK(cartan.algebra.dim() == 3);
  CHECK(g.centralizer(TorusElement::identity(3)).algebra.dim() == 9);

  LieAlgebra s = preset("sl3");
  auto zs = s.centralizer(TorusElement::diag({1, 1, 2}));
  CHECK(zs.algebra.dim() == 4);
  CHECK(zs.algebra.invariants().size() == 2);
}

TEST_CASE("regularity") {
  LieAlgebra g = preset("gl3");
  CHECK(g.is_regular(TorusElement::diag({1, 2, 3})));
  CHECK_FALSE(g.is_regular(TorusElement::diag({1, 1, 2})));
  CHECK_FALSE(g.is_regular(TorusElement::identity(3)));
  CHECK_THROWS_AS(g.is_regular(TorusElement::diag({1, 0, 2})), DomainError);
}

TEST_CASE("directional derivative") {
  LieAlgebra g = preset("sl2");
  Vector h = basis_vector(g, "h");
  CommPoly d = g.directional_derivative(g.invariants()[0].poly, h);
  CHECK(d == x0(g, "h") * Rational(2));  // ⟨h,h⟩ = 2 under the trace form
}

TEST_CASE("config round trip and validation") {
  const std::string good = R"({
    "name": "sl2cfg", "dim": 3, "labels": ["e", "h", "f"],
    "brackets": [["h", "e", "e", "2"], ["h", "f", "f", "-2"], ["e", "f", "h", "1"]],
    "form": [["e", "f", "1"], ["h", "h", "2"]],
    "cartan": ["h"],
    "roots": [{"alpha": ["2"], "positive": "e", "negative": "f"}],
    "invariants": [[["1/2", ["h", "h"]], ["2", ["e", "f"]]]]
  })";
  LieAlgebra g = parse_config(good);
  CHECK(g.rank() == 1);
  CHECK(g.invariants()[0].poly == preset("sl2").invariants()[0].poly);

  std::string bad_jacobi = R"({"dim": 3, "brackets": [[0, 1, 0, "1"], [1, 2, 2, "1"], [0, 2, 1, "1"]],
                               "form": [[0, 0, "1"], [1, 1, "1"], [2, 2, "1"]]})";
  CHECK_THROWS_AS(parse_config(bad_jacobi), ValidationError);
  std::string bad_inv = R"({"dim": 3, "labels": ["e", "h", "f"],
    "brackets": [["h", "e", "e", "2"], ["h", "f", "f", "-2"], ["e", "f", "h", "1"]],
    "form": [["e", "f", "1"], ["h", "h", "2"]], "invariants": [[["1", ["e", "e"]]]]})";
  CHECK_THROWS_AS(parse_config(bad_inv), ValidationError);
  CHECK_THROWS_AS(parse_config("{"), ParseError);
  CHECK_THROWS_AS(preset("e8"), ParseError);
}
