#include "commands.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "bethe/enveloping.hpp"
#include "bethe/errors.hpp"
#include "bethe/poisson.hpp"
#include "bethe/subalgebras.hpp"
#include "bethe/subspace.hpp"
#include "bethe/yangian.hpp"
#include "pool.hpp"

namespace bethe::cli {

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Report start(const Job& job, Json params) {
  Report r;
  r.doc["schema"] = kSchema;
  r.doc["version"] = kSchemaVersion;
  r.doc["command"] = job.command;
  r.doc["parameters"] = std::move(params);
  return r;
}

void finish(Report& r) { r.doc["pass"] = r.pass; }

// Cartan vector from diagonal entries (matrix algebras) or coordinates on the
// Cartan basis elements (configs without matrices).
Vector cartan_vector(const LieAlgebra& g, const std::vector<Rational>& entries) {
  if (g.has_matrices()) {
    if (static_cast<int>(entries.size()) != g.matrix_size()) throw DimensionError("chi needs one entry per matrix row");
    return g.diagonal_element(entries);
  }
  if (entries.size() != g.cartan_indices().size()) throw DimensionError("chi needs one entry per Cartan element");
  Vector v(static_cast<std::size_t>(g.dim()));
  for (std::size_t k = 0; k < entries.size(); ++k) v[static_cast<std::size_t>(g.cartan_indices()[k])] = entries[k];
  return v;
}

std::vector<Rational> require_list(const std::string& text, const char* flag) {
  if (text.empty()) throw ParseError(std::string("missing ") + flag);
  return parse_list(text);
}

struct PairResult {
  std::string a, b;
  std::string value;  // "0" or the witness
};

Json pair_json(const std::vector<PairResult>& pairs, bool& pass) {
  Json arr = Json::array();
  for (const auto& p : pairs) {
    arr.push_back({{"left", p.a}, {"right", p.b}, {"result", p.value}});
    if (p.value != "0") pass = false;
  }
  return arr;
}

void pair_lines(Report& r, const std::vector<PairResult>& pairs, const std::string& what) {
  std::size_t bad = 0;
  for (const auto& p : pairs) {
    if (p.value != "0") {
      ++bad;
      r.lines.push_back("  [" + p.a + ", " + p.b + "] = " + p.value);
    }
  }
  if (bad == 0) {
    r.lines.push_back("all " + std::to_string(pairs.size()) + " " + what + " = 0");
  } else {
    r.lines.push_back(std::to_string(bad) + " of " + std::to_string(pairs.size()) + " " + what + " nonzero");
  }
}

// ---- gens ----

Report cmd_gens(const Job& job) {
  Json params{{"family", job.family}};
  Json elems = Json::array();
  std::vector<std::string> lines;
  auto emit = [&](const std::string& label, int degree, const std::string& text) {
    elems.push_back({{"label", label}, {"degree", degree}, {"value", text}});
    lines.push_back(label + " [" + std::to_string(degree) + "]: " + text);
  };
  if (job.family == "gaudin") {
    LieAlgebra g = load_algebra(job);
    LoopContext ctx(g, job.kmax + 1);
    params["algebra"] = g.name();
    params["kmax"] = job.kmax;
    for (const auto& e : gaudin_generators(ctx, job.kmax).elements) emit(e.label, e.degree, e.value.to_string(ctx.namer()));
  } else if (job.family == "soa") {
    LieAlgebra g = load_algebra(job);
    auto chi = require_list(job.chi, "--chi");
    params["algebra"] = g.name();
    params["chi"] = rationals(chi);
    for (const auto& e : soa_generators(g, cartan_vector(g, chi)).elements) emit(e.label, e.degree, e.value.to_string(level_namer(g)));
  } else if (job.family == "classical") {
    const int n = gl_size(job);
    auto c = require_list(job.c, "--C");
    params["n"] = n;
    params["C"] = rationals(c);
    params["max_deg"] = job.max_deg;
    for (const auto& e : classical_bethe(n, c, job.max_deg).elements) emit(e.label, e.degree, e.value.to_string(congruence_namer(n)));
  } else if (job.family == "bethe") {
    const int n = gl_size(job);
    auto c = require_list(job.c, "--C");
    params["n"] = n;
    params["C"] = rationals(c);
    params["max_deg"] = job.max_deg;
    Yangian y(n, std::max(job.max_deg, 1));
    for (int k = 1; k <= n; ++k) {
      auto tau = y.bethe_series(k, c, job.max_deg);
      for (int s = 1; s <= job.max_deg; ++s) {
        emit("tau_" + std::to_string(k) + "^(" + std::to_string(s) + ")", s,
             y.algebra().to_string(tau[static_cast<std::size_t>(s)]));
      }
    }
  } else if (job.family == "talalaev") {
    const int n = gl_size(job);
    LieAlgebra g = gl(n);
    PbwAlgebra u = current_algebra(g, job.truncation);
    params["n"] = n;
    params["R"] = job.truncation;
    params["max_z"] = job.max_z;
    for (const auto& t : talalaev_generators(g, u, job.max_z)) {
      emit("G_{" + std::to_string(t.d_power) + "," + std::to_string(t.z_power) + "}", t.z_power, u.to_string(t.value));
    }
  } else {
    throw ParseError("unknown family '" + job.family + "' (gaudin, soa, classical, bethe, talalaev)");
  }
  Report r = start(job, std::move(params));
  r.doc["generators"] = std::move(elems);
  r.lines = std::move(lines);
  finish(r);
  return r;
}

// ---- verify-bethe ----

Report cmd_verify_bethe(const Job& job) {
  const int n = gl_size(job);
  auto c = require_list(job.c, "--C");
  if (static_cast<int>(c.size()) != n) throw DimensionError("--C needs n entries");
  if (job.max_deg < 2) throw BoundError("--max-deg must be at least 2");
  // pair mode: s + s' <= max-deg; all-pairs mode: every s <= max-deg
  const int smax = job.all_pairs ? job.max_deg : job.max_deg - 1;
  Yangian y(n, job.all_pairs ? 2 * job.max_deg : job.max_deg);
  struct Gen {
    std::string label;
    int s;
    NCPoly value;
  };
  std::vector<Gen> gens;
  for (int k = 1; k <= n; ++k) {
    auto tau = y.bethe_series(k, c, smax);
    for (int s = 1; s <= smax; ++s) {
      gens.push_back({"tau_" + std::to_string(k) + "^(" + std::to_string(s) + ")", s, tau[static_cast<std::size_t>(s)]});
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (job.all_pairs || gens[a].s + gens[b].s <= job.max_deg) todo.emplace_back(a, b);
  auto results = parallel_map<PairResult>(todo.size(), [&](std::size_t i) {
    const auto& [a, b] = todo[i];
    NCPoly v = y.commutator(gens[a].value, gens[b].value);
    return PairResult{gens[a].label, gens[b].label, v.is_zero() ? "0" : y.algebra().to_string(v)};
  });
  Report r = start(job, {{"n", n}, {"C", rationals(c)}, {"max_deg", job.max_deg}, {"all_pairs", job.all_pairs}});
  r.doc["pairs"] = pair_json(results, r.pass);
  pair_lines(r, results, "commutator pairs");
  finish(r);
  return r;
}

// ---- verify-gaudin ----

Report cmd_verify_gaudin(const Job& job) {
  LieAlgebra g = load_algebra(job);
  LoopContext ctx(g, job.loop_truncation > 0 ? job.loop_truncation : 2 * job.kmax + 2);
  auto fam = gaudin_generators(ctx, job.kmax);
  std::vector<std::tuple<std::size_t, std::size_t, int>> todo;
  for (std::size_t a = 0; a < fam.elements.size(); ++a)
    for (std::size_t b = a + 1; b < fam.elements.size(); ++b)
      for (int shift = 0; shift <= 1; ++shift) todo.emplace_back(a, b, shift);
  auto results = parallel_map<PairResult>(todo.size(), [&](std::size_t i) {
    const auto& [a, b, shift] = todo[i];
    CommPoly v = ctx.bracket(fam.elements[a].value, fam.elements[b].value, shift);
    return PairResult{fam.elements[a].label, fam.elements[b].label + " (bracket " + std::to_string(shift) + ")",
                      v.is_zero() ? "0" : v.to_string(ctx.namer())};
  });
  Report r = start(job, {{"algebra", g.name()}, {"kmax", job.kmax}, {"R", ctx.truncation()}});
  Json arr = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [a, b, shift] = todo[i];
    arr.push_back({{"left", fam.elements[a].label}, {"right", fam.elements[b].label}, {"bracket", shift}, {"result", results[i].value}});
    if (results[i].value != "0") r.pass = false;
  }
  r.doc["pairs"] = std::move(arr);
  pair_lines(r, results, "bracket evaluations (poisson0 and poisson1)");
  finish(r);
  return r;
}

// ---- verify-soa ----

Report cmd_verify_soa(const Job& job) {
  LieAlgebra g = load_algebra(job);
  auto chi = require_list(job.chi, "--chi");
  auto fam = soa_generators(g, cartan_vector(g, chi));
  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t a = 0; a < fam.elements.size(); ++a)
    for (std::size_t b = a + 1; b < fam.elements.size(); ++b) todo.emplace_back(a, b);
  auto results = parallel_map<PairResult>(todo.size(), [&](std::size_t i) {
    const auto& [a, b] = todo[i];
    CommPoly v = lie_poisson(g, fam.elements[a].value, fam.elements[b].value);
    return PairResult{fam.elements[a].label, fam.elements[b].label, v.is_zero() ? "0" : v.to_string(level_namer(g))};
  });
  std::mt19937 rng(job.seed);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  std::vector<VarId> vars;
  std::map<VarId, Rational> point;
  Json point_json = Json::array();
  for (int a = 0; a < g.dim(); ++a) {
    vars.push_back(make_var(static_cast<std::uint32_t>(a), 0));
    Rational v(num(rng), den(rng));
    v.canonicalize();
    point[vars.back()] = v;
    point_json.push_back(to_string(v));
  }
  const std::size_t jr = jacobian_rank(fam.values(), vars, point);
  const std::size_t expected = static_cast<std::size_t>(g.dim() + g.rank()) / 2;
  Report r = start(job, {{"algebra", g.name()}, {"chi", rationals(chi)}, {"seed", job.seed}});
  r.doc["generator_count"] = fam.elements.size();
  r.doc["expected_count"] = expected;
  r.doc["pairs"] = pair_json(results, r.pass);
  r.doc["jacobian"] = {{"point", point_json}, {"rank", jr}};
  if (fam.elements.size() != expected || jr != expected) r.pass = false;
  r.lines.push_back(std::to_string(fam.elements.size()) + " generators (expected " + std::to_string(expected) + ")");
  pair_lines(r, results, "Poisson brackets");
  r.lines.push_back("Jacobian rank " + std::to_string(jr) + " at seed " + std::to_string(job.seed));
  finish(r);
  return r;
}

// ---- verify-talalaev ----

Report cmd_verify_talalaev(const Job& job) {
  const int n = gl_size(job);
  LieAlgebra g = gl(n);
  PbwAlgebra u = current_algebra(g, job.truncation);
  std::vector<TalalaevCoefficient> gens;
  for (auto& t : talalaev_generators(g, u, job.max_z)) {
    const bool constant = t.value.terms().size() == 1 && t.value.terms().begin()->first.empty();
    if (!constant) gens.push_back(std::move(t));
  }
  auto name = [](const TalalaevCoefficient& t) {
    return "G_{" + std::to_string(t.d_power) + "," + std::to_string(t.z_power) + "}";
  };
  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) todo.emplace_back(a, b);
  auto results = parallel_map<PairResult>(todo.size(), [&](std::size_t i) {
    const auto& [a, b] = todo[i];
    NCPoly v = u.commutator(gens[a].value, gens[b].value);
    return PairResult{name(gens[a]), name(gens[b]), v.is_zero() ? "0" : u.to_string(v)};
  });
  Report r = start(job, {{"n", n}, {"R", job.truncation}, {"max_z", job.max_z}, {"compare_bethe", job.compare_bethe}});
  r.doc["pairs"] = pair_json(results, r.pass);
  pair_lines(r, results, "commutators of cdet coefficients");
  if (job.compare_bethe) {
    // gr2 of the F1 <= max_z span of products of τ(E) vs products of cdet coefficients, per deg2
    std::vector<Graded<NCPoly>> tg;
    for (const auto& t : gens) tg.push_back({t.value, t.z_power});
    std::function<NCPoly(const NCPoly&, const NCPoly&)> umul = [&](const NCPoly& a, const NCPoly& b) { return u.multiply(a, b); };
    std::map<int, std::vector<NCPoly>> cdet_parts, tau_parts;
    for (int d = 0; d <= job.max_z; ++d)
      for (const auto& p : products_of_degree<NCPoly>(tg, d, umul, NCPoly::constant(1))) {
        std::map<int, NCPoly> split;
        for (const auto& [w, c] : p.terms()) split[Yangian::f2(w, n)].add_term(w, c);
        for (auto& [m, q] : split) cdet_parts[m].push_back(q);
      }
    Yangian y(n, job.max_z);
    std::vector<Graded<NCPoly>> taus;
    for (int k = 1; k <= n; ++k) {
      auto tau = y.bethe_series(k, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)), job.max_z);
      for (int s = 1; s <= job.max_z; ++s) taus.push_back({tau[static_cast<std::size_t>(s)], s});
    }
    std::function<NCPoly(const NCPoly&, const NCPoly&)> ymul = [&](const NCPoly& a, const NCPoly& b) { return y.multiply(a, b); };
    std::vector<NCPoly> products;
    for (int d = 0; d <= job.max_z; ++d)
      for (auto& p : products_of_degree<NCPoly>(taus, d, ymul, NCPoly::constant(1))) products.push_back(std::move(p));
    WordCoordinates ywords;
    Matrix rows = to_rows(products, ywords);
    auto pieces = associated_graded(rows, ywords.size(), [&](std::size_t c) { return Yangian::f2(ywords.key(c), n); });
    const Letter bound = static_cast<Letter>(job.truncation * n * n);
    for (const auto& [m, s] : pieces)
      for (const auto& row : s.basis()) {
        tau_parts[m].push_back(to_poly(row, ywords).filter([&](const Word& w) {
          for (Letter x : w)
            if (x >= bound) return false;
          return true;
        }));
      }
    std::set<int> keys;
    for (const auto& [m, v] : cdet_parts) keys.insert(m);
    for (const auto& [m, v] : tau_parts) keys.insert(m);
    WordCoordinates words;
    Json cmp = Json::array();
    for (int m : keys) {
      Subspace a = span_of(tau_parts[m], words);
      Subspace b = span_of(cdet_parts[m], words);
      a = a.padded(words.size());
      b = b.padded(words.size());
      const bool eq = a == b;
      Json entry{{"deg2", m}, {"gr2_bethe_dim", a.dim()}, {"cdet_dim", b.dim()}, {"equal", eq}};
      if (!eq) {
        r.pass = false;
        auto w = b.witness_not_contained(a);
        if (!w) w = a.witness_not_contained(b);
        if (w) entry["witness"] = u.to_string(to_poly(*w, words));
      }
      cmp.push_back(std::move(entry));
      r.lines.push_back("deg2 " + std::to_string(m) + ": gr2 B(E) dim " + std::to_string(a.dim()) + ", cdet dim " +
                        std::to_string(b.dim()) + (eq ? ", equal" : ", DIFFERENT"));
    }
    r.doc["comparison"] = std::move(cmp);
  }
  finish(r);
  return r;
}

// ---- gr ----

Report cmd_gr(const Job& job) {
  const int n = gl_size(job);
  auto c = require_list(job.c, "--C");
  auto bethe = classical_bethe(n, c, job.max_deg);
  if (job.max_deg < 1) throw BoundError("--max-deg must be positive");
  auto gaudin = centralizer_gaudin(n, c, job.max_deg - 1, job.max_deg);
  Report r = start(job, {{"n", n}, {"C", rationals(c)}, {"max_deg", job.max_deg}});
  auto per_degree = parallel_map<Json>(static_cast<std::size_t>(job.max_deg), [&](std::size_t i) {
    const int d = static_cast<int>(i) + 1;
    MonomialCoordinates gamma, loop;
    Matrix rows = to_rows(generated_component(bethe, d), gamma);
    auto pieces = associated_graded(rows, gamma.size(), [&](std::size_t col) { return deg2(gamma.key(col)); });
    std::map<int, std::vector<CommPoly>> lhs, rhs;
    for (const auto& [m, s] : pieces)
      for (const auto& row : s.basis()) lhs[m].push_back(congruence_to_loop(n, to_poly(row, gamma)));
    for (const auto& p : generated_component(gaudin, d))
      for (const auto& [bideg, part] : bigrade(p)) rhs[bideg.second].push_back(part);
    std::set<int> keys;
    for (const auto& [m, v] : lhs) keys.insert(m);
    for (const auto& [m, v] : rhs) keys.insert(m);
    Json out = Json::array();
    for (int m : keys) {
      Subspace a = span_of(lhs[m], loop), b = span_of(rhs[m], loop);
      a = a.padded(loop.size());
      b = b.padded(loop.size());
      Json e{{"deg1", d}, {"deg2", m}, {"gr2_dim", a.dim()}, {"gaudin_dim", b.dim()}, {"equal", a == b}};
      if (!(a == b)) {
        auto w = b.witness_not_contained(a);
        if (!w) w = a.witness_not_contained(b);
        if (w) e["witness"] = to_poly(*w, loop).to_string(level_namer(gl(n)));
      }
      out.push_back(std::move(e));
    }
    return out;
  });
  Json table = Json::array();
  for (auto& block : per_degree)
    for (auto& e : block) {
      if (!e["equal"].get<bool>()) r.pass = false;
      r.lines.push_back("(" + std::to_string(e["deg1"].get<int>()) + "," + std::to_string(e["deg2"].get<int>()) +
                        "): gr2 dim " + std::to_string(e["gr2_dim"].get<std::size_t>()) + ", A_z dim " +
                        std::to_string(e["gaudin_dim"].get<std::size_t>()) + (e["equal"].get<bool>() ? ", equal" : ", DIFFERENT"));
      table.push_back(std::move(e));
    }
  r.doc["bidegrees"] = std::move(table);
  finish(r);
  return r;
}

// ---- poincare ----

Report cmd_poincare(const Job& job) {
  GeneratorFamily fam;
  Json params{{"family", job.family}, {"cutoff", job.cutoff}};
  if (job.family == "bethe" || job.family == "classical") {
    const int n = gl_size(job);
    auto c = require_list(job.c, "--C");
    params["n"] = n;
    params["C"] = rationals(c);
    fam = classical_bethe(n, c, std::max(job.cutoff, 1));
  } else if (job.family == "gaudin") {
    LieAlgebra g = load_algebra(job);
    LoopContext ctx(g, std::max(job.cutoff, 1));
    params["algebra"] = g.name();
    int kmax = 0;
    for (const auto& inv : g.invariants()) kmax = std::max(kmax, job.cutoff - inv.degree);
    fam = gaudin_generators(ctx, std::max(kmax, 0));
  } else if (job.family == "soa") {
    LieAlgebra g = load_algebra(job);
    auto chi = require_list(job.chi, "--chi");
    params["algebra"] = g.name();
    params["chi"] = rationals(chi);
    fam = soa_generators(g, cartan_vector(g, chi));
  } else {
    throw ParseError("unknown family '" + job.family + "' (bethe, gaudin, soa)");
  }
  auto dims = poincare_series(fam, job.cutoff);
  Report r = start(job, std::move(params));
  r.doc["series"] = dims;
  r.lines.push_back("degree  dim");
  for (std::size_t d = 0; d < dims.size(); ++d) r.lines.push_back(std::to_string(d) + "       " + std::to_string(dims[d]));
  finish(r);
  return r;
}

// ---- limit ----

Report cmd_limit(const Job& job) {
  const int n = gl_size(job);
  auto c0 = require_list(job.c0, "--C0");
  auto chi = require_list(job.chi, "--chi");
  if (job.compare != "product" && job.compare != "none") throw ParseError("--compare takes product or none");
  const bool compare = job.compare == "product";
  GeneratorFamily base = classical_bethe(n, c0, job.deg);
  GeneratorFamily shift;
  if (compare) shift = shift_family_in_congruence(n, c0, chi);
  std::vector<std::vector<CommPoly>> a_parts, b_parts;
  for (int d = 0; d <= job.deg && compare; ++d) {
    a_parts.push_back(generated_component(base, d));
    b_parts.push_back(generated_component(shift, d));
  }
  auto rows = parallel_map<Json>(static_cast<std::size_t>(job.deg), [&](std::size_t i) {
    const int d = static_cast<int>(i) + 1;
    MonomialCoordinates coords;
    BetheLimit lim = bethe_limit_component(n, c0, chi, d, coords, job.max_order);
    Json e{{"deg", d},
           {"limit_dim", lim.limit.dim()},
           {"generic_dim", lim.generic_dim},
           {"base_dim", lim.at_base.dim()},
           {"exp_order", lim.exp_order},
           {"base_in_limit", lim.limit.padded(coords.size()).contains(lim.at_base.padded(coords.size()))}};
    if (compare) {
      Subspace prod = product_span(a_parts, b_parts, d, coords);
      Subspace l = lim.limit.padded(coords.size());
      prod = prod.padded(coords.size());
      e["product_dim"] = prod.dim();
      e["product_in_limit"] = l.contains(prod);
      e["limit_in_product"] = prod.contains(l);
      e["equal"] = l == prod;
      auto w = prod.witness_not_contained(l);
      if (!w) w = l.witness_not_contained(prod);
      if (w) e["witness"] = to_poly(*w, coords).to_string(congruence_namer(n));
    }
    return e;
  });
  Report r = start(job, {{"n", n}, {"C0", rationals(c0)}, {"chi", rationals(chi)}, {"deg", job.deg}, {"compare", job.compare}});
  Json arr = Json::array();
  for (auto& e : rows) {
    std::string line = "deg " + std::to_string(e["deg"].get<int>()) + ": limit dim " +
                       std::to_string(e["limit_dim"].get<std::size_t>()) + " (generic " +
                       std::to_string(e["generic_dim"].get<std::size_t>()) + ", at C0 " +
                       std::to_string(e["base_dim"].get<std::size_t>()) + ")";
    if (!e["base_in_limit"].get<bool>()) r.pass = false;
    if (compare) {
      const bool eq = e["equal"].get<bool>();
      if (!eq) r.pass = false;
      line += ", product dim " + std::to_string(e["product_dim"].get<std::size_t>()) + (eq ? ", equal" : ", DIFFERENT");
    }
    r.lines.push_back(line);
    arr.push_back(std::move(e));
  }
  r.doc["components"] = std::move(arr);
  finish(r);
  return r;
}

// ---- eval-gaudin ----

Report cmd_eval_gaudin(const Job& job) {
  LieAlgebra g = load_algebra(job);
  auto z = require_list(job.z, "--z");
  const int points = static_cast<int>(z.size());
  if (job.max_m < -1) throw BoundError("--max-m must be nonnegative");
  const int max_m = job.max_m >= 0 ? job.max_m : 2 * points - 1;
  PbwAlgebra cur = current_algebra(g, max_m + 1);
  PbwAlgebra target = tensor_power(g, points);
  std::vector<NCPoly> images;
  for (int m = 0; m <= max_m; ++m) images.push_back(gaudin_evaluation(g, target, quadratic_gaudin(g, cur, m), z));
  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (std::size_t a = 0; a < images.size(); ++a)
    for (std::size_t b = a + 1; b < images.size(); ++b) todo.emplace_back(a, b);
  auto results = parallel_map<PairResult>(todo.size(), [&](std::size_t i) {
    const auto& [a, b] = todo[i];
    NCPoly v = target.commutator(images[a], images[b]);
    return PairResult{"ev S_" + std::to_string(a), "ev S_" + std::to_string(b), v.is_zero() ? "0" : target.to_string(v)};
  });
  Report r = start(job, {{"algebra", g.name()}, {"z", rationals(z)}, {"max_m", max_m}});
  r.doc["pairs"] = pair_json(results, r.pass);
  pair_lines(r, results, "commutators of evaluated quadratic elements");
  WordCoordinates coords;
  Subspace span = span_of(images, coords);
  Json hs = Json::array();
  for (int i = 0; i < points; ++i) {
    NCPoly h;
    for (int j = 0; j < points; ++j) {
      if (j == i) continue;
      h += casimir_tensor(g, target, i, j) * (Rational(1) / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]));
    }
    Matrix row = to_rows({h}, coords);
    const bool in = span.padded(coords.size()).contains(row[0]);
    if (!in) r.pass = false;
    hs.push_back({{"index", i + 1}, {"in_span", in}});
    r.lines.push_back("H_" + std::to_string(i + 1) + (in ? " in the quadratic span" : " NOT in the quadratic span"));
  }
  r.doc["quadratic_span_dim"] = span.dim();
  r.doc["hamiltonians"] = std::move(hs);
  finish(r);
  return r;
}

}  // namespace

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

LieAlgebra load_algebra(const Job& job) {
  if (!job.config.empty()) return load_config_file(job.config);
  if (job.algebra.empty()) throw ParseError("give --algebra or --config");
  return preset(job.algebra);
}

int gl_size(const Job& job) {
  if (job.n > 0) return job.n;
  const std::string& a = job.algebra;
  if (a.size() >= 3 && a.rfind("gl", 0) == 0) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(a.substr(2), &used);
      if (used == a.size() - 2 && n >= 1 && n <= 6) return n;
    } catch (const std::exception&) {
    }
  }
  throw BoundError("this command needs --algebra glN with 1 <= N <= 6");
}

Report run(const Job& job) {
  if (job.command == "gens") return cmd_gens(job);
  if (job.command == "verify-bethe") return cmd_verify_bethe(job);
  if (job.command == "verify-gaudin") return cmd_verify_gaudin(job);
  if (job.command == "verify-soa") return cmd_verify_soa(job);
  if (job.command == "verify-talalaev") return cmd_verify_talalaev(job);
  if (job.command == "gr") return cmd_gr(job);
  if (job.command == "poincare") return cmd_poincare(job);
  if (job.command == "limit") return cmd_limit(job);
  if (job.command == "eval-gaudin") return cmd_eval_gaudin(job);
  throw ParseError("unknown command " + job.command);
}

}  // namespace bethe::cli
