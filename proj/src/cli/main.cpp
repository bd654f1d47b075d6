#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bethe/errors.hpp"
#include "commands.hpp"

using bethe::cli::Exit;

namespace {

int emit(const bethe::cli::Report& r, bool json, const std::string& output) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "error: cannot write " << output << "\n";
      return Exit::kParse;
    }
    out = &file;
  }
  if (json) {
    *out << r.doc.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) *out << l << "\n";
    *out << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return r.pass ? Exit::kOk : Exit::kCertificateFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutative subalgebras of Yangians and current algebras: generators and exact certificates"};
  app.require_subcommand(1);
  bethe::cli::Job job;
  bool json = false;
  std::string output;
  app.add_flag("--json", json, "Emit the JSON report");
  app.add_option("-o,--output", output, "Write the report to a file");

  auto algebra_opts = [&](CLI::App* s) {
    s->fallthrough();
    s->add_option("--algebra", job.algebra, "Preset: sl2, sl3, gl1..gl4");
    s->add_option("--config", job.config, "Lie algebra config file (JSON)");
  };

  auto* gens = app.add_subcommand("gens", "Dump a generator family");
  algebra_opts(gens);
  gens->add_option("--family", job.family, "gaudin, soa, classical, bethe, talalaev")->required();
  gens->add_option("--C", job.c, "Diagonal torus element, e.g. 1,2");
  gens->add_option("--chi", job.chi, "Cartan direction, e.g. 1,2,-3");
  gens->add_option("--kmax", job.kmax, "Largest power of D");
  gens->add_option("--max-deg", job.max_deg, "Largest superscript");
  gens->add_option("--R", job.truncation, "Current algebra truncation t^R");
  gens->add_option("--max-z", job.max_z, "Largest power of 1/z");

  auto* vb = app.add_subcommand("verify-bethe", "Commutativity of the quantum Bethe coefficients");
  algebra_opts(vb);
  vb->add_option("--C", job.c, "Diagonal torus element")->required();
  vb->add_option("--max-deg", job.max_deg, "Pairs with s + s' <= max-deg");
  vb->add_flag("--all-pairs", job.all_pairs, "Check every pair with s, s' <= max-deg");

  auto* vg = app.add_subcommand("verify-gaudin", "Both brackets on D^k Phi_i");
  algebra_opts(vg);
  vg->add_option("--kmax", job.kmax, "Largest power of D");
  vg->add_option("--R", job.loop_truncation, "Loop truncation t^R (default 2 kmax + 2)");

  auto* vs = app.add_subcommand("verify-soa", "Shift of argument generators: brackets and Jacobian rank");
  algebra_opts(vs);
  vs->add_option("--chi", job.chi, "Regular Cartan direction")->required();
  vs->add_option("--seed", job.seed, "Seed for the Jacobian point");

  auto* vt = app.add_subcommand("verify-talalaev", "Commutativity of cdet coefficients");
  algebra_opts(vt);
  vt->add_option("--R", job.truncation, "Current algebra truncation t^R");
  vt->add_option("--max-z", job.max_z, "Largest power of 1/z");
  vt->add_flag("--compare-bethe", job.compare_bethe, "Compare with gr2 of the Bethe subalgebra at C = E");

  auto* gr = app.add_subcommand("gr", "gr2 of the classical Bethe family against A_z(C)");
  algebra_opts(gr);
  gr->add_option("--C", job.c, "Diagonal torus element")->required();
  gr->add_option("--max-deg", job.max_deg, "Largest deg1 component");

  auto* pc = app.add_subcommand("poincare", "Dimensions of the graded components");
  algebra_opts(pc);
  pc->add_option("--family", job.family, "bethe, gaudin, soa")->required();
  pc->add_option("--C", job.c, "Diagonal torus element");
  pc->add_option("--chi", job.chi, "Cartan direction");
  pc->add_option("--cutoff", job.cutoff, "Largest degree");

  auto* lm = app.add_subcommand("limit", "Limit of the classical Bethe family along C0 exp(eps chi)");
  algebra_opts(lm);
  lm->add_option("--C0", job.c0, "Base torus element")->required();
  lm->add_option("--chi", job.chi, "Direction")->required();
  lm->add_option("--deg", job.deg, "Largest component degree");
  lm->add_option("--compare", job.compare, "product or none");
  lm->add_option("--max-order", job.max_order, "Cap on the exp truncation order");

  auto* ev = app.add_subcommand("eval-gaudin", "Quadratic Gaudin elements at points z");
  algebra_opts(ev);
  ev->add_option("--z", job.z, "Distinct points, e.g. 0,1,4")->required();
  ev->add_option("--max-m", job.max_m, "Largest S_m (default 2 * points - 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Exit::kParse;
  }
  job.command = app.get_subcommands().front()->get_name();

  try {
    return emit(bethe::cli::run(job), json, output);
  } catch (const bethe::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Exit::kParse;
  } catch (const bethe::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return Exit::kParse;
  } catch (const bethe::TruncationOverflow& e) {
    std::cerr << "truncation overflow: " << e.what() << "\n";
    return Exit::kTruncation;
  } catch (const bethe::BoundError& e) {
    std::cerr << "bound violation: " << e.what() << "\n";
    return Exit::kBound;
  } catch (const bethe::DimensionError& e) {
    std::cerr << "bound violation: " << e.what() << "\n";
    return Exit::kBound;
  } catch (const bethe::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return Exit::kBound;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Exit::kInternal;
  }
}
