#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "surfcalc/lefschetz/fixed_locus.hpp"
#include "surfcalc/quotient/hj_chain.hpp"
#include "surfcalc/replay/replay.hpp"
#include "surfcalc/search/class_search.hpp"

using namespace surfcalc;
using replay::json;

namespace {

struct Rendered {
  std::string text;
  json doc;
  bool ok = true;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read " + path);
  }
  return json::parse(in);
}

Rendered search_command(long kd, long d2, const std::string& lattice_path) {
  LatticePtr lattice;
  if (lattice_path.empty()) {
    replay::Workspace ws(replay::builtin_scenario("cartwright-steger"));
    lattice = ws.lattice("NS(X)");
  } else {
    lattice = replay::lattice_from_json(read_json(lattice_path));
  }
  const auto found = search::enumerate_classes({lattice, kd, d2});
  Rendered r;
  r.doc["lattice"] = lattice->name();
  r.doc["kd"] = kd;
  r.doc["d2"] = d2;
  r.doc["classes"] = json::array();
  r.text = "K.D = " + std::to_string(kd) + ", D^2 = " + std::to_string(d2) + " on " + lattice->name() + ": " +
           std::to_string(found.size()) + " classes\n";
  for (const auto& s : found) {
    std::vector<std::string> coords;
    for (const auto& c : s.divisor.coords()) {
      coords.push_back(c.to_string());
    }
    r.doc["classes"].push_back({{"class", s.divisor.to_string()},
                                {"coords", coords},
                                {"pairings", {to_string(s.a), to_string(s.b), to_string(s.c)}}});
    r.text += "  " + s.divisor.to_string() + "  pairings " + to_string(RationalVector{s.a, s.b, s.c}) + "\n";
  }
  return r;
}

Rendered quotient_command(const std::string& path) {
  const auto setup = replay::setup_from_json(read_json(path));
  const auto q = quotient::build_quotient_lattice(setup);
  Rendered r;
  r.doc = replay::lattice_to_json(*q.lattice);
  const auto& basis = q.lattice->basis();
  std::size_t w = 4;
  for (const auto& b : basis) {
    w = std::max(w, b.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      w = std::max(w, q.lattice->pairing(b, basis[j]).to_string().size() + 1);
    }
  }
  auto cell = [w](const std::string& s) { return std::string(w - s.size(), ' ') + s; };
  r.text = cell("");
  for (const auto& b : basis) {
    r.text += cell(b);
  }
  r.text += "\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    r.text += cell(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      r.text += cell(q.lattice->pairing(i, j).to_string());
    }
    r.text += "\n";
  }
  return r;
}

/// {"trace", "sign", "q_terms"?, "hypothesis"?: {"m", "curves": [{"genus",
/// "self_intersection"}]}}
Rendered lefschetz_command(const std::string& path) {
  const json j = read_json(path);
  const long trace = replay::long_from_json(replay::require(j, "trace", path));
  const int sign = static_cast<int>(replay::long_from_json(replay::require(j, "sign", path)));
  const long q_terms = j.contains("q_terms") ? replay::long_from_json(j.at("q_terms")) : 0;
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
  const auto budget = lefschetz::fixed_curve_budget(trace, sign, q_terms);
  Rendered r;
  r.doc["e_fixed"] = budget.e_fixed;
  r.doc["sum_a2"] = budget.sum_a2.to_string();
  r.doc["ka_offset"] = budget.ka_offset.to_string();
  r.text = "e(fixed locus) = " + std::to_string(budget.e_fixed) + "\n" + budget.to_string() + "\n";
  if (j.contains("hypothesis")) {
    const auto& h = j.at("hypothesis");
    lefschetz::FixedLocusHypothesis hyp;
    hyp.m = replay::long_from_json(replay::require(h, "m", "hypothesis"));
    hyp.h20_sign = sign;
    for (const auto& c : h.value("curves", json::array())) {
      hyp.curves.push_back({replay::long_from_json(replay::require(c, "genus", "curve")),
                            replay::rational_from_json(replay::require(c, "self_intersection", "curve"))});
    }
    hyp.validate();
    const long e = hyp.euler_number();
    const Rational residual = lefschetz::holomorphic_constraint(hyp);
    r.ok = e == budget.e_fixed && residual.is_zero();
    r.doc["hypothesis"] = {{"euler_number", e},
                           {"holomorphic_residual", residual.to_string()},
                           {"consistent", r.ok}};
    r.text += "hypothesis: e = " + std::to_string(e) + ", holomorphic residual " + residual.to_string() +
              (r.ok ? ", consistent\n" : ", inconsistent\n");
  }
  return r;
}

Rendered hj_command(long n, long a) {
  const auto chain = quotient::hj_chain(n, a);
  Rendered r;
  r.doc["n"] = n;
  r.doc["a"] = a;
  r.doc["self_intersections"] = chain.self_intersections;
  std::vector<std::string> parts;
  for (long c : chain.self_intersections) {
    parts.push_back(std::to_string(c));
  }
  r.text = "1/" + std::to_string(n) + "(1," + std::to_string(a) + "): [";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    r.text += (i ? ", " : "") + parts[i];
  }
  r.text += "]\n";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact intersection-theory workbench"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string scenario;
  auto* replay_cmd = app.add_subcommand("replay", "Run a scenario and print its report");
  replay_cmd->add_option("scenario", scenario, "Built-in scenario name or path")->required();

  long kd = 0;
  long d2 = 0;
  std::string lattice_path;
  auto* search_cmd = app.add_subcommand("search", "Enumerate classes with given K.D and D^2");
  search_cmd->add_option("--kd", kd, "K.D")->required();
  search_cmd->add_option("--d2", d2, "D^2")->required();
  search_cmd->add_option("--lattice", lattice_path, "Lattice JSON (default: NS(X) of the built-in scenario)");

  std::string setup_path;
  auto* quotient_cmd = app.add_subcommand("quotient", "Intersection table of a resolved cyclic quotient");
  quotient_cmd->add_option("setup", setup_path, "Quotient setup JSON")->required();

  std::string case_path;
  auto* lefschetz_cmd = app.add_subcommand("lefschetz", "Fixed-locus constraints for an involution");
  lefschetz_cmd->add_option("case", case_path, "Case JSON")->required();

  long n = 0;
  long a = 0;
  auto* hj_cmd = app.add_subcommand("hj", "Resolution chain of 1/n(1,a)");
  hj_cmd->add_option("n", n)->required();
  hj_cmd->add_option("a", a)->required();

  CLI11_PARSE(app, argc, argv);

  std::string output;
  int code = 0;
  try {
    if (replay_cmd->parsed()) {
      const auto report = replay::run_scenario(scenario);
      output = replay::emit_report(report, format);
      code = replay::exit_code(report);
    } else {
      Rendered r;
      if (search_cmd->parsed()) {
        r = search_command(kd, d2, lattice_path);
      } else if (quotient_cmd->parsed()) {
        r = quotient_command(setup_path);
      } else if (lefschetz_cmd->parsed()) {
        r = lefschetz_command(case_path);
      } else {
        r = hj_command(n, a);
      }
      output = format == "json" ? r.doc.dump(2) + "\n" : r.text;
      code = r.ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "surfcalc: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << output;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "surfcalc: cannot write " << out_path << "\n";
      return 1;
    }
    out << output;
  }
  return code;
}
