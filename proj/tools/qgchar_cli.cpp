// Command line interface: verify character identities, print characters,
// emit quasi-BGG complexes.  Exit codes: 0 success (including reported
// discrepancies), 1 failed verification, 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgchar/checks.hpp"

namespace {

using namespace qgchar;

struct CommonOpts {
  std::string type = "A";
  int rank = 1;
  long long ell = 3;
  std::vector<long long> lambda;
  int tmax = 10;
  long long depth = 12;
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--type", o.type, "Cartan type letter A..G")->capture_default_str();
  cmd->add_option("--rank", o.rank, "rank of the root system")->capture_default_str();
  cmd->add_option("--ell", o.ell, "quantum parameter (odd, coprime to the symmetrizers)")
      ->capture_default_str();
  cmd->add_option("--lambda", o.lambda,
                  "dominant weight in fundamental coordinates (ell is applied internally)")
      ->delimiter(',');
  cmd->add_option("--tmax", o.tmax, "t-adic window bound")->capture_default_str();
  cmd->add_option("--depth", o.depth, "weight-adic window depth (floor = -depth)")
      ->capture_default_str();
  cmd->add_option("--out", o.out, "write output to this file instead of stdout");
}

char parse_type(const CommonOpts& o) {
  if (o.type.size() != 1 || o.type[0] < 'A' || o.type[0] > 'G')
    throw std::invalid_argument("--type must be a single letter A..G");
  return o.type[0];
}

Weight parse_lambda(const CommonOpts& o) {
  if (o.lambda.empty()) return Weight(static_cast<std::size_t>(o.rank));
  if (static_cast<int>(o.lambda.size()) != o.rank)
    throw std::invalid_argument("--lambda needs exactly one coordinate per simple root");
  return Weight(o.lambda);
}

int parse_word(const WeylGroup& g, const std::string& word) {
  if (word == "e") return g.identity();
  if (word == "w0") return g.longest();
  int w = g.identity();
  for (char c : word) {
    if (c < '1' || c > '0' + g.rank())
      throw std::invalid_argument("--w must be 'e', 'w0', or digits 1..rank");
    w = g.right_multiply(w, c - '1');
  }
  return w;
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open output file " + out);
  f << text << '\n';
}

int run_verify(const CommonOpts& o, std::vector<std::string> names) {
  char type = parse_type(o);
  if (names.empty()) {
    names = {"feigin", "bgg-euler", "bgg-signs", "kostant", "tilde-factorization",
             "parabolic-boundaries", "chformula-compare"};
    if (o.rank == 1) names.insert(names.begin() + 1, "sl2");
  }
  std::vector<CheckResult> results;
  for (const std::string& name : names) {
    if (name == "feigin") {
      results.push_back(check_feigin(type, o.rank, o.ell));
    } else if (name == "sl2") {
      if (o.rank != 1)
        throw std::invalid_argument("the sl2 suite needs --rank 1");
      results.push_back(check_sl2(o.ell));
    } else if (name == "bgg-euler") {
      results.push_back(check_bgg_euler(type, o.rank, o.ell, parse_lambda(o)));
    } else if (name == "bgg-signs") {
      results.push_back(check_bgg_signs(type, o.rank, o.ell));
    } else if (name == "kostant") {
      results.push_back(check_kostant(type, o.rank, o.tmax));
    } else if (name == "tilde-factorization") {
      results.push_back(check_tilde_factorization(type, o.rank, o.ell, o.tmax));
    } else if (name == "parabolic-boundaries") {
      results.push_back(check_parabolic_boundaries(type, o.rank, o.ell, o.tmax, o.depth));
    } else if (name == "chformula-compare") {
      results.push_back(check_chformula_compare(type, o.rank, o.ell));
    } else {
      throw std::invalid_argument("unknown check '" + name + "'");
    }
  }
  for (const auto& r : results)
    std::cout << "[" << to_string(r.status) << "] " << r.name << ": " << r.detail << '\n';
  int code = checks_exit_code(results);
  std::cout << (code == 0 ? "OK" : "FAILED") << " (" << results.size() << " checks)\n";
  if (!o.out.empty()) {
    std::string config = o.type + std::to_string(o.rank) + " ell=" + std::to_string(o.ell);
    std::ofstream f(o.out);
    if (!f) throw std::runtime_error("cannot open output file " + o.out);
    f << checks_report_json(config, results) << '\n';
  }
  return code;
}

int run_char(const CommonOpts& o, const std::string& formula, const std::string& sign,
             std::vector<int> J, const std::string& word) {
  char type = parse_type(o);
  RootDatum datum = RootDatum::build(type, o.rank);
  FormulaContext ctx(datum, o.ell, o.tmax, Rat(-o.depth));
  Weight lambda = parse_lambda(o);
  std::optional<BigradedSeries> s;
  if (formula == "kostant") s = kostant_character(ctx);
  else if (formula == "ext-small") s = ext_small_character(ctx);
  else if (formula == "ext-borel") {
    if (sign != "+" && sign != "-")
      throw std::invalid_argument("--sign must be '+' or '-' for ext-borel");
    s = ext_borel_character(ctx, sign == "+" ? 1 : -1);
  } else if (formula == "ext-uminus") s = ext_uminus_character(ctx);
  else if (formula == "ext-tilde") s = ext_tilde_character(ctx);
  else if (formula == "semiinf-tilde") s = semiinf_tilde_character(ctx);
  else if (formula == "local-cohomology") s = local_cohomology_character(ctx);
  else if (formula == "parabolic") {
    for (int& j : J) {
      if (j < 1 || j > o.rank)
        throw std::invalid_argument("--J entries are 1-based simple root indices");
      --j;
    }
    s = parabolic_character(ctx, J);
  } else if (formula == "weyl-module") {
    s = weyl_module_character(ctx, o.ell * lambda);
  } else if (formula == "quasi-verma") {
    s = quasi_verma_character(ctx, parse_word(ctx.group(), word), o.ell * lambda);
  } else if (formula == "semiinf-weyl") {
    s = semiinf_weyl_character(ctx, lambda);
  } else if (formula == "semiinf-weyl-shifted") {
    s = semiinf_weyl_shifted_character(ctx, parse_word(ctx.group(), word), lambda);
  } else {
    throw std::invalid_argument("unknown formula '" + formula + "'");
  }
  write_output(o.out, canonical_json(*s));
  return 0;
}

int run_bgg(const CommonOpts& o, const std::string& emit) {
  char type = parse_type(o);
  RootDatum datum = RootDatum::build(type, o.rank);
  WeylGroup group = WeylGroup::enumerate(datum);
  Weight lambda = parse_lambda(o);
  Rat base = datum.height(group.act(group.longest(), o.ell * lambda));
  FormulaContext ctx(datum, o.ell, o.tmax, base - Rat(8));
  BGGComplex c = build_bgg_complex(ctx, lambda);
  if (emit == "dot") {
    write_output(o.out, emit_bgg_dot(ctx, c));
  } else if (emit == "json") {
    nlohmann::json j;
    j["lambda"] = c.lambda.coords;
    j["ell"] = c.ell;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : c.terms) {
      nlohmann::json e;
      e["w"] = t.w;
      std::string name = "e";
      if (!ctx.group().reduced_word(t.w).empty()) {
        name.clear();
        for (int i : ctx.group().reduced_word(t.w)) name += "s" + std::to_string(i + 1);
      }
      e["word"] = name;
      e["degree"] = t.degree;
      e["highest_weight"] = t.highest_weight.coords;
      terms.push_back(std::move(e));
    }
    j["terms"] = std::move(terms);
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& a : c.arrows)
      arrows.push_back({{"from", a.from}, {"to", a.to}, {"sign", a.sign}});
    j["arrows"] = std::move(arrows);
    write_output(o.out, j.dump(2));
  } else {
    throw std::invalid_argument("--emit must be 'dot' or 'json'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact characters for small quantum groups"};
  app.require_subcommand(1);

  CommonOpts vo, co, bo;
  std::vector<std::string> checks;
  std::string formula, sign = "-", word = "e", emit = "dot";
  std::vector<int> J;

  CLI::App* verify = app.add_subcommand("verify", "run character identity checks");
  add_common(verify, vo);
  verify->add_option("--checks", checks,
                     "subset of: feigin, sl2, bgg-euler, bgg-signs, kostant, "
                     "tilde-factorization, parabolic-boundaries, chformula-compare")
      ->delimiter(',');

  CLI::App* chr = app.add_subcommand("char", "print a character as canonical JSON");
  add_common(chr, co);
  chr->add_option("--formula", formula,
                  "kostant, ext-small, ext-borel, ext-uminus, ext-tilde, semiinf-tilde, "
                  "local-cohomology, parabolic, weyl-module, quasi-verma, semiinf-weyl, "
                  "semiinf-weyl-shifted")
      ->required();
  chr->add_option("--sign", sign, "Borel sign, '+' or '-'")->capture_default_str();
  chr->add_option("--J", J, "parabolic subset, 1-based simple root indices")->delimiter(',');
  chr->add_option("--w", word, "Weyl element: 'e', 'w0', or digits 1..rank")
      ->capture_default_str();

  CLI::App* bgg = app.add_subcommand("bgg", "emit the quasi-BGG complex");
  add_common(bgg, bo);
  bgg->add_option("--emit", emit, "'dot' or 'json'")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(vo, checks);
    if (chr->parsed()) return run_char(co, formula, sign, J, word);
    if (bgg->parsed()) return run_bgg(bo, emit);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
