#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "thuediag/cli/commands.hpp"

using namespace thuediag;
using thuediag::cli::exit_input;

namespace {

struct FormArgs {
  std::vector<std::string> binomial;
  std::string form_json;
  std::string form_file;
};

void add_form_options(CLI::App* cmd, FormArgs& fa) {
  cmd->add_option("--binomial", fa.binomial, "a b r for a x^r - b y^r")->expected(3);
  cmd->add_option("--form", fa.form_json, "form spec as inline JSON");
  cmd->add_option("--form-file", fa.form_file, "form spec JSON file");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return Json::parse(ss.str());
}

DiagForm form_of(const FormArgs& fa) {
  int given = !fa.binomial.empty() + !fa.form_json.empty() + !fa.form_file.empty();
  if (given != 1) throw ParameterError("give exactly one of --binomial, --form, --form-file");
  if (!fa.binomial.empty())
    return make_binomial(parse_integer(fa.binomial[0]), parse_integer(fa.binomial[1]), std::stoi(fa.binomial[2]));
  return form_from_json(fa.form_file.empty() ? Json::parse(fa.form_json) : read_json_file(fa.form_file));
}

void emit(const Json& report, const std::string& path) {
  std::string text = report.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts and audits for diagonalizable Thue inequalities"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("--help", "print help and exit");  // -h would clash with --h
  std::string json_out, bits_budget;
  app.add_option("--json", json_out, "write the report to this file instead of stdout");
  app.add_option("--bits-budget", bits_budget, "interval precision budget in bits (default 4096)");

  FormArgs fa;
  std::string h_text = "1";
  long box = 50;

  auto* analyze = app.add_subcommand("analyze", "invariants, box solutions, classes and gap audit of one form");
  add_form_options(analyze, fa);
  analyze->add_option("--h", h_text, "right-hand side bound");
  analyze->add_option("--box", box, "search |x|, y up to this bound");

  std::string spec_path, theorem, epsilon_text;
  int m = 3, l = 1;
  std::optional<uint64_t> seed;
  auto* verify = app.add_subcommand("verify", "run theorem checks over a sweep spec");
  verify->add_option("spec", spec_path, "sweep spec JSON")->required();
  verify->add_option("--theorem", theorem, "only this theorem id");
  verify->add_option("--m", m, "m for T1_4, T1_7, T1_8");
  verify->add_option("--l", l, "l for T2_1");
  verify->add_option("--epsilon", epsilon_text, "epsilon for C1_6, as p/q");
  verify->add_option("--seed", seed, "override the spec seed");

  std::string y_max_text;
  auto* enumerate = app.add_subcommand("enumerate", "list primitive solutions in a box, or by convergents for binomials");
  add_form_options(enumerate, fa);
  enumerate->add_option("--h", h_text, "right-hand side bound");
  enumerate->add_option("--box", box, "search |x|, y up to this bound");
  enumerate->add_option("--ymax", y_max_text, "positive-quadrant convergent search up to this y (binomials)");

  int n = 1, g = 0, r = 5, order = 8;
  auto* pade_cmd = app.add_subcommand("pade", "Pade pair coefficients and remainder head");
  pade_cmd->add_option("--n", n)->required();
  pade_cmd->add_option("--g", g)->required();
  pade_cmd->add_option("--r", r)->required();
  pade_cmd->add_option("--order", order);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (!bits_budget.empty()) {
      long b = std::stol(bits_budget);
      if (b < 64) throw ParameterError("--bits-budget must be at least 64");
      setenv("THUEDIAG_BITS_BUDGET", bits_budget.c_str(), 1);
    }
    Integer h = parse_integer(h_text);
    if (*analyze) {
      auto res = cli::cmd_analyze(form_of(fa), h, box);
      emit(res.report, json_out);
      return res.exit_code;
    }
    if (*verify) {
      Json spec = read_json_file(spec_path);
      if (!theorem.empty()) {
        Json t{{"id", theorem}, {"m", m}, {"l", l}};
        if (!epsilon_text.empty()) t["epsilon"] = epsilon_text;
        spec["theorems"] = Json::array({t});
      }
      auto res = cli::run_verify(cli::parse_sweep(spec, seed));
      emit(res.report, json_out);
      const Json& s = res.report["summary"];
      std::cerr << "verdicts " << s["verdicts"] << ", hypotheses held " << s["hypotheses_held"] << ", falsifications "
                << s["falsifications"] << ", audit checks " << s["audit_checks"] << ", audit falsifications "
                << s["audit_falsifications"] << "\n";
      return res.exit_code;
    }
    if (*enumerate) {
      if (!y_max_text.empty()) {
        if (fa.binomial.empty()) throw ParameterError("--ymax needs --binomial");
        auto res = cli::cmd_enumerate_convergents(parse_integer(fa.binomial[0]), parse_integer(fa.binomial[1]), std::stoi(fa.binomial[2]),
                                                  h, parse_integer(y_max_text));
        emit(res.report, json_out);
        return res.exit_code;
      }
      auto res = cli::cmd_enumerate_box(form_of(fa), h, box);
      emit(res.report, json_out);
      return res.exit_code;
    }
    auto res = cli::cmd_pade(n, g, r, order);
    emit(res.report, json_out);
    return res.exit_code;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const thuediag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "error: number out of range: " << e.what() << "\n";
  }
  return exit_input;
}
