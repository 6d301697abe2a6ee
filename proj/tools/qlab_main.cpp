#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qlab/lambda.hpp"
#include "qlab/multiplicity.hpp"
#include "qlab/pi.hpp"
#include "qlab/qformula.hpp"
#include "qlab/report.hpp"
#include "qlab/sphere.hpp"
#include "qlab/verify.hpp"

namespace {

using namespace qlab;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::pair<ExactScalar, ExactScalar> parse_dims(const std::string& text) {
  const size_t pos = text.find("..");
  if (pos == std::string::npos) {
    const ExactScalar v = ExactScalar::parse(text);
    return {v, v};
  }
  return {ExactScalar::parse(text.substr(0, pos)), ExactScalar::parse(text.substr(pos + 2))};
}

std::vector<ExactScalar> parse_coeff_list(const std::string& text) {
  std::vector<ExactScalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ExactScalar::parse(item));
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

struct Args {
  std::string scope = "all";
  int nmax = 6;
  std::string dims = "3..12";
  int jobs = 0;
  std::string format;
  std::string output;
  int N = 1;
  bool check = false;
  ExactScalar dim{7};
  std::string dim_text = "7";
  std::string series_op;
  std::string coeffs;
  int order = -1;
};

int do_verify(const Args& a) {
  VerifyOptions opt;
  opt.nmax = a.nmax;
  std::tie(opt.dim_lo, opt.dim_hi) = parse_dims(a.dims);
  opt.jobs = a.jobs;
  if (const char* env = std::getenv("QLAB_GOLDEN_DIR")) opt.golden_dir = env;

  const VerificationReport report = run_suite(a.scope, opt);
  const std::string json = report.to_json(current_timestamp_utc()).dump(2) + "\n";
  if (!a.output.empty()) write_output(json, a.output);
  if (a.format == "json")
    std::cout << json;
  else
    std::cout << report.human_summary();
  return report.all_passed() ? 0 : 1;
}

int do_derive_q(const Args& a) {
  const EmitFormat fmt = parse_emit_format(a.format.empty() ? "latex" : a.format);
  std::string text = emit(derive_q_formula(a.N), fmt);
  if (fmt != EmitFormat::json) text += "\n";
  write_output(text, a.output);
  return 0;
}

int do_multiplicities(const Args& a) {
  const std::vector<Composition> comps = compositions(a.N);
  ExactScalar sum(0);
  for (const Composition& I : comps) sum += m1(I);

  std::string text;
  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["object"] = "multiplicities";
    j["N"] = a.N;
    j["rows"] = nlohmann::ordered_json::array();
    for (const Composition& I : comps)
      j["rows"].push_back({{"composition", I.parts()}, {"m", m1(I).str()}});
    j["sum"] = sum.str();
    text = j.dump(2) + "\n";
  } else {
    text = "composition,multiplicity\n";
    for (const Composition& I : comps) {
      std::string key;
      for (int i = 0; i < I.length(); ++i) key += (i ? "+" : "") + std::to_string(I.part(i));
      text += key + "," + m1(I).str() + "\n";
    }
    text += "sum," + sum.str() + "\n";
  }
  write_output(text, a.output);
  return 0;
}

int do_pi(const Args& a) {
  if (a.check) {
    std::string text;
    bool all_pass = true;
    for (const FactorizationIdentity& f : verify_factorizations(a.N)) {
      text += "j=" + std::to_string(f.j) + ": " + (f.pass ? "pass" : "FAIL " + f.detail) + "\n";
      all_pass = all_pass && f.pass;
    }
    write_output(text, a.output);
    return all_pass ? 0 : 1;
  }
  const PiPolynomial pi = pi_definition(a.N);
  const bool latex = a.format == "latex";
  const std::string text = "pi_" + std::to_string(2 * a.N) + " = " +
                           (latex ? pi.body.latex() : pi.body.str()) + "\n";
  write_output(text, a.output);
  return 0;
}

int do_sphere(const Args& a) {
  const ExactScalar n = ExactScalar::parse(a.dim_text);
  const SphereContext ctx(n);
  if (!ctx.order_allowed(a.N))
    throw std::invalid_argument("order 2N = " + std::to_string(2 * a.N) +
                                " exceeds the even integer dimension n = " + n.str());
  const UniPoly p = p_sphere(a.N);
  const ExactScalar p0 = p.eval(ctx.x0());
  const ExactScalar q = q_sphere(ctx, a.N);
  const ExactScalar w = w_sphere(ctx, a.N);
  const ExactScalar lam = lambda_sphere(ctx, a.N);

  std::string text;
  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["object"] = "sphere-values";
    j["n"] = n.str();
    j["N"] = a.N;
    j["eigenvalue_poly"] = p.str();
    j["eigenvalue_at_constant"] = p0.str();
    j["q"] = q.str();
    j["w"] = w.str();
    j["lambda"] = lam.str();
    text = j.dump(2) + "\n";
  } else {
    const std::string sub = std::to_string(2 * a.N);
    text += "p_" + sub + "(x) = " + p.str() + "\n";
    text += "p_" + sub + " at constants = " + p0.str() + "\n";
    text += "q_" + sub + " = " + q.str() + "\n";
    text += "w_" + sub + " = " + w.str() + "\n";
    text += "lambda_" + sub + " = " + lam.str() + "\n";
  }
  write_output(text, a.output);
  return 0;
}

int do_series(const Args& a) {
  std::vector<ExactScalar> coeffs = parse_coeff_list(a.coeffs);
  if (a.order >= 0) coeffs.resize(static_cast<size_t>(a.order) + 1, ExactScalar(0));
  const TruncSeries<ExactScalar> input(std::move(coeffs));
  TruncSeries<ExactScalar> result = a.series_op == "sqrt" ? series_sqrt(input) : input.square();

  std::string text;
  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["object"] = "series";
    j["op"] = a.series_op;
    j["coeffs"] = nlohmann::ordered_json::array();
    for (int k = 0; k <= result.order(); ++k) j["coeffs"].push_back(result.coeff(k).str());
    text = j.dump(2) + "\n";
  } else {
    for (int k = 0; k <= result.order(); ++k)
      text += (k ? "," : "") + result.coeff(k).str();
    text += "\n";
  }
  write_output(text, a.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification and derivation engine for recursive curvature formulas"};
  app.set_version_flag("--version", qlab::kToolVersion);
  app.require_subcommand(1);
  Args a;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites and write a report");
  verify->add_option("scope", a.scope, "all|combinatorics|pi|sphere|series|q")
      ->check(CLI::IsMember({"all", "combinatorics", "pi", "sphere", "series", "q"}));
  verify->add_option("--nmax", a.nmax, "largest half-order to sweep")->check(CLI::Range(1, 30));
  verify->add_option("--dims", a.dims, "dimension range A..B (rationals >= 3) or a single value");
  verify->add_option("--jobs", a.jobs, "parallel worker count, 0 = all cores")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--format", a.format, "human (default) or json on stdout")
      ->check(CLI::IsMember({"human", "json"}));
  verify->add_option("--output", a.output, "write the JSON report to this path");

  CLI::App* derive = app.add_subcommand("derive-q", "derive the order-N recursion formula");
  derive->add_option("N", a.N, "half-order")->required()->check(CLI::Range(1, 30));
  derive->add_option("--format", a.format, "latex (default), plain, or json")
      ->check(CLI::IsMember({"latex", "plain", "json"}));
  derive->add_option("--output", a.output, "write to this path instead of stdout");

  CLI::App* mult = app.add_subcommand("multiplicities", "tabulate composition multiplicities");
  mult->add_option("N", a.N, "composition size")->required()->check(CLI::Range(1, 30));
  mult->add_option("--format", a.format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  mult->add_option("--output", a.output, "write to this path instead of stdout");

  CLI::App* pi = app.add_subcommand("pi", "print or check the order-N operator polynomial");
  pi->add_option("N", a.N, "half-order")->required()->check(CLI::Range(1, 30));
  pi->add_flag("--check", a.check, "check the factorization identities instead of printing");
  pi->add_option("--format", a.format, "plain (default) or latex")
      ->check(CLI::IsMember({"plain", "latex"}));
  pi->add_option("--output", a.output, "write to this path instead of stdout");

  CLI::App* sphere = app.add_subcommand("sphere", "print exact sphere-model values");
  sphere->add_option("N", a.N, "half-order")->required()->check(CLI::Range(1, 30));
  sphere->add_option("--dim", a.dim_text, "dimension n > 2, rational allowed (default 7)");
  sphere->add_option("--format", a.format, "plain (default) or json")
      ->check(CLI::IsMember({"plain", "json"}));
  sphere->add_option("--output", a.output, "write to this path instead of stdout");

  CLI::App* series = app.add_subcommand("series", "exact truncated power series utilities");
  series->add_option("op", a.series_op, "sqrt or square")
      ->required()
      ->check(CLI::IsMember({"sqrt", "square"}));
  series->add_option("--coeffs", a.coeffs, "comma-separated rational coefficients, constant first")
      ->required();
  series->add_option("--order", a.order, "pad or truncate to this order")
      ->check(CLI::NonNegativeNumber);
  series->add_option("--format", a.format, "plain (default) or json")
      ->check(CLI::IsMember({"plain", "json"}));
  series->add_option("--output", a.output, "write to this path instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return do_verify(a);
    if (derive->parsed()) return do_derive_q(a);
    if (mult->parsed()) return do_multiplicities(a);
    if (pi->parsed()) return do_pi(a);
    if (sphere->parsed()) return do_sphere(a);
    if (series->parsed()) return do_series(a);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
