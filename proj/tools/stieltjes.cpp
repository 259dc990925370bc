#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "stieltjes/pipeline.hpp"

using namespace stieltjes;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitIrregular = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitUnverified = 1;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

struct Options {
  std::string input;
  std::string basepoint;
  std::string interval;
  std::string format = "text";
  std::string test_functions;
  bool no_verify = false;
  std::string a = "0";
  std::string b = "1";
};

ProblemSpec load(const Options& opt) {
  ProblemSpec spec = parse_spec_text(read_input(opt.input));
  if (!opt.basepoint.empty()) spec.basepoint = parse_rational(opt.basepoint);
  if (!opt.interval.empty()) {
    const auto parts = split(opt.interval, ',');
    if (parts.size() != 2) throw ParseError("--interval expects a,b");
    spec.interval.emplace(parse_rational(parts[0]), parse_rational(parts[1]));
  }
  return spec;
}

std::vector<ExpPoly> test_functions(const Options& opt) {
  if (opt.test_functions.empty()) return default_test_functions();
  std::vector<ExpPoly> out;
  for (const auto& s : split(opt.test_functions, ',')) out.push_back(parse_exppoly(s));
  return out;
}

void print_report_text(const VerificationReport& report) {
  std::cout << "regular: " << (report.regular ? "yes" : "no") << "\n";
  for (const auto& r : report.residuals) {
    std::cout << "f = " << r.f.to_string() << ": T(Gf) - f = " << r.equation.to_string() << "; conditions =";
    for (const auto& c : r.conditions) std::cout << " " << c.to_string();
    std::cout << "; kernel " << (r.kernel_agrees ? "agrees" : "disagrees") << "\n";
  }
  std::cout << "branches: " << report.branch_count << ", dirac terms: " << report.dirac_count
            << ", diagonal terms: " << report.diagonal_count << "\n";
  for (const auto& s : report.distributional_summary) std::cout << "  " << s << "\n";
  std::cout << "ok: " << (report.ok() ? "yes" : "no") << "\n";
}

int run_solve(const Options& opt) {
  const auto spec = load(opt);
  const auto result = solve(spec, test_functions(opt), !opt.no_verify);
  if (opt.format == "json") {
    std::cout << to_json(result).dump(2) << "\n";
  } else if (opt.format == "latex") {
    std::cout << render_latex(result);
  } else {
    std::cout << render_text(result);
  }
  return 0;
}

int run_verify(const Options& opt) {
  const auto report = verify(load(opt), test_functions(opt));
  if (opt.format == "json") {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    print_report_text(report);
  }
  return report.ok() ? 0 : kExitUnverified;
}

int run_kernel(const Options& opt) {
  const auto report = kernel(load(opt), parse_rational(opt.a), parse_rational(opt.b));
  if (opt.format == "json") {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << report.relations.extended.to_string();
    for (const auto& eq : report.equations) std::cout << eq << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green's operators and Green's functions for Stieltjes boundary problems"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "problem JSON file (default: stdin)");
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "latex", "json"}));
  };
  auto add_solver = [&](CLI::App* cmd) {
    cmd->add_option("--basepoint", opt.basepoint, "basepoint of the fundamental right inverse");
    cmd->add_option("--interval", opt.interval, "explicit interval a,b");
    cmd->add_option("--test-functions", opt.test_functions, "comma-separated test functions");
  };

  auto* solve_cmd = app.add_subcommand("solve", "compute the Green's operator and Green's function");
  add_common(solve_cmd);
  add_solver(solve_cmd);
  solve_cmd->add_flag("--no-verify", opt.no_verify, "print the result even if verification fails");

  auto* verify_cmd = app.add_subcommand("verify", "check the defining properties of the Green's operator");
  add_common(verify_cmd);
  add_solver(verify_cmd);

  auto* kernel_cmd = app.add_subcommand("kernel", "relations from the extended evaluation matrix");
  add_common(kernel_cmd);
  kernel_cmd->add_option("--a", opt.a, "left point");
  kernel_cmd->add_option("--b", opt.b, "right point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(opt);
    if (verify_cmd->parsed()) return run_verify(opt);
    return run_kernel(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IrregularProblem& e) {
    std::cerr << "error: " << e.what() << "\nevaluation matrix:\n" << e.matrix().to_string();
    return kExitIrregular;
  } catch (const UnsupportedOperator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << " (use --no-verify to print anyway)\n";
    return kExitUnverified;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
