#include <CLI11.hpp>
#include <iostream>

#include "nilzeta/error.hpp"
#include "nilzeta_cli/commands.hpp"

using namespace nilzeta;

int main(int argc, char** argv) {
  CLI::App app{"nilzeta: exact reduction sequences and spectral zeta checks for the nilpotent algebras g_{alpha,I}"};
  app.require_subcommand(1);
  unsigned cap = Ideal::kDefaultCap;
  app.add_option("--cap", cap, "Largest slice degree the ideal may build")->capture_default_str();

  std::string spec_path;
  auto add_spec = [&](CLI::App* sub) { sub->add_option("spec", spec_path, "Algebra spec JSON file")->required(); };

  auto* algebra = app.add_subcommand("algebra", "Structural checks of an algebra spec");
  algebra->require_subcommand(1);
  auto* check = algebra->add_subcommand("check", "Index sets, Jacobi identity, nilpotency class, isotropic subalgebra");
  add_spec(check);
  auto* check_alias = app.add_subcommand("algebra-check", "Same as 'algebra check'");
  add_spec(check_alias);

  std::string expr;
  auto* reduce = app.add_subcommand("reduce", "Canonical form modulo the kernel of rho");
  add_spec(reduce);
  reduce->add_option("--expr", expr, "Element, e.g. \"X1^2 * Y[1] + 3i * Y[0]\"")->required();

  unsigned max_degree = 3;
  auto* verify = app.add_subcommand("verify", "Run the exact identity suite and print a JSON report");
  add_spec(verify);
  verify->add_option("--max-degree", max_degree, "Largest monomial degree checked")->capture_default_str();

  unsigned q = 0;
  std::string s0_text = "2";
  long l_max = 4;
  std::string format = "json";
  auto* poles = app.add_subcommand("poles", "Candidate pole lattice of the spectral zeta function");
  add_spec(poles);
  poles->add_option("--q", q, "Filtration order of the operator X")->capture_default_str();
  poles->add_option("--s0", s0_text, "Schatten exponent s0 (rational, e.g. 2 or 5/2)")->capture_default_str();
  poles->add_option("--lmax", l_max, "Largest lattice shift l")->capture_default_str();
  poles->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  cli::SpectrumOptions sopts;
  std::string zeta_text, report;
  auto* spectrum = app.add_subcommand("spectrum", "Hermite-truncated eigenvalues, growth fit and zeta values");
  add_spec(spectrum);
  spectrum->add_option("--basis-size", sopts.basis_size, "Hermite functions per axis")->capture_default_str();
  spectrum->add_option("--zeta-at", zeta_text, "Comma separated z values, e.g. \"-2,-3+0.5i\"");
  spectrum->add_option("--report", report, "Write the JSON report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    const AlgebraPtr alg = cli::load_spec(spec_path);
    if (*check || *check_alias) return cli::algebra_check(alg, std::cout);
    if (*reduce) return cli::reduce(alg, expr, cap, std::cout);
    if (*verify) return cli::verify(alg, max_degree, cap, std::cout);
    if (*poles) {
      const Rational s0 = rational_from_string(s0_text);
      return cli::poles(alg, q, s0, l_max, format == "csv" ? cli::PoleFormat::Csv : cli::PoleFormat::Json, std::cout);
    }
    if (*spectrum) {
      if (!zeta_text.empty()) sopts.zeta_at = cli::parse_complex_list(zeta_text);
      if (!report.empty()) sopts.report_path = report;
      return cli::spectrum(alg, sopts, std::cout);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return cli::kExitBadInput;
  } catch (const SpecError& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return cli::kExitBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitBadInput;
  }
  return cli::kExitBadInput;
}
