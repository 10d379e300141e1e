#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "nilzeta/error.hpp"
#include "nilzeta_cli/commands.hpp"
#include "nilzeta_cli/expression.hpp"
#include "nilzeta_cli/verify.hpp"

using namespace nilzeta;
using nilzeta::cli::parse_expression;

TEST(Parse, Examples) {
  const AlgebraPtr h = fixture::heisenberg();
  const UEAElement u = parse_expression("X1^2 * Y[1] + 3i * Y[0]", h);
  PBWMonomial m(h->num_variables());
  m[0] = 2;
  m[2] = 1;
  const UEAElement expected = UEAElement::monomial(h, m) + GaussianRational(Rational(0), Rational(3)) * UEAElement::y(h, {0});
  EXPECT_EQ(u, expected);
  EXPECT_EQ(parse_expression("X1 * X1", h), parse_expression("X1^2", h));
  EXPECT_EQ(parse_expression(" - 1/2 * Y[1]*X1 ", h),
            GaussianRational(Rational(-1, 2)) * normal_product(UEAElement::y(h, {1}), UEAElement::x(h, 1)));
  EXPECT_EQ(parse_expression("(1/2-3i)", h), UEAElement(h, GaussianRational(Rational(1, 2), Rational(-3))));
  EXPECT_EQ(parse_expression("i*X1 - i*X1", h), UEAElement(h));
}

TEST(Parse, Errors) {
  const AlgebraPtr h = fixture::heisenberg();
  auto error_at = [&](const std::string& text) -> std::optional<std::size_t> {
    try {
      parse_expression(text, h);
    } catch (const ParseError& e) {
      EXPECT_FALSE(e.expected().empty());
      return e.position();
    }
    return std::nullopt;
  };
  EXPECT_EQ(error_at("Y[2]"), 0u);
  EXPECT_EQ(error_at("X1 + "), 5u);
  EXPECT_EQ(error_at(""), 0u);
  EXPECT_EQ(error_at("X2"), 0u);
  EXPECT_EQ(error_at("Y[1,0]"), 0u);
  EXPECT_EQ(error_at("X1 ** X1"), 4u);
  EXPECT_EQ(error_at("1/0"), 2u);
  EXPECT_EQ(error_at("X1 Y[1]"), 3u);
  EXPECT_TRUE(error_at("Z").has_value());
  EXPECT_TRUE(error_at("Y[1").has_value());
}

TEST(Parse, PrintRoundTrip) {
  std::mt19937 rng(51);
  for (const auto& [name, alg] : fixture::all_specs())
    for (int t = 0; t < 40; ++t) {
      UEAElement u = fixture::random_element(alg, 3, rng);
      u *= GaussianRational(Rational(1, 1 + t % 4));
      const std::string text = cli::print(u);
      ASSERT_EQ(parse_expression(text, alg), u) << name << ": " << text;
    }
}

TEST(ComplexList, Parses) {
  const auto zs = cli::parse_complex_list("-2, -3.5,-2+1i, -2-0.5i, 1e-1-2e-1i, i");
  ASSERT_EQ(zs.size(), 6u);
  EXPECT_EQ(zs[0], std::complex<double>(-2, 0));
  EXPECT_EQ(zs[1], std::complex<double>(-3.5, 0));
  EXPECT_EQ(zs[2], std::complex<double>(-2, 1));
  EXPECT_EQ(zs[3], std::complex<double>(-2, -0.5));
  EXPECT_EQ(zs[4], std::complex<double>(0.1, -0.2));
  EXPECT_EQ(zs[5], std::complex<double>(0, 1));
  EXPECT_THROW(cli::parse_complex_list("-2,,3"), ParseError);
  EXPECT_THROW(cli::parse_complex_list("abc"), ParseError);
}

TEST(Verify, HeisenbergPassesAtDegreeFour) {
  const cli::VerifyReport rep = cli::run_verify(fixture::heisenberg(), 4);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.counterexample.value_or("");
  EXPECT_TRUE(rep.passed());
  EXPECT_GE(rep.checks.size(), 25u);
}

TEST(Verify, SplitSpecPassesAtDegreeThree) {
  const cli::VerifyReport rep = cli::run_verify(fixture::make(2, {1, 2}, {{1}, {2}}), 3);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.counterexample.value_or("");
}

TEST(Verify, CubicReportsBalancedPairCounterexample) {
  const cli::VerifyReport rep = cli::run_verify(fixture::cubic(), 3);
  const cli::CheckResult* c = rep.find("paired_partial_y_leading_terms");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  ASSERT_TRUE(c->counterexample.has_value());
  EXPECT_NE(c->counterexample->find("Y[2]^2"), std::string::npos);
  for (const auto& other : rep.checks)
    if (other.name != c->name) {
      EXPECT_TRUE(other.passed) << other.name;
    }
  EXPECT_FALSE(rep.passed());
}

TEST(Verify, CapIsEnforced) { EXPECT_THROW(cli::run_verify(fixture::heisenberg(), 7, 6), LimitError); }

TEST(Commands, ReportsAreDeterministic) {
  const AlgebraPtr q = fixture::quartic();
  auto run = [&](auto f) {
    std::ostringstream os;
    f(os);
    return os.str();
  };
  const auto verify = [&](std::ostream& os) { cli::verify(q, 2, 6, os); };
  EXPECT_EQ(run(verify), run(verify));
  const auto poles = [&](std::ostream& os) { cli::poles(q, 1, Rational(5, 2), 3, cli::PoleFormat::Json, os); };
  EXPECT_EQ(run(poles), run(poles));
  const auto check = [&](std::ostream& os) { cli::algebra_check(q, os); };
  EXPECT_EQ(run(check), run(check));
}

TEST(Commands, ReduceJson) {
  std::ostringstream os;
  EXPECT_EQ(cli::reduce(fixture::heisenberg(), "X1^2 * Y[1] + 3i * Y[0]", 6, os), 0);
  const auto j = nlohmann::json::parse(os.str());
  EXPECT_EQ(j["canonical"], "X1^2*Y[1] - 3");
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["in_ideal"], false);
  std::ostringstream os2;
  cli::reduce(fixture::heisenberg(), "Y[0] - i", 6, os2);
  const auto j2 = nlohmann::json::parse(os2.str());
  EXPECT_EQ(j2["canonical"], "0");
  EXPECT_EQ(j2["in_ideal"], true);
  std::ostringstream sink;
  EXPECT_THROW(cli::reduce(fixture::heisenberg(), "X1^7", 6, sink), LimitError);
}

TEST(Commands, AlgebraCheckJson) {
  std::ostringstream os;
  EXPECT_EQ(cli::algebra_check(fixture::quartic(), os), 0);
  const auto j = nlohmann::json::parse(os.str());
  EXPECT_EQ(j["nilpotency_class"], 3);
  EXPECT_EQ(j["jacobi"]["passed"], true);
  EXPECT_EQ(j["isotropic_subalgebra"], nlohmann::json::array({"Y[0]", "Y[2]"}));
  EXPECT_EQ(j["isotropic_matches_expected"], true);
}

TEST(Commands, PolesJsonAndCsv) {
  std::ostringstream js;
  cli::poles(fixture::quartic(), 0, Rational(2), 2, cli::PoleFormat::Json, js);
  const auto j = nlohmann::json::parse(js.str());
  EXPECT_EQ(j["abscissa_candidate"], "-3/4");
  EXPECT_EQ(j["b_roots"], nlohmann::json::array({"-1/1", "-3/2"}));
  EXPECT_EQ(j["s0"], "2/1");
  std::ostringstream cs;
  cli::poles(fixture::heisenberg(), 0, Rational(2), 0, cli::PoleFormat::Csv, cs);
  EXPECT_EQ(cs.str(), "omega,omega_value,multiplicity,triples\n-1/1,-1,1,\"i=(1) r=(1) l=0\"\n");
}

TEST(Commands, SpectrumReport) {
  std::ostringstream os;
  cli::SpectrumOptions opts;
  opts.basis_size = 200;
  opts.zeta_at = {-2.0};
  EXPECT_EQ(cli::spectrum(fixture::heisenberg(), opts, os), 0);
  const std::string out = os.str();
  EXPECT_EQ(out.rfind("k,eigenvalue\n0,3\n1,5\n", 0), 0u);
  const auto j = nlohmann::json::parse(out.substr(out.find('{')));
  EXPECT_EQ(j["lattice_comparison"]["verdict"], "match");
  EXPECT_EQ(j["lattice_comparison"]["candidate"], "-1/1");
  EXPECT_NEAR(j["residue"].get<double>(), -0.5, 1e-3);
  EXPECT_NEAR(j["zeta"][0]["value"]["re"].get<double>(), 0.2337005501361697, 1e-6);
}
