#include "nilzeta_cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nilzeta/error.hpp"
#include "nilzeta/reduction.hpp"
#include "nilzeta/spectral.hpp"
#include "nilzeta_cli/expression.hpp"
#include "nilzeta_cli/verify.hpp"

namespace nilzeta::cli {

namespace {

using nlohmann::json;

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Tolerance for comparing the fitted abscissa with the lattice candidate.
constexpr double kLatticeTolerance = 0.05;

}  // namespace

AlgebraPtr load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return Algebra::make(spec_from_json(ss.str()));
}

int algebra_check(const AlgebraPtr& alg, std::ostream& out) {
  const Algebra& a = *alg;
  json j;
  j["spec"] = json::parse(spec_to_json(a.spec()));
  j["p"] = a.p();
  j["dimension"] = a.num_variables();
  json idx = json::array();
  for (const auto& b : a.index_set()) idx.push_back(b.to_string());
  j["index_set"] = idx;
  json blocks = json::array();
  for (const auto& blk : a.block_sets()) {
    json bj = json::array();
    for (const auto& b : blk) bj.push_back(b.to_string());
    blocks.push_back(bj);
  }
  j["block_index_sets"] = blocks;
  j["nilpotency_class"] = nilpotency_class(alg);
  const JacobiResult jr = jacobi_check(alg);
  j["jacobi"] = {{"passed", jr.ok}};
  if (!jr.ok) j["jacobi"]["failure"] = jr.description;
  json iso = json::array();
  std::vector<std::size_t> expected{a.y_variable(MultiIndex(a.n()))};
  for (const auto& b : a.index_set())
    if (b.degree() >= 2) expected.push_back(a.y_variable(b));
  std::sort(expected.begin(), expected.end());
  const auto got = isotropic_subalgebra(alg);
  for (auto v : got) iso.push_back(a.variable_name(v));
  j["isotropic_subalgebra"] = iso;
  j["isotropic_matches_expected"] = got == expected;
  out << j.dump(2) << "\n";
  return jr.ok && got == expected ? 0 : kExitFailedCheck;
}

int reduce(const AlgebraPtr& alg, const std::string& expr, unsigned cap, std::ostream& out) {
  const UEAElement u = parse_expression(expr, alg);
  Ideal ideal(alg, cap);
  if (!u.is_zero() && degree(u) > cap)
    throw LimitError("element degree " + std::to_string(degree(u)) + " exceeds the slice cap " + std::to_string(cap));
  const UEAElement can = ideal.canonical_form(u);
  json j;
  j["canonical"] = print(can);
  j["in_ideal"] = is_member(u);
  j["degree"] = can.is_zero() ? -1 : static_cast<int>(degree(can));
  out << j.dump(2) << "\n";
  return 0;
}

int verify(const AlgebraPtr& alg, unsigned max_degree, unsigned cap, std::ostream& out) {
  const VerifyReport rep = run_verify(alg, max_degree, cap);
  out << rep.to_json().dump(2) << "\n";
  return rep.passed() ? 0 : kExitFailedCheck;
}

int poles(const AlgebraPtr& alg, unsigned q, const Rational& s0, long l_max, PoleFormat format, std::ostream& out) {
  const PoleLattice lat = pole_lattice(*alg, q, s0, l_max);
  auto triple_text = [](const PoleTriple& t) {
    std::string s = "i=(";
    for (std::size_t k = 0; k < t.i.size(); ++k) s += (k ? "," : "") + std::to_string(t.i[k]);
    s += ") r=(";
    for (std::size_t k = 0; k < t.r.size(); ++k) s += (k ? "," : "") + std::to_string(t.r[k]);
    return s + ") l=" + std::to_string(t.l);
  };
  if (format == PoleFormat::Csv) {
    out << "omega,omega_value,multiplicity,triples\n";
    for (const auto& e : lat.entries) {
      std::string ts;
      for (const auto& t : e.triples) ts += (ts.empty() ? "" : ";") + triple_text(t);
      out << rational_to_fraction(e.omega) << "," << shortest(e.omega.get_d()) << "," << e.multiplicity << ",\""
          << ts << "\"\n";
    }
    return 0;
  }
  json j;
  j["q"] = q;
  j["s0"] = rational_to_fraction(s0);
  j["l_max"] = l_max;
  j["b_polynomial"] = b_polynomial(*alg).to_string("z'");
  json roots = json::array();
  for (const auto& r : b_roots(*alg)) roots.push_back(rational_to_fraction(r));
  j["b_roots"] = roots;
  j["abscissa_candidate"] = rational_to_fraction(abscissa_candidate(*alg, q));
  json rows = json::array();
  for (const auto& e : lat.entries) {
    json tr = json::array();
    for (const auto& t : e.triples) tr.push_back({{"i", t.i}, {"r", t.r}, {"l", t.l}});
    rows.push_back({{"omega", rational_to_fraction(e.omega)}, {"multiplicity", e.multiplicity}, {"triples", tr}});
  }
  j["poles"] = rows;
  out << j.dump(2) << "\n";
  return 0;
}

int spectrum(const AlgebraPtr& alg, const SpectrumOptions& opts, std::ostream& out) {
  const SpectralEstimate est = eigenvalues(alg, opts.basis_size);
  json zetas = json::array();
  for (const auto z : opts.zeta_at) {
    const ZetaValue v = zeta_value(alg, std::nullopt, z, opts.basis_size);
    zetas.push_back({{"z", complex_json(z)},
                     {"partial", complex_json(v.partial)},
                     {"tail", complex_json(v.tail)},
                     {"value", complex_json(v.value)},
                     {"tail_bound", v.tail_bound},
                     {"terms", v.terms}});
  }

  out << "k,eigenvalue\n";
  for (std::size_t k = 0; k < est.eigenvalues.size(); ++k) out << k << "," << shortest(est.eigenvalues[k]) << "\n";

  json j;
  j["spec"] = json::parse(spec_to_json(alg->spec()));
  j["basis_size"] = est.basis_size;
  j["converged_count"] = est.eigenvalues.size();
  j["converged"] = est.converged;
  j["max_drift"] = est.max_drift;
  j["fit"] = {{"theta", est.theta},
              {"log_c", est.log_c},
              {"kappa", est.kappa},
              {"rms_log_residual", est.fit_residual},
              {"window_begin", est.fit_begin},
              {"window_end", est.eigenvalues.size()}};
  j["abscissa"] = est.abscissa;
  j["schatten_estimate"] = est.schatten;
  const Rational cand = abscissa_candidate(*alg, 0);
  json lat = {{"candidate", rational_to_fraction(cand)}, {"tolerance", kLatticeTolerance}};
  if (est.converged) {
    const AbscissaResidue ar = abscissa_and_residue(est);
    j["residue"] = ar.residue;
    const double diff = std::abs(ar.abscissa - cand.get_d());
    lat["difference"] = diff;
    lat["verdict"] = diff <= kLatticeTolerance ? "match" : "mismatch";
  } else {
    lat["verdict"] = "insufficient";
  }
  j["lattice_comparison"] = lat;
  j["zeta"] = zetas;

  if (opts.report_path) {
    std::ofstream f(*opts.report_path);
    if (!f) throw Error("cannot write report " + *opts.report_path);
    f << j.dump(2) << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return est.converged ? 0 : kExitFailedCheck;
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<std::complex<double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string s;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError(0, "a number", "empty entry in the z list");
    double re = 0, im = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (s.back() == 'i') {
      // split at the last sign that is not an exponent sign
      std::size_t cut = std::string::npos;
      for (std::size_t k = s.size() - 1; k-- > 0;)
        if ((s[k] == '+' || s[k] == '-') && k > 0 && s[k - 1] != 'e' && s[k - 1] != 'E') {
          cut = k;
          break;
        }
      std::string ims = cut == std::string::npos ? s.substr(0, s.size() - 1) : s.substr(cut, s.size() - 1 - cut);
      if (ims == "+" || ims.empty()) ims = "1";
      if (ims == "-") ims = "-1";
      if (ims.front() == '+') ims.erase(0, 1);
      auto r = std::from_chars(ims.data(), ims.data() + ims.size(), im);
      if (r.ec != std::errc() || r.ptr != ims.data() + ims.size()) throw ParseError(0, "a number", "bad imaginary part '" + item + "'");
      e = cut == std::string::npos ? b : s.data() + cut;
    }
    if (b != e) {
      auto r = std::from_chars(b, e, re);
      if (r.ec != std::errc() || r.ptr != e) throw ParseError(0, "a number", "bad value '" + item + "'");
    }
    out.emplace_back(re, im);
  }
  return out;
}

}  // namespace nilzeta::cli
