#include "nilzeta_cli/verify.hpp"

#include <algorithm>
#include <functional>

#include "nilzeta/error.hpp"
#include "nilzeta/ideal.hpp"
#include "nilzeta/reduction.hpp"
#include "nilzeta/weyl.hpp"

namespace nilzeta::cli {

namespace {

// Collects cases of one identity and keeps the first failure.
class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }
  void pass() { ++r_.cases; }
  void fail(std::string witness) {
    ++r_.cases;
    if (r_.passed) r_.counterexample = std::move(witness);
    r_.passed = false;
  }
  void expect(bool ok, const std::function<std::string()>& witness) {
    if (ok)
      pass();
    else
      fail(witness());
  }
  CheckResult done() { return std::move(r_); }

 private:
  CheckResult r_;
};

std::string mono(const Algebra& alg, const PBWMonomial& m) { return monomial_to_string(alg, m); }

Rational frac(long num, const Integer& den) {
  Rational q{Integer(num), den};
  q.canonicalize();
  return q;
}

UEAElement scaled(const GaussianRational& c, const UEAElement& u) { return c * u; }

std::vector<MultiIndex> small_indices(const Algebra& alg, unsigned max_size) {
  std::vector<MultiIndex> out;
  for (const auto& b : alg.index_set())
    if (b.degree() <= max_size) out.push_back(b);
  return out;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  j["spec"] = nlohmann::json::parse(spec);
  j["max_degree"] = max_degree;
  j["passed"] = passed();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["cases"] = c.cases;
    if (c.counterexample) e["counterexample"] = *c.counterexample;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j;
}

VerifyReport run_verify(const AlgebraPtr& alg, unsigned max_degree, unsigned cap) {
  if (max_degree > cap)
    throw LimitError("max degree " + std::to_string(max_degree) + " exceeds the slice cap " + std::to_string(cap));
  const Algebra& a = *alg;
  const unsigned d = max_degree;
  VerifyReport rep;
  rep.spec = spec_to_json(a.spec());
  rep.max_degree = d;
  Ideal ideal(alg, cap);
  const DegreeSlice& slice = ideal.slice(d);
  const auto monomials = monomials_up_to(a, d);
  auto in_kernel = [](const UEAElement& u) { return is_member(u); };

  {
    Check c("jacobi_identity");
    const JacobiResult j = jacobi_check(alg);
    c.expect(j.ok, [&] { return j.description; });
    rep.checks.push_back(c.done());
  }
  {
    Check c("isotropic_subalgebra_basis");
    std::vector<std::size_t> expected{a.y_variable(MultiIndex(a.n()))};
    for (const auto& b : a.index_set())
      if (b.degree() >= 2) expected.push_back(a.y_variable(b));
    std::sort(expected.begin(), expected.end());
    const auto got = isotropic_subalgebra(alg);
    c.expect(got == expected, [&] {
      std::string s;
      for (auto v : got) s += (s.empty() ? "" : ", ") + a.variable_name(v);
      return "computed {" + s + "}";
    });
    rep.checks.push_back(c.done());
  }
  {
    Check c("product_generators_in_kernel");
    for (const auto& g : product_generators(alg))
      c.expect(in_kernel(g.element), [&] { return g.element.to_string(); });
    rep.checks.push_back(c.done());
  }
  {
    Check c("gamma_generators_in_kernel");
    for (const auto& g : gamma_generators(alg))
      c.expect(in_kernel(g.element), [&] { return g.element.to_string(); });
    rep.checks.push_back(c.done());
  }
  const auto betas = small_indices(a, 3);
  {
    Check c("gamma_operator_matches_closed_form");
    for (const auto& b : betas) {
      const UEAElement op = gamma_operator(GaussianRational::i() * UEAElement::y(alg, b));
      c.expect(op == gamma_closed_form(alg, b), [&] { return "beta = " + b.to_string(); });
    }
    rep.checks.push_back(c.done());
  }
  {
    // Gamma(i Y^b) = sum_{g <= b} (-1)^|g|/g! Y_*^g (Y^{b-g} - Y_*^{b-g}/(b-g)!) for b != 0.
    Check c("gamma_alternating_form");
    for (const auto& b : betas) {
      if (b.is_zero()) continue;
      UEAElement rhs(alg);
      for (const auto& g : b.lower_set()) {
        const MultiIndex rest = b - g;
        UEAElement inner = UEAElement::y(alg, rest) - scaled(frac(1, rest.factorial()), y_star(alg, rest));
        const GaussianRational coef(frac(g.degree() % 2 ? -1 : 1, g.factorial()));
        rhs += coef * normal_product(y_star(alg, g), inner);
      }
      c.expect(rhs == gamma_closed_form(alg, b), [&] { return "beta = " + b.to_string(); });
    }
    rep.checks.push_back(c.done());
  }
  {
    // Y^b - Y_*^b/b! = -(i/b!) Y_*^b (Y^0 - i) - sum_{0 != g <= b} Y_*^{b-g} Gamma(i Y^g)/(b-g)!
    Check c("binomial_inversion_identity");
    const MultiIndex zero(a.n());
    const UEAElement z0 = UEAElement::y(alg, zero) - UEAElement(alg, GaussianRational::i());
    for (const auto& b : betas) {
      const Rational inv = frac(1, b.factorial());
      const UEAElement lhs = UEAElement::y(alg, b) - scaled(inv, y_star(alg, b));
      UEAElement rhs = scaled(GaussianRational(Rational(0), -inv), normal_product(y_star(alg, b), z0));
      for (const auto& g : b.lower_set()) {
        if (g.is_zero()) continue;
        const MultiIndex rest = b - g;
        rhs -= scaled(frac(1, rest.factorial()), normal_product(y_star(alg, rest), gamma_closed_form(alg, g)));
      }
      c.expect(lhs == rhs && in_kernel(lhs), [&] { return "beta = " + b.to_string(); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("slice_partitions_monomials");
    c.expect(slice.t_set.size() + slice.o_set.size() == slice.monomials.size(), [] { return "size mismatch"; });
    const DegreeSlice& s0 = ideal.slice(0);
    c.expect(s0.t_set.empty(), [] { return "the unit is a leading term"; });
    for (std::size_t k = 0; k < slice.kernel_basis.size(); ++k) {
      const UEAElement& v = slice.kernel_basis[k];
      bool ok = in_kernel(v) && leading_term(v).first == slice.t_set[k];
      for (const auto& [m, coef] : v.terms())
        if (!(m == slice.t_set[k]) && slice.in_T(m)) ok = false;
      c.expect(ok, [&] { return "kernel vector for " + mono(a, slice.t_set[k]); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("zero_index_is_leading_term");
    if (d >= 1) {
      const PBWMonomial y0 = PBWMonomial::variable(a.num_variables(), a.y_variable(MultiIndex(a.n())));
      c.expect(slice.in_T(y0), [&] { return mono(a, y0); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("leading_terms_upward_closed");
    for (const auto& v : slice.t_set)
      for (const auto& w : slice.monomials)
        if (v.divides(w)) c.expect(slice.in_T(w), [&] { return mono(a, v) + " divides " + mono(a, w); });
    rep.checks.push_back(c.done());
  }
  {
    // Paired Y indices sharing a coordinate strictly inside (0, alpha_i).
    Check c("paired_partial_y_leading_terms");
    if (d >= 2) {
      const auto& ys = a.index_set();
      for (std::size_t u = 0; u < ys.size(); ++u)
        for (std::size_t v = u; v < ys.size(); ++v) {
          bool applies = false;
          for (std::size_t i = 0; i < a.n(); ++i)
            if (ys[u][i] >= 1 && ys[u][i] < a.alpha(i) && ys[v][i] >= 1 && ys[v][i] < a.alpha(i)) applies = true;
          if (!applies) continue;
          PBWMonomial m(a.num_variables());
          m[a.n() + u] += 1;
          m[a.n() + v] += 1;
          c.expect(slice.in_T(m), [&] { return mono(a, m) + " lies in O"; });
        }
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("generator_sets_agree");
    const unsigned dd = std::min(d, 3u);
    std::vector<UEAElement> prod, gam;
    for (const auto& g : product_generators(alg))
      if (!g.element.is_zero()) prod.push_back(g.element);
    for (const auto& g : gamma_generators(alg)) gam.push_back(g.element);
    // Both closures need room above dd to reach the slice.
    const GeneratedSpan sp(alg, prod, dd + 3), sg(alg, gam, dd + 3);
    const DegreeSlice& sl = ideal.slice(dd);
    c.expect(sp.leading_terms(dd) == sl.t_set, [] { return "product generators miss part of the slice"; });
    c.expect(sg.leading_terms(dd) == sl.t_set, [] { return "gamma generators miss part of the slice"; });
    rep.checks.push_back(c.done());
  }
  {
    Check c("canonical_form_sound");
    for (const auto& m : monomials) {
      const UEAElement u = UEAElement::monomial(alg, m);
      const UEAElement can = ideal.canonical_form(u);
      bool ok = in_kernel(u - can) && ideal.canonical_form(can) == can;
      for (const auto& [t, coef] : can.terms())
        if (slice.in_T(t)) ok = false;
      if (!can.is_zero() && MonomialLess()(m, leading_term(can).first)) ok = false;
      c.expect(ok, [&] { return mono(a, m); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check cx("x_exponent_congruence"), cy("y_weight_congruence");
    for (const auto& m : monomials) {
      const UEAElement t = UEAElement::monomial(alg, m);
      const MultiIndex w = y_weight(a, m);
      for (std::size_t k = 0; k < a.n(); ++k) {
        const UEAElement xk = UEAElement::x(alg, static_cast<unsigned>(k + 1)), yk = rescaled_y(alg, k);
        const UEAElement ex = normal_product(xk, commutator(t, yk)) - GaussianRational(long(m[k])) * t;
        cx.expect(in_kernel(ex), [&] { return mono(a, m) + ", k = " + std::to_string(k + 1); });
        const UEAElement ey = normal_product(commutator(xk, t), yk) - GaussianRational(long(w[k])) * t;
        cy.expect(in_kernel(ey), [&] { return mono(a, m) + ", k = " + std::to_string(k + 1); });
      }
    }
    rep.checks.push_back(cx.done());
    rep.checks.push_back(cy.done());
  }
  {
    Check c("eigen_choice_congruence");
    for (const auto& m : slice.o_set) {
      const FactorChoice ch = choose_factor(a, m);
      const UEAElement t = UEAElement::monomial(alg, m);
      const UEAElement e = g_ab(ch.a, ch.b, t) - GaussianRational(ch.g_shift(a, m.degree())) * t;
      c.expect(in_kernel(e), [&] { return mono(a, m) + " with " + ch.to_string(); });
    }
    rep.checks.push_back(c.done());
  }
  const auto choices = factor_choices(a);
  {
    Check c("h_minus_g_congruence");
    for (const auto& m : monomials) {
      const UEAElement t = UEAElement::monomial(alg, m);
      for (const auto& ch : choices) {
        GaussianRational norm;
        for (std::size_t k = 0; k < a.n(); ++k) norm += ch.a[k] + ch.b[k];
        const UEAElement e = h_ab(ch.a, ch.b, t) - g_ab(ch.a, ch.b, t) - norm * t;
        c.expect(in_kernel(e), [&] { return mono(a, m) + " with " + ch.to_string(); });
      }
    }
    rep.checks.push_back(c.done());
  }
  const unsigned sd = std::min(d, 4u);
  {
    Check cg("g_product_annihilates_o"), ch("h_product_annihilates_o");
    for (const auto& m : slice.o_set) {
      if (m.degree() > sd) continue;
      const UEAElement t = UEAElement::monomial(alg, m);
      cg.expect(in_kernel(g_s(alg, m.degree(), t)), [&] { return mono(a, m); });
      ch.expect(in_kernel(h_s(alg, m.degree(), t)), [&] { return mono(a, m); });
    }
    rep.checks.push_back(cg.done());
    rep.checks.push_back(ch.done());
  }
  {
    Check ch("h_product_lowers_degree"), ct("t_product_lowers_filtration"), cd("diagram_commutes");
    for (unsigned s = 0; s <= sd; ++s)
      for (const auto& m : monomials) {
        if (m.degree() > s) break;
        const UEAElement u = UEAElement::monomial(alg, m);
        const WeylOperator image = rho(h_s(alg, s, u));
        const WeylOperator t = t_s(alg, s, rho(u));
        const std::string where = mono(a, m) + ", s = " + std::to_string(s);
        cd.expect(t == image, [&] { return where; });
        const auto q = ideal.filtration_min_degree(image);
        ch.expect(q && *q <= static_cast<int>(s) - 1, [&] { return where; });
        const auto qt = ideal.filtration_min_degree(t);
        ct.expect(qt && *qt <= static_cast<int>(s) - 1, [&] { return where; });
      }
    rep.checks.push_back(ch.done());
    rep.checks.push_back(ct.done());
    rep.checks.push_back(cd.done());
  }
  {
    Check c("rho_is_multiplicative");
    const auto low = monomials_up_to(a, std::min(d, 2u));
    for (const auto& m1 : low)
      for (const auto& m2 : low) {
        const UEAElement u = UEAElement::monomial(alg, m1), v = UEAElement::monomial(alg, m2);
        c.expect(rho(normal_product(u, v)) == weyl_product(rho(u), rho(v)),
                 [&] { return mono(a, m1) + " * " + mono(a, m2); });
      }
    rep.checks.push_back(c.done());
  }
  {
    Check c("canonical_pairs");
    for (std::size_t k = 0; k < a.n(); ++k) {
      const WeylOperator p = rho(UEAElement::x(alg, static_cast<unsigned>(k + 1))), q = rho(rescaled_y(alg, k));
      c.expect(p == canonical_p(a.n(), k) && q == canonical_q(a.n(), k) &&
                   commutator(p, q) == WeylOperator(a.n(), GaussianRational(1)),
               [&] { return "k = " + std::to_string(k + 1); });
    }
    rep.checks.push_back(c.done());
  }
  const WeylOperator delta = delta1(alg);
  std::vector<WeylOperator> gens;
  for (std::size_t v = 0; v < a.num_variables(); ++v) gens.push_back(rho(UEAElement::variable(alg, v)));
  {
    Check c("laplacian_commutator_filtration");
    for (const auto& m : monomials) {
      if (m.degree() > 3) break;
      const WeylOperator br = commutator(delta, rho_monomial(a, m));
      const auto q = ideal.filtration_min_degree(br);
      c.expect(q && *q <= static_cast<int>(m.degree()) + 1, [&] { return mono(a, m); });
    }
    rep.checks.push_back(c.done());
  }
  {
    Check c("commutator_power_expansion");
    for (std::size_t v = 0; v < gens.size(); ++v)
      for (unsigned i = 1; i <= 4; ++i)
        c.expect(commutator_power_check(delta, gens[v], i).is_zero(),
                 [&] { return a.variable_name(v) + ", i = " + std::to_string(i); });
    rep.checks.push_back(c.done());
  }
  {
    Check c("taylor_expansion_exact");
    const TaylorFrame frame = weyl_frame(alg);
    std::vector<FactorList> lists;
    lists.push_back({{choices.front().a, choices.front().b}});
    lists.push_back({{choices.front().a, choices.front().b}, {choices.back().a, choices.back().b}});
    for (const auto& fl : lists)
      for (std::size_t v = 0; v < gens.size(); ++v)
        for (unsigned i = 0; i <= 2; ++i)
          c.expect(taylor_residual(frame, fl, gens[v], i).is_zero(), [&] {
            return a.variable_name(v) + ", " + std::to_string(fl.size()) + " factors, i = " + std::to_string(i);
          });
    rep.checks.push_back(c.done());
  }
  {
    Check c("lagrange_identity");
    const RationalPolynomial b = b_polynomial(a);
    for (unsigned q = 0; q <= 2; ++q)
      c.expect(lagrange_identity_check(b, 2, q, static_cast<unsigned>(b.degree()) + 2),
               [&] { return "q = " + std::to_string(q); });
    rep.checks.push_back(c.done());
  }
  return rep;
}

}  // namespace nilzeta::cli
