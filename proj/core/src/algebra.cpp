#include "nilzeta/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nilzeta/error.hpp"
#include "nilzeta/linear_algebra.hpp"

namespace nilzeta {

std::string AlgebraSpec::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " alpha=(";
  for (std::size_t k = 0; k < alpha.size(); ++k) os << (k ? "," : "") << alpha[k];
  os << ") I={";
  for (std::size_t j = 0; j < partition.size(); ++j) {
    os << (j ? "," : "") << "{";
    for (std::size_t k = 0; k < partition[j].size(); ++k) os << (k ? "," : "") << partition[j][k];
    os << "}";
  }
  os << "}";
  return os.str();
}

AlgebraSpec validate_spec(AlgebraSpec raw) {
  if (raw.n == 0) throw SpecError("n must be positive");
  if (raw.alpha.size() != raw.n)
    throw SpecError("alpha has " + std::to_string(raw.alpha.size()) + " entries, expected " +
                    std::to_string(raw.n));
  for (std::size_t k = 0; k < raw.n; ++k)
    if (raw.alpha[k] == 0) throw SpecError("alpha_" + std::to_string(k + 1) + " is zero");

  std::vector<bool> seen(raw.n + 1, false);
  for (auto& block : raw.partition) {
    if (block.empty()) throw SpecError("empty block in partition");
    std::sort(block.begin(), block.end());
    for (unsigned k : block) {
      if (k < 1 || k > raw.n) throw SpecError("partition index " + std::to_string(k) + " outside 1.." +
                                              std::to_string(raw.n));
      if (seen[k]) throw SpecError("partition index " + std::to_string(k) + " appears twice");
      seen[k] = true;
    }
  }
  for (unsigned k = 1; k <= raw.n; ++k)
    if (!seen[k]) throw SpecError("blocks do not cover index " + std::to_string(k));
  std::sort(raw.partition.begin(), raw.partition.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return raw;
}

AlgebraSpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed spec JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("spec must be a JSON object");
  for (const char* key : {"n", "alpha", "partition"})
    if (!j.contains(key)) throw SpecError(std::string("spec is missing \"") + key + "\"");
  AlgebraSpec raw;
  try {
    const long n = j.at("n").get<long>();
    if (n <= 0) throw SpecError("n must be positive");
    raw.n = static_cast<unsigned>(n);
    for (const auto& a : j.at("alpha")) {
      const long v = a.get<long>();
      if (v < 0) throw SpecError("alpha entries must be natural numbers");
      raw.alpha.push_back(static_cast<unsigned>(v));
    }
    for (const auto& block : j.at("partition")) {
      std::vector<unsigned> b;
      for (const auto& k : block) {
        const long v = k.get<long>();
        if (v <= 0) throw SpecError("partition indices are 1-based");
        b.push_back(static_cast<unsigned>(v));
      }
      raw.partition.push_back(std::move(b));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed spec field: ") + e.what());
  }
  return validate_spec(std::move(raw));
}

std::string spec_to_json(const AlgebraSpec& spec) {
  nlohmann::ordered_json j;
  j["n"] = spec.n;
  j["alpha"] = spec.alpha;
  j["partition"] = spec.partition;
  return j.dump();
}

IndexSets index_set(const AlgebraSpec& spec) {
  IndexSets out;
  std::set<MultiIndex> all;
  for (const auto& block : spec.partition) {
    MultiIndex top(spec.n);
    for (unsigned k : block) top[k - 1] = spec.alpha[k - 1];
    auto lower = top.lower_set();
    all.insert(lower.begin(), lower.end());
    out.blocks.push_back(std::move(lower));
  }
  out.all.assign(all.begin(), all.end());
  return out;
}

std::string BasisSymbol::to_string() const {
  if (kind == Kind::X) return "X" + std::to_string(k);
  std::string s = "Y[";
  for (std::size_t j = 0; j < beta.size(); ++j) s += (j ? "," : "") + std::to_string(beta[j]);
  return s + "]";
}

Algebra::Algebra(AlgebraSpec spec) : spec_(std::move(spec)), sets_(nilzeta::index_set(spec_)) {
  for (std::size_t j = 0; j < sets_.all.size(); ++j) ypos_[sets_.all[j]] = j;
  block_of_.assign(spec_.n, 0);
  for (std::size_t j = 0; j < spec_.partition.size(); ++j)
    for (unsigned k : spec_.partition[j]) block_of_[k - 1] = j;
  lower_.assign(spec_.n, std::vector<std::optional<std::size_t>>(sets_.all.size()));
  for (std::size_t k = 0; k < spec_.n; ++k)
    for (std::size_t j = 0; j < sets_.all.size(); ++j) {
      const MultiIndex& beta = sets_.all[j];
      if (beta[k] == 0) continue;
      MultiIndex b = beta;
      b[k] -= 1;
      lower_[k][j] = ypos_.at(b);
    }
}

std::shared_ptr<const Algebra> Algebra::make(const AlgebraSpec& spec) {
  return std::shared_ptr<const Algebra>(new Algebra(validate_spec(spec)));
}

std::vector<std::size_t> Algebra::block_coordinates(std::size_t j) const {
  std::vector<std::size_t> out;
  for (unsigned k : spec_.partition.at(j)) out.push_back(k - 1);
  return out;
}

std::optional<std::size_t> Algebra::y_position(const MultiIndex& beta) const {
  auto it = ypos_.find(beta);
  if (it == ypos_.end()) return std::nullopt;
  return it->second;
}

std::size_t Algebra::y_variable(const MultiIndex& beta) const {
  if (beta.size() != spec_.n)
    throw DomainError("Y index " + beta.to_string() + " has the wrong length");
  auto pos = y_position(beta);
  if (!pos) throw DomainError("Y index " + beta.to_string() + " is not in the index set");
  return spec_.n + *pos;
}

std::size_t Algebra::x_variable(unsigned k1) const {
  if (k1 < 1 || k1 > spec_.n) throw DomainError("X" + std::to_string(k1) + " is not in the basis");
  return k1 - 1;
}

std::size_t Algebra::variable(const BasisSymbol& s) const {
  return s.kind == BasisSymbol::Kind::X ? x_variable(s.k) : y_variable(s.beta);
}

BasisSymbol Algebra::symbol(std::size_t var) const {
  if (var >= num_variables()) throw DomainError("variable index out of range");
  if (is_x(var)) return BasisSymbol::x(static_cast<unsigned>(var + 1));
  return BasisSymbol::y(beta_of(var));
}

std::string Algebra::variable_name(std::size_t var) const { return symbol(var).to_string(); }

LieElement LieElement::basis(AlgebraPtr alg, std::size_t var, GaussianRational c) {
  LieElement e(std::move(alg));
  e.add(var, c);
  return e;
}

GaussianRational LieElement::coefficient(std::size_t var) const {
  auto it = terms_.find(var);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void LieElement::add(std::size_t var, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(var, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (alg_ && o.alg_ && !alg_->same_as(*o.alg_)) throw DomainError("elements of different algebras");
  for (const auto& [v, c] : o.terms_) add(v, c);
  return *this;
}

LieElement& LieElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [v, x] : terms_) x *= c;
  return *this;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [v, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + alg_->variable_name(v);
  }
  return s;
}

namespace {

// [var a, var b] from the defining relations.
LieElement bracket_vars(std::size_t a, std::size_t b, const AlgebraPtr& alg) {
  LieElement out(alg);
  const bool ax = alg->is_x(a), bx = alg->is_x(b);
  if (ax == bx) return out;
  if (ax) {
    if (auto low = alg->lowered(a, b - alg->n())) out.add(alg->n() + *low, 1);
  } else {
    if (auto low = alg->lowered(b, a - alg->n())) out.add(alg->n() + *low, -1);
  }
  return out;
}

}  // namespace

LieElement bracket(const BasisSymbol& a, const BasisSymbol& b, const AlgebraPtr& alg) {
  return bracket_vars(alg->variable(a), alg->variable(b), alg);
}

StructureConstants::StructureConstants(AlgebraPtr alg) : alg_(std::move(alg)) {
  const std::size_t d = alg_->num_variables();
  table_.assign(d, std::vector<LieElement>(d, LieElement(alg_)));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) table_[a][b] = bracket_vars(a, b, alg_);
}

LieElement StructureConstants::bracket(const LieElement& u, const LieElement& v) const {
  LieElement out(alg_);
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : v.terms()) out += (ca * cb) * table_[a][b];
  return out;
}

void StructureConstants::set_bracket(std::size_t a, std::size_t b, const LieElement& value) {
  table_.at(a).at(b) = value;
  table_.at(b).at(a) = GaussianRational(-1) * value;
}

JacobiResult jacobi_check(const StructureConstants& sc) {
  const auto& alg = sc.algebra();
  const std::size_t d = sc.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (!(sc.bracket(a, b) + GaussianRational(1) * sc.bracket(b, a)).is_zero()) {
        return {false, std::array<std::size_t, 3>{a, b, b},
                "antisymmetry fails for [" + alg->variable_name(a) + ", " + alg->variable_name(b) + "]"};
      }
    }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        auto e = [&](std::size_t v) { return LieElement::basis(alg, v); };
        LieElement sum = sc.bracket(e(a), sc.bracket(b, c));
        sum += sc.bracket(e(b), sc.bracket(c, a));
        sum += sc.bracket(e(c), sc.bracket(a, b));
        if (!sum.is_zero())
          return {false, std::array<std::size_t, 3>{a, b, c},
                  "Jacobi identity fails on (" + alg->variable_name(a) + ", " + alg->variable_name(b) +
                      ", " + alg->variable_name(c) + "): cyclic sum " + sum.to_string()};
      }
  return {true, std::nullopt, "ok"};
}

JacobiResult jacobi_check(const AlgebraPtr& alg) { return jacobi_check(StructureConstants(alg)); }

namespace {

std::vector<GaussianRational> dense(const LieElement& e, std::size_t d) {
  std::vector<GaussianRational> v(d);
  for (const auto& [k, c] : e.terms()) v[k] = c;
  return v;
}

}  // namespace

unsigned nilpotency_class(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  const auto& alg = sc.algebra();
  // Span of g^k kept as the rows of an RREF matrix.
  std::vector<LieElement> current;
  for (std::size_t v = 0; v < d; ++v) current.push_back(LieElement::basis(alg, v));
  unsigned cls = 0;
  while (!current.empty()) {
    if (cls > d + 1) throw LimitError("lower central series does not terminate");
    ExactMatrix m;
    for (std::size_t v = 0; v < d; ++v)
      for (const auto& u : current) {
        auto br = sc.bracket(LieElement::basis(alg, v), u);
        if (!br.is_zero()) m.append_row(dense(br, d));
      }
    std::vector<LieElement> next;
    if (m.rows() > 0) {
      const auto pivots = m.rref();
      for (std::size_t r = 0; r < pivots.size(); ++r) {
        LieElement e(alg);
        for (std::size_t c = 0; c < d; ++c) e.add(c, m(r, c));
        next.push_back(std::move(e));
      }
    }
    current = std::move(next);
    ++cls;
  }
  // cls counts g^1..g^c nonzero terms, so g^{cls+1} = 0.
  return cls;
}

unsigned nilpotency_class(const AlgebraPtr& alg) { return nilpotency_class(StructureConstants(alg)); }

std::vector<std::size_t> isotropic_subalgebra(const AlgebraPtr& alg) {
  const std::size_t d = alg->num_variables();
  const std::size_t y0 = alg->y_variable(MultiIndex(alg->n()));
  StructureConstants sc(alg);
  // Row b: the functional X -> f([X, e_b]).
  ExactMatrix form(d, d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t a = 0; a < d; ++a) form(b, a) = sc.bracket(a, b).coefficient(y0);
  std::vector<std::size_t> out;
  for (const auto& v : form.null_space()) {
    std::size_t nonzero = 0, at = 0;
    for (std::size_t k = 0; k < d; ++k)
      if (!v[k].is_zero()) {
        ++nonzero;
        at = k;
      }
    if (nonzero != 1) throw std::logic_error("isotropic subalgebra is not spanned by basis vectors");
    out.push_back(at);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nilzeta
