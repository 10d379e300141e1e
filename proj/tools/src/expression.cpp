#include "nilzeta_cli/expression.hpp"

#include <cctype>

#include "nilzeta/error.hpp"

namespace nilzeta::cli {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const AlgebraPtr& alg) : s_(text), alg_(alg) {}

  UEAElement element() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "a term", "empty expression");
    UEAElement out(alg_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    while (true) {
      UEAElement t = term();
      if (negative) t = -t;
      out += t;
      skip();
      if (pos_ == s_.size()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, "'+', '-' or end of input", "unexpected character");
      negative = take() == '-';
    }
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char take() {
    const char c = peek();
    ++pos_;
    return c;
  }
  void expect(char c, const char* what) {
    if (peek() != c) throw ParseError(pos_, what, "unexpected " + describe());
    ++pos_;
  }
  std::string describe() {
    return pos_ < s_.size() ? std::string("character '") + s_[pos_] + "'" : std::string("end of input");
  }

  Integer nat() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "a natural number", "unexpected " + describe());
    return Integer(s_.substr(start, pos_ - start));
  }
  unsigned small_nat() {
    const std::size_t at = pos_;
    const Integer v = nat();
    if (!v.fits_ushort_p()) throw ParseError(at, "a natural number below 65536", "number too large");
    return static_cast<unsigned>(v.get_ui());
  }

  // atom := nat ["/" nat] ["i"] | "i"
  GaussianRational atom() {
    if (peek() == 'i') {
      ++pos_;
      return GaussianRational::i();
    }
    Rational q(nat());
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      const Integer den = nat();
      if (den == 0) throw ParseError(at, "a nonzero denominator", "division by zero");
      q /= Rational(den);
    }
    q.canonicalize();
    if (peek() == 'i') {
      ++pos_;
      return {Rational(0), q};
    }
    return q;
  }

  GaussianRational coefficient() {
    if (peek() != '(') return atom();
    ++pos_;
    GaussianRational c;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    while (true) {
      const GaussianRational a = atom();
      c += negative ? -a : a;
      const char n = peek();
      if (n == ')') break;
      if (n != '+' && n != '-') throw ParseError(pos_, "'+', '-' or ')'", "unexpected " + describe());
      negative = take() == '-';
    }
    ++pos_;
    return c;
  }

  bool factor_ahead() {
    const char c = peek();
    return c == 'X' || c == 'Y';
  }

  UEAElement factor() {
    const std::size_t at = pos_;
    const char c = take();
    std::size_t var = 0;
    if (c == 'X') {
      const unsigned k = small_nat();
      if (k == 0 || k > alg_->n())
        throw ParseError(at, "X1..X" + std::to_string(alg_->n()), "variable index out of range");
      var = alg_->x_variable(k);
    } else if (c == 'Y') {
      expect('[', "'['");
      std::vector<unsigned> e{small_nat()};
      while (peek() == ',') {
        ++pos_;
        e.push_back(small_nat());
      }
      expect(']', "',' or ']'");
      std::string name = "Y[";
      for (std::size_t k = 0; k < e.size(); ++k) name += (k ? "," : "") + std::to_string(e[k]);
      name += "]";
      const MultiIndex beta(std::move(e));
      if (beta.size() != alg_->n())
        throw ParseError(at, "a Y index with " + std::to_string(alg_->n()) + " entries", "wrong index length");
      if (!alg_->y_position(beta))
        throw ParseError(at, "an index of the algebra's index set", name + " is not a basis element");
      var = alg_->y_variable(beta);
    } else {
      throw ParseError(at, "'X' or 'Y'", "unexpected " + (c ? std::string("character '") + c + "'" : "end of input"));
    }
    unsigned power = 1;
    if (peek() == '^') {
      ++pos_;
      power = small_nat();
    }
    UEAElement v = UEAElement::variable(alg_, var);
    UEAElement out(alg_, GaussianRational(1));
    for (unsigned k = 0; k < power; ++k) out = normal_product(out, v);
    return out;
  }

  UEAElement term() {
    UEAElement out(alg_, GaussianRational(1));
    if (!factor_ahead()) {
      const char c = peek();
      if (c != '(' && c != 'i' && !std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError(pos_, "a coefficient, 'X' or 'Y'", "unexpected " + describe());
      out = UEAElement(alg_, coefficient());
      if (peek() != '*') return out;
      ++pos_;
    }
    out = normal_product(out, factor());
    while (peek() == '*') {
      ++pos_;
      out = normal_product(out, factor());
    }
    return out;
  }

  const std::string& s_;
  AlgebraPtr alg_;
  std::size_t pos_ = 0;
};

}  // namespace

UEAElement parse_expression(const std::string& text, const AlgebraPtr& alg) {
  Parser p(text, alg);
  return p.element();
}

std::string print(const UEAElement& u) { return u.to_string(); }

}  // namespace nilzeta::cli
