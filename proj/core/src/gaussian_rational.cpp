#include "nilzeta/gaussian_rational.hpp"

#include "nilzeta/error.hpp"

namespace nilzeta {

GaussianRational GaussianRational::i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {Rational(1), Rational(0)};
    case 1:
      return {Rational(0), Rational(1)};
    case 2:
      return {Rational(-1), Rational(0)};
    default:
      return {Rational(0), Rational(-1)};
  }
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(i)");
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  auto imag_part = [](const Rational& q) {
    if (q == 1) return std::string("i");
    if (q == -1) return std::string("-i");
    return q.get_str() + "i";
  };
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return imag_part(im_);
  std::string out = re_.get_str();
  if (sgn(im_) > 0) {
    out += " + " + imag_part(im_);
  } else {
    out += " - " + imag_part(-im_);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

std::string rational_to_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError(0, "rational numeral", "invalid rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError(0, "nonzero denominator", "invalid rational '" + s + "'");
  q.canonicalize();
  return q;
}

Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace nilzeta
