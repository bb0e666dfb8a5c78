#include "twisted_hodge/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fromParts(const mpz_class& reNum,
                                             const mpz_class& reDen,
                                             const mpz_class& imNum,
                                             const mpz_class& imDen) {
  if (sgn(reDen) == 0 || sgn(imDen) == 0) {
    fail(ErrorKind::DivisionByZero, "zero denominator in Gaussian rational");
  }
  return {mpq_class(reNum, reDen), mpq_class(imNum, imDen)};
}

GaussianRational GaussianRational::inverse() const {
  if (isZero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  const mpq_class n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  if (o.isZero()) return *this;
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  *this = *this * o;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  *this = *this * o.inverse();
  return *this;
}

GaussianRational operator*(const GaussianRational& a,
                           const GaussianRational& b) {
  if (a.isZero() || b.isZero()) return {};
  if (sgn(a.im_) == 0 && sgn(b.im_) == 0) return {a.re_ * b.re_, 0};
  mpq_class re = a.re_ * b.re_ - a.im_ * b.im_;
  mpq_class im = a.re_ * b.im_ + a.im_ * b.re_;
  GaussianRational r;
  r.re_ = std::move(re);
  r.im_ = std::move(im);
  return r;
}

std::string formatScalar(const GaussianRational& x) {
  const bool hasRe = sgn(x.real()) != 0;
  const bool hasIm = sgn(x.imag()) != 0;
  if (!hasIm) return x.real().get_str();
  std::string im;
  if (x.imag() == 1) {
    im = "i";
  } else if (x.imag() == -1) {
    im = "-i";
  } else {
    im = x.imag().get_str() + "i";
  }
  if (!hasRe) return im;
  if (im.front() != '-') im = "+" + im;
  return x.real().get_str() + im;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << formatScalar(x);
}

namespace {

class CoefficientParser {
 public:
  explicit CoefficientParser(std::string text) : s_(std::move(text)) {}

  GaussianRational parse() {
    if (s_.empty()) error("empty coefficient");
    GaussianRational result;
    bool first = true;
    bool sawReal = false;
    bool sawImag = false;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      mpq_class value = 1;
      const bool hasNumber =
          pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
      if (hasNumber) value = rational();
      bool imaginary = false;
      if (pos_ < s_.size() && s_[pos_] == 'i') {
        imaginary = true;
        ++pos_;
      }
      if (!hasNumber && !imaginary) error("expected a number");
      if (imaginary) {
        if (sawImag) error("repeated imaginary part");
        sawImag = true;
        result += GaussianRational(0, sign * value);
      } else {
        if (sawReal || sawImag) error("real part must come first");
        sawReal = true;
        result += GaussianRational(sign * value, 0);
      }
    }
    return result;
  }

 private:
  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) error("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  mpq_class rational() {
    mpz_class num = integer();
    mpz_class den = 1;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      den = integer();
      if (sgn(den) == 0) {
        fail(ErrorKind::DivisionByZero, "zero denominator in '" + s_ + "'");
      }
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError,
         "malformed coefficient '" + s_ + "': " + what);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussianRational parseGaussianRational(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  return CoefficientParser(std::move(compact)).parse();
}

}  // namespace twisted_hodge
