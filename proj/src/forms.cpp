#include "twisted_hodge/forms.hpp"

#include <algorithm>
#include <cctype>

#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

int wedgeSign(Monomial a, Monomial b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Monomial rest = b; rest; rest &= rest - 1) {
    const int j = __builtin_ctz(rest);
    inversions += __builtin_popcount(a >> (j + 1));
  }
  return (inversions % 2) ? -1 : 1;
}

namespace {

void combinations(int n, int size, int start, Monomial current,
                  std::vector<Monomial>* out) {
  if (size == 0) {
    out->push_back(current);
    return;
  }
  for (int i = start; i <= n - size; ++i) {
    combinations(n, size - 1, i + 1, current | (Monomial{1} << i), out);
  }
}

std::vector<Monomial> lexSubsets(int n, int size) {
  std::vector<Monomial> out;
  combinations(n, size, 0, 0, &out);
  return out;
}

}  // namespace

FormBasis::FormBasis(int n) : n_(n) {
  if (n < 1 || n > 15) {
    fail(ErrorKind::SizeGuard, "complex dimension out of representable range");
  }
  index_.assign(std::size_t{1} << (2 * n), -1);
  monomials_.resize(2 * n + 1);
  blocks_.resize(2 * n + 1);
  for (int k = 0; k <= 2 * n; ++k) {
    for (int p = std::max(0, k - n); p <= std::min(k, n); ++p) {
      const int q = k - p;
      Block block{{p, q}, static_cast<Index>(monomials_[k].size()), 0};
      for (Monomial hol : lexSubsets(n, p)) {
        for (Monomial anti : lexSubsets(n, q)) {
          const Monomial m = hol | (anti << n);
          index_[m] = static_cast<Index>(monomials_[k].size());
          monomials_[k].push_back(m);
        }
      }
      block.size = static_cast<Index>(monomials_[k].size()) - block.offset;
      blocks_[k].push_back(block);
    }
  }
}

std::vector<Index> FormBasis::dims() const {
  std::vector<Index> d;
  for (int k = 0; k <= topDegree(); ++k) d.push_back(dim(k));
  return d;
}

Index FormBasis::totalDim() const { return Index{1} << (2 * n_); }

Bidegree FormBasis::bidegree(Monomial m) const {
  const Monomial low = (Monomial{1} << n_) - 1;
  return {__builtin_popcount(m & low), __builtin_popcount(m >> n_)};
}

std::string FormBasis::name(Monomial m) const {
  if (m == 0) return "1";
  std::string out;
  for (int g = 0; g < 2 * n_; ++g) {
    if (!(m & (Monomial{1} << g))) continue;
    if (!out.empty()) out += "^";
    out += g < n_ ? "mu" + std::to_string(g + 1)
                  : "mubar" + std::to_string(g - n_ + 1);
  }
  return out;
}

Monomial FormBasis::conjugate(Monomial m, int* sign) const {
  Monomial acc = 0;
  int s = 1;
  for (int g = 0; g < 2 * n_; ++g) {
    if (!(m & (Monomial{1} << g))) continue;
    const int h = g < n_ ? g + n_ : g - n_;
    const Monomial gen = Monomial{1} << h;
    s *= wedgeSign(acc, gen);
    acc |= gen;
  }
  if (sign) *sign = s;
  return acc;
}

Form Form::monomial(Monomial m, const GaussianRational& c) {
  Form f;
  f.add(m, c);
  return f;
}

Form Form::fromCoordinates(const FormBasis& basis, int k, const Vector& x) {
  if (x.size() != basis.dim(k)) {
    fail(ErrorKind::DimensionError, "coordinate vector has wrong size");
  }
  Form f;
  for (Index i = 0; i < x.size(); ++i) f.add(basis.monomials(k)[i], x(i));
  return f;
}

GaussianRational Form::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

int Form::degree() const {
  if (terms_.empty()) return -1;
  const int d = monomialDegree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (monomialDegree(m) != d) return -2;
  }
  return d;
}

bool Form::isBihomogeneous(const FormBasis& basis, Bidegree bd) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return basis.bidegree(t.first) == bd;
  });
}

void Form::add(Monomial m, const GaussianRational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Form operator*(const GaussianRational& c, const Form& f) {
  Form out;
  if (c.isZero()) return out;
  for (const auto& [m, v] : f.terms_) out.terms_.emplace(m, c * v);
  return out;
}

Form Form::wedge(const Form& o) const {
  Form out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      const int s = wedgeSign(a, b);
      if (s == 0) continue;
      out.add(a | b, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

Form Form::conjugate(const FormBasis& basis) const {
  Form out;
  for (const auto& [m, c] : terms_) {
    int s = 1;
    const Monomial cm = basis.conjugate(m, &s);
    out.add(cm, s > 0 ? conj(c) : -conj(c));
  }
  return out;
}

Form Form::component(const FormBasis& basis, Bidegree bd) const {
  Form out;
  for (const auto& [m, c] : terms_) {
    if (basis.bidegree(m) == bd) out.terms_.emplace(m, c);
  }
  return out;
}

Vector Form::coordinates(const FormBasis& basis, int k) const {
  Vector x = zeroVector(basis.dim(k));
  for (const auto& [m, c] : terms_) {
    if (monomialDegree(m) != k) {
      fail(ErrorKind::DimensionError,
           "form has a term outside degree " + std::to_string(k));
    }
    x(basis.indexOf(m)) = c;
  }
  return x;
}

namespace {

bool lexLess(Monomial a, Monomial b) {
  if (monomialDegree(a) != monomialDegree(b)) {
    return monomialDegree(a) < monomialDegree(b);
  }
  while (a && b) {
    const int ga = __builtin_ctz(a);
    const int gb = __builtin_ctz(b);
    if (ga != gb) return ga < gb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace

std::string formatForm(const Form& form, const FormBasis& basis) {
  if (form.isZero()) return "0";
  std::vector<std::pair<Monomial, GaussianRational>> terms(
      form.terms().begin(), form.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return lexLess(x.first, y.first);
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool complex = !c.isReal() && sgn(c.real()) != 0;
    bool negative = false;
    std::string coeff;
    if (complex) {
      coeff = "(" + formatScalar(c) + ")";
    } else {
      const GaussianRational magnitude =
          (sgn(c.real()) < 0 || sgn(c.imag()) < 0) ? -c : c;
      negative = !(magnitude == c);
      coeff = formatScalar(magnitude);
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += basis.name(m);
    }
  }
  return out;
}

namespace {

class FormParser {
 public:
  FormParser(std::string text, const FormBasis& basis)
      : s_(std::move(text)), basis_(basis) {}

  Form parse() {
    if (s_.empty()) error("empty expression");
    Form result;
    bool first = true;
    while (pos_ < s_.size()) {
      GaussianRational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      first = false;
      result += sign * term();
    }
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  Form term() {
    GaussianRational coeff = 1;
    bool hasCoeff = false;
    if (peek() == '(') {
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string::npos) error("unbalanced parenthesis");
      coeff = parseGaussianRational(s_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      hasCoeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek())) ||
               peek() == 'i') {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') {
        ++pos_;
      }
      if (peek() == 'i') ++pos_;
      coeff = parseGaussianRational(s_.substr(start, pos_ - start));
      hasCoeff = true;
    }
    if (hasCoeff) {
      if (peek() != '*') return Form::monomial(0, coeff);
      ++pos_;
    }
    return monomialTerm(coeff);
  }

  Form monomialTerm(const GaussianRational& coeff) {
    Form f = Form::monomial(0, coeff);
    while (true) {
      f = f.wedge(Form::monomial(generator()));
      if (peek() != '^') break;
      ++pos_;
    }
    return f;
  }

  Monomial generator() {
    if (s_.compare(pos_, 2, "mu") != 0) error("expected mu<k> or mubar<k>");
    pos_ += 2;
    bool bar = false;
    if (s_.compare(pos_, 3, "bar") == 0) {
      bar = true;
      pos_ += 3;
    }
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("missing generator index");
    const int g = std::stoi(s_.substr(start, pos_ - start));
    if (g < 1 || g > basis_.n()) {
      error("generator index " + std::to_string(g) + " out of range");
    }
    return bar ? basis_.antiholomorphic(g) : basis_.holomorphic(g);
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError,
         "malformed form expression '" + s_ + "': " + what);
  }

  std::string s_;
  const FormBasis& basis_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parseForm(std::string_view text, const FormBasis& basis) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  return FormParser(std::move(compact), basis).parse();
}

}  // namespace twisted_hodge
