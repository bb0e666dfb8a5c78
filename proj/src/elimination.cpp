#include "twisted_hodge/elimination.hpp"

#include <utility>

#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    fail(ErrorKind::DimensionError, "hconcat: row count mismatch");
  }
  Matrix m(a.rows(), a.cols() + b.cols());
  m << a, b;
  return m;
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    fail(ErrorKind::DimensionError, "vconcat: column count mismatch");
  }
  Matrix m(a.rows() + b.rows(), a.cols());
  m << a, b;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorKind::DimensionError, "multiply: inner dimension mismatch");
  }
  Matrix out = zeroMatrix(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k) {
    for (Index i = 0; i < a.rows(); ++i) {
      const GaussianRational& aik = a(i, k);
      if (aik.isZero()) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        if (!b(k, j).isZero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

namespace {

struct GaussInt {
  mpz_class re;
  mpz_class im;

  bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) {
  return {a.re - b.re, a.im - b.im};
}

// Exact quotient a/b in Z[i]; Bareiss guarantees divisibility.
GaussInt exactDiv(const GaussInt& a, const GaussInt& b) {
  const mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
    fail(ErrorKind::InternalError, "Bareiss division was not exact");
  }
  mpz_divexact(re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return {std::move(re), std::move(im)};
}

using IntRows = std::vector<std::vector<GaussInt>>;

// Scales each row to Gaussian integers; returns the scale factor per row.
IntRows toGaussianIntegers(const Matrix& a, std::vector<mpz_class>* scales) {
  IntRows rows(a.rows(), std::vector<GaussInt>(a.cols()));
  if (scales) scales->assign(a.rows(), 1);
  for (Index i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (Index j = 0; j < a.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).real().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).imag().get_den_mpz_t());
    }
    for (Index j = 0; j < a.cols(); ++j) {
      const mpq_class& re = a(i, j).real();
      const mpq_class& im = a(i, j).imag();
      rows[i][j].re = re.get_num() * (l / re.get_den());
      rows[i][j].im = im.get_num() * (l / im.get_den());
    }
    if (scales) (*scales)[i] = l;
  }
  return rows;
}

struct ForwardResult {
  IntRows rows;
  std::vector<Index> pivots;
  int swapSign = 1;
};

ForwardResult bareissForward(IntRows rows, Index cols) {
  ForwardResult out;
  const Index m = static_cast<Index>(rows.size());
  GaussInt prev{1, 0};
  Index r = 0;
  for (Index c = 0; c < cols && r < m; ++c) {
    Index p = r;
    while (p < m && rows[p][c].isZero()) ++p;
    if (p == m) continue;
    if (p != r) {
      std::swap(rows[p], rows[r]);
      out.swapSign = -out.swapSign;
    }
    const GaussInt pivot = rows[r][c];
    for (Index i = r + 1; i < m; ++i) {
      const GaussInt factor = rows[i][c];
      for (Index j = c + 1; j < cols; ++j) {
        GaussInt t = sub(mul(pivot, rows[i][j]), mul(factor, rows[r][j]));
        rows[i][j] = exactDiv(t, prev);
      }
      rows[i][c] = {0, 0};
    }
    prev = pivot;
    out.pivots.push_back(c);
    ++r;
  }
  out.rows = std::move(rows);
  return out;
}

}  // namespace

EchelonForm rowReduce(const Matrix& a) {
  ForwardResult fwd = bareissForward(toGaussianIntegers(a, nullptr), a.cols());
  const Index rk = static_cast<Index>(fwd.pivots.size());
  EchelonForm e;
  e.cols = a.cols();
  e.pivots = fwd.pivots;
  e.reduced = Matrix(rk, a.cols());
  for (Index i = 0; i < rk; ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      e.reduced(i, j) = GaussianRational(mpq_class(fwd.rows[i][j].re),
                                         mpq_class(fwd.rows[i][j].im));
    }
  }
  for (Index i = rk - 1; i >= 0; --i) {
    const Index pc = e.pivots[i];
    const GaussianRational inv = e.reduced(i, pc).inverse();
    for (Index j = pc; j < a.cols(); ++j) e.reduced(i, j) *= inv;
    for (Index k = 0; k < i; ++k) {
      const GaussianRational f = e.reduced(k, pc);
      if (f.isZero()) continue;
      for (Index j = pc; j < a.cols(); ++j) {
        e.reduced(k, j) -= f * e.reduced(i, j);
      }
    }
  }
  return e;
}

Index rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return static_cast<Index>(
      bareissForward(toGaussianIntegers(a, nullptr), a.cols()).pivots.size());
}

Matrix nullspaceBasis(const Matrix& a) {
  const EchelonForm e = rowReduce(a);
  std::vector<bool> isPivot(a.cols(), false);
  for (Index p : e.pivots) isPivot[p] = true;
  std::vector<Index> free;
  for (Index j = 0; j < a.cols(); ++j) {
    if (!isPivot[j]) free.push_back(j);
  }
  Matrix basis = zeroMatrix(a.cols(), static_cast<Index>(free.size()));
  for (Index f = 0; f < static_cast<Index>(free.size()); ++f) {
    basis(free[f], f) = 1;
    for (Index r = 0; r < e.rank(); ++r) {
      basis(e.pivots[r], f) = -e.reduced(r, free[f]);
    }
  }
  return basis;
}

GaussianRational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) {
    fail(ErrorKind::DimensionError, "determinant of a non-square matrix");
  }
  const Index n = a.rows();
  if (n == 0) return 1;
  std::vector<mpz_class> scales;
  ForwardResult fwd = bareissForward(toGaussianIntegers(a, &scales), n);
  if (static_cast<Index>(fwd.pivots.size()) < n) return 0;
  const GaussInt& last = fwd.rows[n - 1][n - 1];
  mpz_class scale = 1;
  for (const auto& s : scales) scale *= s;
  GaussianRational det(mpq_class(last.re, scale), mpq_class(last.im, scale));
  return fwd.swapSign < 0 ? -det : det;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) {
    fail(ErrorKind::DimensionError, "inverse of a non-square matrix");
  }
  const Index n = a.rows();
  const EchelonForm e = rowReduce(hconcat(a, identityMatrix(n)));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    fail(ErrorKind::DivisionByZero, "inverse of a singular matrix");
  }
  return e.reduced.block(0, n, n, n);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.rows()) {
    fail(ErrorKind::DimensionError, "solve: right-hand side size mismatch");
  }
  const EchelonForm e = rowReduce(hconcat(a, b));
  Vector x = zeroVector(a.cols());
  for (Index r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(r, a.cols());
  }
  return x;
}

bool isHermitian(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = i; j < a.cols(); ++j) {
      if (a(i, j) != conj(a(j, i))) return false;
    }
  }
  return true;
}

bool isPositiveSemidefinite(const Matrix& hermitian) {
  if (!isHermitian(hermitian)) return false;
  Matrix m = hermitian;
  Index n = m.rows();
  std::vector<bool> done(n, false);
  for (Index step = 0; step < n; ++step) {
    Index p = -1;
    for (Index i = 0; i < n; ++i) {
      if (done[i]) continue;
      if (sgn(m(i, i).real()) < 0) return false;
      if (p < 0 && sgn(m(i, i).real()) > 0) p = i;
    }
    if (p < 0) {
      // Remaining diagonal is zero: PSD forces the remaining block to vanish.
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
          if (!done[i] && !done[j] && !m(i, j).isZero()) return false;
        }
      }
      return true;
    }
    done[p] = true;
    const GaussianRational inv = m(p, p).inverse();
    for (Index i = 0; i < n; ++i) {
      if (done[i] || m(i, p).isZero()) continue;
      const GaussianRational f = m(i, p) * inv;
      for (Index j = 0; j < n; ++j) {
        if (!done[j]) m(i, j) -= f * m(p, j);
      }
    }
  }
  return true;
}

bool isPositiveDefinite(const Matrix& hermitian) {
  if (!isHermitian(hermitian)) return false;
  for (Index k = 1; k <= hermitian.rows(); ++k) {
    const GaussianRational minor = determinant(hermitian.topLeftCorner(k, k));
    if (!minor.isReal() || sgn(minor.real()) <= 0) return false;
  }
  return true;
}

}  // namespace twisted_hodge
