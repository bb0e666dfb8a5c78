#pragma once

// Independent dense oracles for the tests. Nothing here uses the library's
// scalar type, elimination or subspace code.

#include <array>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;

struct C {
  Q re = 0;
  Q im = 0;

  friend C operator+(const C& a, const C& b) { return {a.re + b.re, a.im + b.im}; }
  friend C operator-(const C& a, const C& b) { return {a.re - b.re, a.im - b.im}; }
  friend C operator*(const C& a, const C& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend C operator/(const C& a, const C& b) {
    const Q n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  C conj() const { return {re, -im}; }
  bool zero() const { return re == 0 && im == 0; }
};

using Dense = std::vector<std::vector<C>>;

inline Dense zeros(int rows, int cols) { return Dense(rows, std::vector<C>(cols)); }

inline int cols(const Dense& a, int fallback) {
  return a.empty() ? fallback : static_cast<int>(a[0].size());
}

/// Plain Gaussian elimination on a copy.
inline int rank(Dense a) {
  const int m = static_cast<int>(a.size());
  if (m == 0) return 0;
  const int n = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = r;
    while (p < m && a[p][c].zero()) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < m; ++i) {
      if (a[i][c].zero()) continue;
      const C f = a[i][c] / a[r][c];
      for (int j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline Dense mul(const Dense& a, const Dense& b, int inner, int outCols) {
  Dense out = zeros(static_cast<int>(a.size()), outCols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int k = 0; k < inner; ++k) {
      if (a[i][k].zero()) continue;
      for (int j = 0; j < outCols; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  }
  return out;
}

inline Dense stackRows(const Dense& a, const Dense& b) {
  Dense out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Dense joinCols(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].insert(out[i].end(), b[i].begin(), b[i].end());
  return out;
}

/// n = 1 with dμ = c·μ∧μ̄, basis (1, μ, μ̄, μ∧μ̄), twist θ₁ = aμ, θ₂ = bμ.
/// Returns the 4×4 matrices of ∂_tw and ∂̄_tw written out by hand.
struct N1Operators {
  Dense del;
  Dense delbar;
};

inline N1Operators n1Operators(const C& c, const C& a, const C& b) {
  // columns = source basis vector, rows = target coordinates
  N1Operators ops{zeros(4, 4), zeros(4, 4)};
  // ∂_tw = ∂ + bμ∧ + āμ̄∧,  ∂̄_tw = ∂̄ − b̄μ̄∧ + aμ∧
  // ∂1 = 0, ∂μ = 0, ∂μ̄ = −c̄ μμ̄;  ∂̄1 = 0, ∂̄μ = c μμ̄, ∂̄μ̄ = 0
  // μ∧1 = μ, μ∧μ̄ = μμ̄;  μ̄∧1 = μ̄, μ̄∧μ = −μμ̄
  const C ab = a.conj();
  const C bb = b.conj();
  ops.del[1][0] = b;
  ops.del[2][0] = ab;
  ops.del[3][1] = C{} - ab;
  ops.del[3][2] = C{} - c.conj() + b;
  ops.delbar[1][0] = a;
  ops.delbar[2][0] = C{} - bb;
  ops.delbar[3][1] = c + bb;
  ops.delbar[3][2] = a;
  return ops;
}

/// Degree ranges of the n = 1 basis.
inline constexpr std::array<std::pair<int, int>, 3> kN1Degrees = {
    std::pair{0, 1}, std::pair{1, 3}, std::pair{3, 4}};

inline Dense slice(const Dense& full, int k_from, int k_to) {
  const auto [r0, r1] = kN1Degrees[k_to];
  const auto [c0, c1] = kN1Degrees[k_from];
  Dense out = zeros(r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i) {
    for (int j = c0; j < c1; ++j) out[i - r0][j - c0] = full[i][j];
  }
  return out;
}

/// dR, del, delbar, BC, A dims per degree, all from ranks.
inline std::array<std::array<long, 3>, 5> n1Dims(const N1Operators& ops) {
  Dense d = zeros(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) d[i][j] = ops.del[i][j] + ops.delbar[i][j];
  }
  const Dense dd = mul(ops.del, ops.delbar, 4, 4);
  auto blockRank = [](const Dense& full, int k) {
    if (k < 0 || k > 1) return 0;
    return rank(slice(full, k, k + 1));
  };
  auto size = [](int k) { return kN1Degrees[k].second - kN1Degrees[k].first; };
  std::array<std::array<long, 3>, 5> out{};
  for (int k = 0; k <= 2; ++k) {
    const int dim = size(k);
    out[0][k] = dim - blockRank(d, k) - blockRank(d, k - 1);
    out[1][k] = dim - blockRank(ops.del, k) - blockRank(ops.del, k - 1);
    out[2][k] = dim - blockRank(ops.delbar, k) - blockRank(ops.delbar, k - 1);
    // BC: dim(ker ∂ ∩ ker ∂̄) − rank(∂∂̄ into k)
    long both = dim;
    if (k <= 1) both = dim - rank(stackRows(slice(ops.del, k, k + 1), slice(ops.delbar, k, k + 1)));
    const long ddIn = k == 2 ? rank(slice(dd, 0, 2)) : 0;
    out[3][k] = both - ddIn;
    // A: dim ker ∂∂̄ − dim(im ∂ + im ∂̄ into k)
    const long kerDD = k == 0 ? dim - rank(slice(dd, 0, 2)) : dim;
    const long sumIn =
        k == 0 ? 0 : rank(joinCols(slice(ops.del, k - 1, k), slice(ops.delbar, k - 1, k)));
    out[4][k] = kerDD - sumIn;
  }
  return out;
}

/// Rank-only description of Z₁/B₁ → Z₂/B₂ induced by the identity:
/// rank = rank[Z₁|B₂] − rank B₂; injective ⟺ rank = dim Z₁ − dim B₁;
/// surjective ⟺ rank = dim Z₂ − dim B₂.
struct QuotientFacts {
  long rank = 0;
  bool injective = false;
  bool surjective = false;
};

inline QuotientFacts quotientFacts(const Dense& z1, const Dense& b1, const Dense& z2,
                                   const Dense& b2) {
  const long rz1 = rank(z1), rb1 = rank(b1), rz2 = rank(z2), rb2 = rank(b2);
  QuotientFacts f;
  f.rank = rank(joinCols(z1, b2)) - rb2;
  f.injective = f.rank == rz1 - rb1;
  f.surjective = f.rank == rz2 - rb2;
  return f;
}

/// Small random Gaussian integers, zero with probability `zeroBias`.
inline C randomEntry(std::mt19937& rng, double zeroBias = 0.4) {
  std::uniform_real_distribution<double> u(0, 1);
  if (u(rng) < zeroBias) return {};
  std::uniform_int_distribution<int> d(-3, 3);
  return {Q(d(rng)), u(rng) < 0.5 ? Q(0) : Q(d(rng))};
}

}  // namespace oracle
