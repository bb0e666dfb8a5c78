#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "twisted_hodge/elimination.hpp"
#include "twisted_hodge/errors.hpp"
#include "twisted_hodge/subspace.hpp"

using namespace twisted_hodge;

namespace {

oracle::Dense randomDense(std::mt19937& rng, int rows, int cols, double zeroBias = 0.4) {
  oracle::Dense a = oracle::zeros(rows, cols);
  for (auto& row : a) {
    for (auto& e : row) e = oracle::randomEntry(rng, zeroBias);
  }
  return a;
}

/// Columns that are random combinations of `rank` random columns.
oracle::Dense randomOfRank(std::mt19937& rng, int rows, int cols, int rank) {
  const oracle::Dense left = randomDense(rng, rows, rank, 0.2);
  const oracle::Dense right = randomDense(rng, rank, cols, 0.2);
  return oracle::mul(left, right, rank, cols);
}

Matrix toMatrix(const oracle::Dense& a, int cols) { return testing::fromOracle(a, cols); }

}  // namespace

TEST_CASE("rank agrees with the dense oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> size(1, 6);
    const int r = size(rng), c = size(rng);
    const oracle::Dense a = randomDense(rng, r, c);
    const Matrix m = toMatrix(a, c);
    const Index rk = rank(m);
    CHECK(rk == oracle::rank(a));
    CHECK(rk == rank(Matrix(m.transpose())));
    const Matrix ns = nullspaceBasis(m);
    CHECK(ns.cols() == c - rk);
    CHECK(isZero(multiply(m, ns)));
  }
}

TEST_CASE("determinant, inverse and solve") {
  const Matrix a = testing::gram({{"1", "i", "0"}, {"2", "1/2", "-1"}, {"0", "1+i", "3"}});
  const GaussianRational det = determinant(a);
  CHECK(det == testing::gr("5/2-5i"));
  const Matrix inv = inverse(a);
  CHECK(exactlyEqual(multiply(a, inv), identityMatrix(3)));
  const Vector b = unitVector(3, 1);
  const auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(exactlyEqual(Vector(a * *x), b));
  const Matrix singular = testing::gram({{"1", "2"}, {"2", "4"}});
  CHECK(determinant(singular).isZero());
  CHECK_FALSE(solve(singular, unitVector(2, 0)).has_value());
}

TEST_CASE("definiteness") {
  CHECK(isPositiveDefinite(testing::gram({{"2", "i"}, {"-i", "1"}})));
  CHECK_FALSE(isPositiveDefinite(testing::gram({{"1", "i"}, {"-i", "1"}})));
  CHECK(isPositiveSemidefinite(testing::gram({{"1", "i"}, {"-i", "1"}})));
  CHECK_FALSE(isPositiveSemidefinite(testing::gram({{"1", "2"}, {"2", "1"}})));
  CHECK_FALSE(isHermitian(testing::gram({{"1", "i"}, {"i", "1"}})));
}

TEST_CASE("subspaces have canonical bases") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const oracle::Dense g = randomOfRank(rng, 5, 4, 2);
    const Matrix m = toMatrix(g, 4);
    const Subspace u = Subspace::span(m);
    // Another spanning set of the same space: mix the columns.
    const oracle::Dense mix = randomDense(rng, 4, 4, 0.0);
    const Subspace v = Subspace::span(hconcat(multiply(m, toMatrix(mix, 4)), m));
    CHECK(u == v);
    CHECK(exactlyEqual(u.basis(), v.basis()));
    CHECK(u.dim() == oracle::rank(g));
  }
}

TEST_CASE("subspace lattice identities") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dim(0, 4);
    const Subspace u = Subspace::span(toMatrix(randomOfRank(rng, 5, 4, dim(rng)), 4));
    const Subspace v = Subspace::span(toMatrix(randomOfRank(rng, 5, 4, dim(rng)), 4));
    const Subspace w = Subspace::span(toMatrix(randomOfRank(rng, 5, 4, dim(rng)), 4));
    CHECK(sum(u, v).dim() + intersection(u, v).dim() == u.dim() + v.dim());
    CHECK(sum(u, v).contains(u));
    CHECK(u.contains(intersection(u, v)));
    CHECK(sum(u, v) == sum(v, u));
    CHECK(intersection(u, v) == intersection(v, u));
    // modular law: U ⊆ W ⇒ U + (V ∩ W) = (U + V) ∩ W
    const Subspace uw = intersection(u, w);
    CHECK(sum(uw, intersection(v, w)) == intersection(sum(uw, v), w));
  }
}

TEST_CASE("kernel, image and preimage") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const oracle::Dense g = randomOfRank(rng, 4, 5, 3);
    const Matrix a = toMatrix(g, 5);
    CHECK(kernel(a).dim() + image(a).dim() == 5);
    CHECK(isZero(multiply(a, kernel(a).basis())));
    const Subspace w = Subspace::span(toMatrix(randomOfRank(rng, 4, 2, 2), 2));
    const Subspace pre = preimage(a, w);
    CHECK(pre.contains(kernel(a)));
    CHECK(w.contains(image(a, pre)));
    CHECK(image(a, pre) == intersection(image(a), w));
  }
}

TEST_CASE("induced quotient maps agree with the rank-only oracle") {
  std::mt19937 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<int> amb(1, 8);
    const int n = amb(rng);
    std::uniform_int_distribution<int> pick(0, n);
    // B₁ ⊆ B₂, B₁ ⊆ Z₁ ⊆ Z₂ and B₂ ⊆ Z₂, so the identity induces a map.
    const oracle::Dense b1 = randomOfRank(rng, n, 3, std::min(pick(rng), 3));
    const oracle::Dense b2 = oracle::joinCols(b1, randomOfRank(rng, n, 2, std::min(pick(rng), 2)));
    const oracle::Dense z1 = oracle::joinCols(b1, randomOfRank(rng, n, 3, std::min(pick(rng), 3)));
    const oracle::Dense z2 = oracle::joinCols(oracle::joinCols(b2, z1),
                                              randomOfRank(rng, n, 2, std::min(pick(rng), 2)));
    const Subspace sz1 = Subspace::span(toMatrix(z1, 6));
    const Subspace sb1 = Subspace::span(toMatrix(b1, 3));
    const Subspace sz2 = Subspace::span(toMatrix(z2, 13));
    const Subspace sb2 = Subspace::span(toMatrix(b2, 5));
    const QuotientMapVerdict v = inducedQuotientMap(sz1, sb1, sz2, sb2, identityMatrix(n));
    const oracle::QuotientFacts f = oracle::quotientFacts(z1, b1, z2, b2);
    CHECK(v.rank == f.rank);
    CHECK(v.injective == f.injective);
    CHECK(v.surjective == f.surjective);
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("induced map preconditions") {
  const Subspace line = Subspace::span(testing::gram({{"1", "0"}, {"0", "0"}}));
  const Subspace other = Subspace::span(testing::gram({{"0", "0"}, {"1", "0"}}));
  try {
    inducedQuotientMap(line, Subspace::zero(2), other, Subspace::zero(2), identityMatrix(2));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAChainMap);
  }
}
