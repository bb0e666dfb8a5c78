#include "twisted_hodge/hodge.hpp"

#include "twisted_hodge/elimination.hpp"
#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

namespace {

std::vector<int> generators(Monomial m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(__builtin_ctz(m));
  return out;
}

bool isIdentity(const Matrix& g) {
  return exactlyEqual(g, identityMatrix(g.rows()));
}

}  // namespace

Metric buildMetric(const InvariantComplex& complex) {
  return buildMetric(complex, identityMatrix(complex.n()));
}

Metric buildMetric(const InvariantComplex& complex, const Matrix& gram) {
  const FormBasis& basis = complex.basis;
  const int n = basis.n();
  if (gram.rows() != n || gram.cols() != n) {
    fail(ErrorKind::BadMetric, "metric must be " + std::to_string(n) + "x" +
                                   std::to_string(n));
  }
  if (!isHermitian(gram)) fail(ErrorKind::BadMetric, "metric is not Hermitian");
  if (!isPositiveDefinite(gram)) {
    fail(ErrorKind::BadMetric, "metric is not positive definite");
  }
  Metric m;
  m.gram = gram;

  Matrix pairing = zeroMatrix(2 * n, 2 * n);
  pairing.topLeftCorner(n, n) = gram;
  pairing.bottomRightCorner(n, n) = conjugate(gram);

  const bool trivial = isIdentity(gram);
  for (int k = 0; k <= basis.topDegree(); ++k) {
    const auto& monos = basis.monomials(k);
    const Index dim = basis.dim(k);
    if (trivial) {
      m.innerProduct.push_back(identityMatrix(dim));
      m.innerProductInverse.push_back(identityMatrix(dim));
      continue;
    }
    Matrix mk = zeroMatrix(dim, dim);
    for (Index a = 0; a < dim; ++a) {
      const std::vector<int> ga = generators(monos[a]);
      for (Index b = 0; b < dim; ++b) {
        if (!(basis.bidegree(monos[a]) == basis.bidegree(monos[b]))) continue;
        const std::vector<int> gb = generators(monos[b]);
        Matrix sub(k, k);
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) sub(i, j) = pairing(gb[i], ga[j]);
        }
        mk(a, b) = k == 0 ? GaussianRational(1) : determinant(sub);
      }
    }
    m.innerProductInverse.push_back(inverse(mk));
    m.innerProduct.push_back(std::move(mk));
  }

  const Matrix ginv = inverse(gram);
  const GaussianRational i = GaussianRational::imaginaryUnit();
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const GaussianRational c = i * conj(ginv(j - 1, k - 1));
      m.omega += Form::monomial(basis.holomorphic(j), c)
                     .wedge(Form::monomial(basis.antiholomorphic(k)));
    }
  }
  m.dOmega = applyToForm(complex.d, basis, m.omega);
  m.kahler = m.dOmega.isZero();

  Form power = Form::monomial(0);
  mpz_class factorial = 1;
  for (int p = 1; p <= n; ++p) {
    power = power.wedge(m.omega);
    factorial *= p;
  }
  m.vol = GaussianRational(mpq_class(1, factorial)) * power;
  const Monomial top = (Monomial{1} << (2 * n)) - 1;
  if (m.vol.terms().size() != 1 || m.vol.coefficient(top).isZero()) {
    fail(ErrorKind::InternalError, "volume form is degenerate");
  }
  return m;
}

GaussianRational innerProduct(const Metric& metric, int k, const Vector& x,
                              const Vector& y) {
  const Matrix& mk = metric.innerProduct.at(k);
  const Vector mx = mk * x;
  GaussianRational out;
  for (Index a = 0; a < y.size(); ++a) out += conj(y(a)) * mx(a);
  return out;
}

GradedOperator hodgeStar(const InvariantComplex& complex, const Metric& metric) {
  const FormBasis& basis = complex.basis;
  const int top = basis.topDegree();
  const Monomial topMono = (Monomial{1} << top) - 1;
  const GaussianRational v = metric.vol.coefficient(topMono);
  GradedOperator star(basis.dims(), DegreeMap::reflection(top), Linearity::Antilinear);
  for (int k = 0; k <= top; ++k) {
    const auto& rows = basis.monomials(k);
    const auto& cols = basis.monomials(top - k);
    // W[a][c]: coefficient of e_a ∧ e_c on the top monomial (a signed
    // permutation, so W⁻¹ = Wᵀ).
    Matrix wt = zeroMatrix(cols.size(), rows.size());
    for (Index a = 0; a < static_cast<Index>(rows.size()); ++a) {
      const Monomial complement = topMono & ~rows[a];
      const Index c = basis.indexOf(complement);
      wt(c, a) = wedgeSign(rows[a], complement);
    }
    const Matrix mt = metric.innerProduct[k].transpose();
    star.block(k) = multiply(wt, mt);
    star.block(k) *= v;
  }
  return star;
}

GradedOperator gramAdjoint(const GradedOperator& op, const Metric& metric) {
  if (op.isAntilinear()) {
    fail(ErrorKind::InternalError, "Gram adjoint of an antilinear operator");
  }
  const DegreeMap map = op.degreeMap();
  const DegreeMap adjMap{map.sign, -map.sign * map.offset};
  GradedOperator adj(op.dims(), adjMap);
  for (int k = 0; k <= op.topDegree(); ++k) {
    const int t = op.targetDegree(k);
    if (t < 0) continue;
    const Matrix ah = op.block(k).adjoint();
    adj.block(t) = multiply(multiply(metric.innerProductInverse[k], ah),
                            metric.innerProduct[t]);
  }
  return adj;
}

bool isUnimodular(const InvariantComplex& complex) {
  return isZero(complex.d.block(complex.basis.topDegree() - 1));
}

GradedOperator lambda(const TwistedComplex& tc, const Metric& metric,
                      const Form& alpha) {
  return gramAdjoint(leftMultiplication(tc.basis(), alpha), metric);
}

Adjoints gramAdjoints(const TwistedComplex& tc, const Metric& metric) {
  return {gramAdjoint(tc.delTw, metric), gramAdjoint(tc.delbarTw, metric),
          gramAdjoint(tc.dPhi, metric), gramAdjoint(tc.lPhi, metric),
          lambda(tc, metric, metric.omega)};
}

namespace {

GradedOperator starLambda(const TwistedComplex& tc, const GradedOperator& star,
                          const Form& alpha) {
  const int r = alpha.degree() < 0 ? 0 : alpha.degree();
  GradedOperator out = star * leftMultiplication(tc.basis(), alpha) * star;
  for (int m = 0; m <= out.topDegree(); ++m) {
    // ∗̄⁻¹ = (−1)^{m+r} ∗̄ on the intermediate degree 2n − m + r.
    if ((r * (m - r) + m + r) % 2 != 0) out.block(m) = -out.block(m);
  }
  return out;
}

}  // namespace

Adjoints starAdjoints(const TwistedComplex& tc, const Metric& metric) {
  if (!isUnimodular(*tc.base)) {
    fail(ErrorKind::NotUnimodular,
         "star formulas for adjoints need a unimodular Lie algebra");
  }
  const GradedOperator star = hodgeStar(*tc.base, metric);
  const GaussianRational minus(-1);
  const TwistedComplex neg = withTwist(tc, minus * tc.twist.theta1,
                                       minus * tc.twist.theta2);
  Adjoints a;
  a.delTw = -(star * neg.delTw * star);
  a.delbarTw = -(star * neg.delbarTw * star);
  a.dPhi = -(star * neg.dPhi * star);
  a.lambdaPhi = starLambda(tc, star, tc.twist.phi);
  a.lambdaOmega = starLambda(tc, star, metric.omega);
  return a;
}

Adjoints checkedAdjoints(const TwistedComplex& tc, const Metric& metric) {
  Adjoints gram = gramAdjoints(tc, metric);
  const Adjoints viaStar = starAdjoints(tc, metric);
  const std::pair<const char*, bool> checks[] = {
      {"del_tw*", gram.delTw == viaStar.delTw},
      {"delbar_tw*", gram.delbarTw == viaStar.delbarTw},
      {"d_phi*", gram.dPhi == viaStar.dPhi},
      {"Lambda_phi", gram.lambdaPhi == viaStar.lambdaPhi},
      {"Lambda_omega", gram.lambdaOmega == viaStar.lambdaOmega},
  };
  for (const auto& [name, ok] : checks) {
    if (!ok) {
      fail(ErrorKind::AdjointMismatch,
           std::string(name) + ": Gram and star constructions disagree");
    }
  }
  return gram;
}

const GradedOperator& Laplacians::of(Theory t) const {
  switch (t) {
    case Theory::DeRham: return dPhi;
    case Theory::Del: return del;
    case Theory::Delbar: return delbar;
    case Theory::BottChern: return bc;
    case Theory::Aeppli: return a;
  }
  return dPhi;
}

Laplacians laplacians(const TwistedComplex& tc, const Adjoints& adj) {
  const GradedOperator& d = tc.delTw;
  const GradedOperator& db = tc.delbarTw;
  const GradedOperator& ds = adj.delTw;
  const GradedOperator& dbs = adj.delbarTw;
  const GradedOperator dd = d * db;
  const GradedOperator ddStar = dbs * ds;        // (∂∂̄)*
  const GradedOperator dbsD = dbs * d;           // ∂̄*∂
  const GradedOperator dbsDStar = ds * db;       // (∂̄*∂)* = ∂*∂̄
  const GradedOperator dbDs = db * ds;           // ∂̄∂*
  const GradedOperator dbDsStar = d * dbs;       // (∂̄∂*)* = ∂∂̄*

  Laplacians l;
  l.dPhi = tc.dPhi * adj.dPhi + adj.dPhi * tc.dPhi;
  l.del = d * ds + ds * d;
  l.delbar = db * dbs + dbs * db;
  l.bc = dd * ddStar + ddStar * dd + dbsD * dbsDStar + dbsDStar * dbsD +
         dbs * db + ds * d;
  l.a = d * ds + db * dbs + ddStar * dd + dd * ddStar + dbDsStar * dbDs +
        dbDs * dbDsStar;
  return l;
}

bool isSelfAdjoint(const GradedOperator& op, const Metric& metric) {
  for (int k = 0; k <= op.topDegree(); ++k) {
    if (op.targetDegree(k) != k) return false;
    if (!isHermitian(multiply(metric.innerProduct[k], op.block(k)))) return false;
  }
  return true;
}

bool isPositiveSemidefinite(const GradedOperator& op, const Metric& metric) {
  for (int k = 0; k <= op.topDegree(); ++k) {
    const Matrix form = multiply(metric.innerProduct[k], op.block(k));
    if (!isHermitian(form) || !twisted_hodge::isPositiveSemidefinite(form)) {
      return false;
    }
  }
  return true;
}

std::vector<long> kernelDims(const GradedOperator& op) {
  std::vector<long> out;
  for (int k = 0; k <= op.topDegree(); ++k) {
    out.push_back(op.block(k).cols() - rank(op.block(k)));
  }
  return out;
}

HarmonicDims harmonicDims(const TwistedCohomology& h, const Metric& metric) {
  const TwistedComplex& tc = h.complex();
  const Laplacians lap = laplacians(tc, gramAdjoints(tc, metric));
  HarmonicDims out;
  for (Theory t : kTheories) {
    const GradedOperator& delta = lap.of(t);
    if (!isSelfAdjoint(delta, metric) || !isPositiveSemidefinite(delta, metric)) {
      fail(ErrorKind::InternalError,
           std::string("Laplacian for ") + theoryKey(t) +
               " is not self-adjoint and positive semidefinite");
    }
    out[t] = kernelDims(delta);
    if (out[t] != h.dims(t)) {
      fail(ErrorKind::HodgeIsoViolation,
           std::string("harmonic dims differ from cohomology dims for ") +
               theoryKey(t));
    }
  }
  return out;
}

bool DualityRecord::holds() const {
  for (const auto& c : operatorChecks) {
    if (!c.second) return false;
  }
  for (const auto& c : dimensionChecks) {
    if (!c.second) return false;
  }
  return true;
}

DualityRecord starDuality(const TwistedComplex& tc, const Metric& metric,
                          const Form& dualTheta1, const Form& dualTheta2) {
  const TwistedComplex dual = withTwist(tc, dualTheta1, dualTheta2);
  const GradedOperator star = hodgeStar(*tc.base, metric);
  const Laplacians lap = laplacians(tc, gramAdjoints(tc, metric));
  const Laplacians lapDual = laplacians(dual, gramAdjoints(dual, metric));

  DualityRecord r;
  r.operatorChecks = {
      {"star Delta_dphi = Delta_dphi' star", star * lap.dPhi == lapDual.dPhi * star},
      {"star Delta_del = Delta_del' star", star * lap.del == lapDual.del * star},
      {"star Delta_delbar = Delta_delbar' star",
       star * lap.delbar == lapDual.delbar * star},
      {"star Delta_BC = Delta_A' star", star * lap.bc == lapDual.a * star},
  };

  const TwistedCohomology h(tc);
  const TwistedCohomology hDual(dual);
  const std::pair<Theory, Theory> pairs[] = {
      {Theory::DeRham, Theory::DeRham},
      {Theory::Del, Theory::Del},
      {Theory::Delbar, Theory::Delbar},
      {Theory::BottChern, Theory::Aeppli},
      {Theory::Aeppli, Theory::BottChern},
  };
  for (const auto& [src, dst] : pairs) {
    const std::vector<long> a = h.dims(src);
    const std::vector<long> b = hDual.dims(dst);
    bool ok = a.size() == b.size();
    for (std::size_t k = 0; ok && k < a.size(); ++k) {
      ok = a[k] == b[b.size() - 1 - k];
    }
    r.dimensionChecks.push_back(
        {std::string("h_") + theoryKey(src) + "(k) = h'_" + theoryKey(dst) + "(2n-k)",
         ok});
  }
  return r;
}

DualityRecord requireStarDuality(const TwistedComplex& tc, const Metric& metric) {
  const GaussianRational minus(-1);
  DualityRecord r = starDuality(tc, metric, minus * tc.twist.theta1,
                                minus * tc.twist.theta2);
  for (const auto& group : {r.operatorChecks, r.dimensionChecks}) {
    for (const auto& [name, ok] : group) {
      if (!ok) fail(ErrorKind::DualityViolation, name + " fails");
    }
  }
  return r;
}

bool KahlerRecord::holds() const {
  for (const auto& c : checks) {
    if (!c.second) return false;
  }
  return true;
}

KahlerRecord kahlerIdentities(const TwistedComplex& tc, const Metric& metric) {
  if (!metric.kahler) {
    fail(ErrorKind::NotKahler, "metric is not Kaehler: d omega = " +
                                   formatForm(metric.dOmega, tc.basis()));
  }
  const Adjoints adj = gramAdjoints(tc, metric);
  const Laplacians lap = laplacians(tc, adj);
  const GaussianRational i = GaussianRational::imaginaryUnit();
  const GaussianRational two(2);
  const GradedOperator& d = tc.delTw;
  const GradedOperator& db = tc.delbarTw;
  const GradedOperator& lam = adj.lambdaOmega;
  const GradedOperator delbarSq = lap.delbar * lap.delbar;

  KahlerRecord r;
  r.checks = {
      {"[Lambda, del_tw] = i delbar_tw*", lam * d - d * lam == i * adj.delbarTw},
      {"[Lambda, delbar_tw] = -i del_tw*", lam * db - db * lam == -(i * adj.delTw)},
      {"[del_tw, delbar_tw*] = 0", gradedCommutator(d, adj.delbarTw).isZero()},
      {"[delbar_tw, del_tw*] = 0", gradedCommutator(db, adj.delTw).isZero()},
      {"Delta_dphi = 2 Delta_del", lap.dPhi == two * lap.del},
      {"Delta_dphi = 2 Delta_delbar", lap.dPhi == two * lap.delbar},
      {"Delta_BC = Delta_delbar^2 + del*del + delbar*delbar",
       lap.bc == delbarSq + adj.delTw * d + adj.delbarTw * db},
      {"Delta_A = Delta_delbar^2 + del del* + delbar delbar*",
       lap.a == delbarSq + d * adj.delTw + db * adj.delbarTw},
  };

  const TwistedCohomology h(tc);
  bool mechanism = true;
  for (int k = 0; k <= h.topDegree(); ++k) {
    const CohomologyData& bc = h.data(Theory::BottChern, k);
    const CohomologyData& a = h.data(Theory::Aeppli, k);
    mechanism = mechanism && intersection(bc.cycles, a.boundaries) == bc.boundaries;
  }
  r.checks.push_back({"ker del_tw & ker delbar_tw & (im del_tw + im delbar_tw) = "
                      "im del_tw delbar_tw",
                      mechanism});
  return r;
}

KahlerRecord requireKahlerIdentities(const TwistedComplex& tc,
                                     const Metric& metric) {
  KahlerRecord r = kahlerIdentities(tc, metric);
  for (const auto& [name, ok] : r.checks) {
    if (!ok) fail(ErrorKind::KahlerIdentityViolation, name + " fails");
  }
  return r;
}

}  // namespace twisted_hodge
