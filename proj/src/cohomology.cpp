#include "twisted_hodge/cohomology.hpp"

#include "twisted_hodge/elimination.hpp"
#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

const char* theoryKey(Theory t) {
  switch (t) {
    case Theory::DeRham: return "dR";
    case Theory::Del: return "del";
    case Theory::Delbar: return "delbar";
    case Theory::BottChern: return "BC";
    case Theory::Aeppli: return "A";
  }
  return "";
}

namespace {

/// Image of the block landing in degree k, or zero when there is none.
Subspace imageInto(const GradedOperator& op, int k, int shift, Index ambient) {
  const int src = k - shift;
  if (src < 0) return Subspace::zero(ambient);
  return image(op.block(src));
}

}  // namespace

TwistedCohomology::TwistedCohomology(const TwistedComplex& tc)
    : tc_(tc), delDelbar_(tc.delTw * tc.delbarTw) {
  const int top = tc_.basis().topDegree();
  for (auto& v : data_) v.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    const Index ambient = tc_.dims()[k];
    const Subspace kerDel = kernel(tc_.delTw.block(k));
    const Subspace kerDelbar = kernel(tc_.delbarTw.block(k));
    const Subspace imDel = imageInto(tc_.delTw, k, 1, ambient);
    const Subspace imDelbar = imageInto(tc_.delbarTw, k, 1, ambient);

    data_[static_cast<int>(Theory::DeRham)][k] = {
        kernel(tc_.dPhi.block(k)), imageInto(tc_.dPhi, k, 1, ambient)};
    data_[static_cast<int>(Theory::Del)][k] = {kerDel, imDel};
    data_[static_cast<int>(Theory::Delbar)][k] = {kerDelbar, imDelbar};
    data_[static_cast<int>(Theory::BottChern)][k] = {
        intersection(kerDel, kerDelbar), imageInto(delDelbar_, k, 2, ambient)};
    data_[static_cast<int>(Theory::Aeppli)][k] = {kernel(delDelbar_.block(k)),
                                                  sum(imDel, imDelbar)};
    for (const auto& v : data_) {
      if (!v[k].cycles.contains(v[k].boundaries)) {
        fail(ErrorKind::InternalError, "boundaries outside cycles in degree " +
                                           std::to_string(k));
      }
    }
  }
}

std::vector<long> TwistedCohomology::dims(Theory t) const {
  std::vector<long> out;
  for (const auto& d : data_[static_cast<int>(t)]) out.push_back(d.dim());
  return out;
}

const char* mapKey(NaturalMap m) {
  switch (m) {
    case NaturalMap::BcDel: return "BC->del";
    case NaturalMap::BcDr: return "BC->dR";
    case NaturalMap::BcDelbar: return "BC->delbar";
    case NaturalMap::BcA: return "BC->A";
    case NaturalMap::DelA: return "del->A";
    case NaturalMap::DrA: return "dR->A";
    case NaturalMap::DelbarA: return "delbar->A";
  }
  return "";
}

Theory mapSource(NaturalMap m) {
  switch (m) {
    case NaturalMap::BcDel:
    case NaturalMap::BcDr:
    case NaturalMap::BcDelbar:
    case NaturalMap::BcA: return Theory::BottChern;
    case NaturalMap::DelA: return Theory::Del;
    case NaturalMap::DrA: return Theory::DeRham;
    case NaturalMap::DelbarA: return Theory::Delbar;
  }
  return Theory::BottChern;
}

Theory mapTarget(NaturalMap m) {
  switch (m) {
    case NaturalMap::BcDel: return Theory::Del;
    case NaturalMap::BcDr: return Theory::DeRham;
    case NaturalMap::BcDelbar: return Theory::Delbar;
    default: return Theory::Aeppli;
  }
}

bool MapRecord::injective() const {
  for (const auto& v : perDegree) {
    if (!v.injective) return false;
  }
  return true;
}

bool MapRecord::surjective() const {
  for (const auto& v : perDegree) {
    if (!v.surjective) return false;
  }
  return true;
}

std::vector<int> MapRecord::failingDegrees(bool needInjective,
                                           bool needSurjective) const {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(perDegree.size()); ++k) {
    if ((needInjective && !perDegree[k].injective) ||
        (needSurjective && !perDegree[k].surjective)) {
      out.push_back(k);
    }
  }
  return out;
}

std::vector<MapRecord> naturalMaps(const TwistedCohomology& h) {
  std::vector<MapRecord> out;
  for (NaturalMap m : kNaturalMaps) {
    MapRecord rec{m, {}};
    for (int k = 0; k <= h.topDegree(); ++k) {
      const CohomologyData& src = h.data(mapSource(m), k);
      const CohomologyData& dst = h.data(mapTarget(m), k);
      rec.perDegree.push_back(inducedQuotientMap(
          src.cycles, src.boundaries, dst.cycles, dst.boundaries,
          identityMatrix(src.cycles.ambientDim())));
    }
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

const MapRecord& find(const std::vector<MapRecord>& maps, NaturalMap m) {
  for (const auto& r : maps) {
    if (r.map == m) return r;
  }
  fail(ErrorKind::InternalError, std::string("missing map ") + mapKey(m));
}

}  // namespace

bool LemmaCrossCheck::consistent() const {
  const bool a = bcToAInjective;
  if (bcToABijective != a || bcToDelAndDelbarInjective != a ||
      delAndDelbarToASurjective != a) {
    return false;
  }
  return !a || (bcToDrInjective && drToASurjective);
}

LemmaVerdict lemmaVerdict(const std::vector<MapRecord>& maps) {
  const MapRecord& bcA = find(maps, NaturalMap::BcA);
  LemmaVerdict v;
  v.holds = bcA.injective();
  v.failingDegrees = bcA.failingDegrees(true, false);
  LemmaCrossCheck& c = v.crossCheck;
  c.bcToAInjective = v.holds;
  c.bcToABijective = bcA.bijective();
  c.bcToDelAndDelbarInjective = find(maps, NaturalMap::BcDel).injective() &&
                                find(maps, NaturalMap::BcDelbar).injective();
  c.delAndDelbarToASurjective = find(maps, NaturalMap::DelA).surjective() &&
                                find(maps, NaturalMap::DelbarA).surjective();
  c.bcToDrInjective = find(maps, NaturalMap::BcDr).injective();
  c.drToASurjective = find(maps, NaturalMap::DrA).surjective();
  if (!c.consistent()) {
    fail(ErrorKind::EquivalenceViolation,
         "the equivalent characterisations of the del-delbar lemma disagree");
  }
  return v;
}

HodgeVerdict hodgeDecompositionVerdict(const std::vector<MapRecord>& maps,
                                       const LemmaVerdict& lemma) {
  HodgeVerdict v;
  v.holds = true;
  std::vector<bool> failing;
  for (NaturalMap m : {NaturalMap::BcDel, NaturalMap::BcDr, NaturalMap::BcDelbar}) {
    const MapRecord& r = find(maps, m);
    failing.resize(r.perDegree.size(), false);
    for (int k : r.failingDegrees(true, true)) failing[k] = true;
  }
  for (int k = 0; k < static_cast<int>(failing.size()); ++k) {
    if (failing[k]) {
      v.holds = false;
      v.failingDegrees.push_back(k);
    }
  }
  if (v.holds && !lemma.holds) {
    fail(ErrorKind::EquivalenceViolation,
         "Hodge decomposition holds but the del-delbar lemma fails");
  }
  return v;
}

std::vector<InequalityRecord> frolicherAudit(
    const std::map<Theory, std::vector<long>>& dims, bool theta1IsZero) {
  const auto& dr = dims.at(Theory::DeRham);
  const auto& del = dims.at(Theory::Del);
  const auto& delbar = dims.at(Theory::Delbar);
  const auto& bc = dims.at(Theory::BottChern);
  const auto& a = dims.at(Theory::Aeppli);
  std::vector<InequalityRecord> out;
  auto record = [&](int k, const char* rel, long lhs, long rhs, bool asserted) {
    out.push_back({k, rel, lhs, rhs, lhs >= rhs, asserted});
  };
  for (int k = 0; k < static_cast<int>(dr.size()); ++k) {
    record(k, "BC+A>=del+delbar", bc[k] + a[k], del[k] + delbar[k], true);
    if (theta1IsZero) {
      record(k, "delbar>=dR", delbar[k], dr[k], true);
      record(k, "del>=dR", del[k], dr[k], true);
      record(k, "BC+A>=2dR", bc[k] + a[k], 2 * dr[k], true);
    } else {
      record(k, "delbar>=dR", delbar[k], dr[k], false);
    }
  }
  for (const auto& r : out) {
    if (r.asserted && !r.holds) {
      fail(ErrorKind::InequalityViolation,
           "degree " + std::to_string(r.degree) + ": " + r.relation + " fails (" +
               std::to_string(r.lhs) + " < " + std::to_string(r.rhs) + ")");
    }
  }
  return out;
}

namespace {

/// Columns of a degree-k block restricted to the monomials of bidegree bd.
Matrix columnsOf(const Matrix& block, const FormBasis& basis, int k, Bidegree bd) {
  for (const auto& b : basis.blocks(k)) {
    if (b.bidegree == bd) return block.middleCols(b.offset, b.size);
  }
  return Matrix(block.rows(), 0);
}

/// Embeds a subspace of the bidegree-bd coordinates into degree k.
Matrix embed(const Matrix& cols, const FormBasis& basis, int k, Bidegree bd) {
  Matrix out = zeroMatrix(basis.dim(k), cols.cols());
  for (const auto& b : basis.blocks(k)) {
    if (b.bidegree == bd) out.middleRows(b.offset, b.size) = cols;
  }
  return out;
}

}  // namespace

BigradedTable bigradedDims(const TwistedCohomology& h) {
  const TwistedComplex& tc = h.complex();
  const FormBasis& basis = tc.basis();
  const int n = basis.n();
  BigradedTable table;
  for (Theory t : {Theory::Del, Theory::Delbar, Theory::BottChern, Theory::Aeppli}) {
    table[t].assign(n + 1, std::vector<long>(n + 1, 0));
  }
  auto imageFrom = [&](const GradedOperator& op, int shift, int k, Bidegree src) {
    const int s = k - shift;
    if (s < 0 || src.p < 0 || src.q < 0 || src.p > n || src.q > n) {
      return Subspace::zero(basis.dim(k));
    }
    return image(columnsOf(op.block(s), basis, s, src));
  };
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      const int k = p + q;
      const Bidegree bd{p, q};
      auto localKernel = [&](const GradedOperator& op) {
        return Subspace::span(embed(kernel(columnsOf(op.block(k), basis, k, bd)).basis(),
                                    basis, k, bd));
      };
      const Subspace kerDel = localKernel(tc.delTw);
      const Subspace kerDelbar = localKernel(tc.delbarTw);
      const Subspace kerDD = localKernel(h.delDelbar());
      const Subspace imDel = imageFrom(tc.delTw, 1, k, {p - 1, q});
      const Subspace imDelbar = imageFrom(tc.delbarTw, 1, k, {p, q - 1});
      const Subspace imDD = imageFrom(h.delDelbar(), 2, k, {p - 1, q - 1});
      table[Theory::Del][p][q] = kerDel.dim() - imDel.dim();
      table[Theory::Delbar][p][q] = kerDelbar.dim() - imDelbar.dim();
      table[Theory::BottChern][p][q] =
          intersection(kerDel, kerDelbar).dim() - imDD.dim();
      table[Theory::Aeppli][p][q] = kerDD.dim() - sum(imDel, imDelbar).dim();
    }
  }
  for (const auto& [theory, rows] : table) {
    const std::vector<long> total = h.dims(theory);
    std::vector<long> summed(total.size(), 0);
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) summed[p + q] += rows[p][q];
    }
    if (summed != total) {
      fail(ErrorKind::InternalError,
           std::string("bigraded ") + theoryKey(theory) +
               " dims do not add up to the total dims");
    }
  }
  return table;
}

Witness verifyWitness(const TwistedComplex& tc, const Form& w,
                      const std::optional<Form>& primitive) {
  const FormBasis& basis = tc.basis();
  Witness out;
  out.degree = w.degree();
  if (out.degree < 0) {
    fail(ErrorKind::DimensionError, "witness must be a nonzero homogeneous form");
  }
  const int k = out.degree;
  out.form = w;
  out.primitive = primitive;
  const Vector x = w.coordinates(basis, k);
  out.delClosed = isZero(tc.delTw.apply(k, x));
  out.delbarClosed = isZero(tc.delbarTw.apply(k, x));
  if (primitive) {
    if (applyToForm(tc.delbarTw, basis, *primitive) == w) {
      out.primitiveOperator = "delbar_tw";
      out.exact = true;
    } else if (applyToForm(tc.delTw, basis, *primitive) == w) {
      out.primitiveOperator = "del_tw";
      out.exact = true;
    }
  } else if (k >= 1) {
    out.exact = sum(image(tc.delTw.block(k - 1)), image(tc.delbarTw.block(k - 1)))
                    .contains(x);
  }
  const GradedOperator dd = tc.delTw * tc.delbarTw;
  out.notDelDelbarExact = k < 2 || !image(dd.block(k - 2)).contains(x);
  return out;
}

Witness extractWitness(const TwistedCohomology& h, std::optional<int> degree,
                       const std::optional<Form>& primitiveHint) {
  const TwistedComplex& tc = h.complex();
  const FormBasis& basis = tc.basis();
  int k = -1;
  if (degree) {
    k = *degree;
    if (k < 0 || k > h.topDegree()) {
      fail(ErrorKind::DimensionError, "witness degree out of range");
    }
  }
  auto failsAt = [&](int deg) {
    const CohomologyData& bc = h.data(Theory::BottChern, deg);
    const CohomologyData& a = h.data(Theory::Aeppli, deg);
    return !bc.boundaries.contains(intersection(bc.cycles, a.boundaries));
  };
  if (k < 0) {
    for (int deg = 0; deg <= h.topDegree() && k < 0; ++deg) {
      if (failsAt(deg)) k = deg;
    }
    if (k < 0) fail(ErrorKind::NoWitness, "the del-delbar lemma holds in every degree");
  } else if (!failsAt(k)) {
    fail(ErrorKind::NoWitness,
         "BC->A is injective in degree " + std::to_string(k));
  }
  const CohomologyData& bc = h.data(Theory::BottChern, k);

  auto accept = [&](const Vector& w) {
    return !isZero(w) && bc.cycles.contains(w) && !bc.boundaries.contains(w);
  };
  auto tryPrimitive = [&](const Form& p) -> std::optional<Witness> {
    if (p.degree() != k - 1) return std::nullopt;
    const Vector x = p.coordinates(basis, k - 1);
    for (const GradedOperator* op : {&tc.delbarTw, &tc.delTw}) {
      const Vector w = op->apply(k - 1, x);
      if (accept(w)) {
        return verifyWitness(tc, Form::fromCoordinates(basis, k, w), p);
      }
    }
    return std::nullopt;
  };

  if (k >= 1) {
    if (primitiveHint) {
      if (auto w = tryPrimitive(*primitiveHint)) return *w;
    }
    for (Monomial m : basis.monomials(k - 1)) {
      if (auto w = tryPrimitive(Form::monomial(m))) return *w;
    }
  }
  const CohomologyData& a = h.data(Theory::Aeppli, k);
  const Subspace candidates = intersection(bc.cycles, a.boundaries);
  for (Index c = 0; c < candidates.dim(); ++c) {
    const Vector w = candidates.basis().col(c);
    if (!accept(w)) continue;
    std::optional<Form> primitive;
    for (const GradedOperator* op : {&tc.delbarTw, &tc.delTw}) {
      if (primitive) break;
      if (auto x = solve(op->block(k - 1), w)) {
        primitive = Form::fromCoordinates(basis, k - 1, *x);
      }
    }
    return verifyWitness(tc, Form::fromCoordinates(basis, k, w), primitive);
  }
  fail(ErrorKind::InternalError, "no witness found although BC->A is not injective");
}

}  // namespace twisted_hodge
