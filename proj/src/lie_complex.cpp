#include "twisted_hodge/lie_complex.hpp"

#include "twisted_hodge/errors.hpp"

namespace twisted_hodge {

namespace {

using nlohmann::json;

GaussianRational coefficientFromJson(const json& v) {
  if (v.is_string()) return parseGaussianRational(v.get<std::string>());
  if (v.is_number_integer()) return GaussianRational(v.get<long>());
  fail(ErrorKind::ParseError, "coefficient must be a string or an integer");
}

TermKind kindFromString(const std::string& s) {
  if (s == "holo") return TermKind::Holomorphic;
  if (s == "mixed") return TermKind::Mixed;
  if (s == "anti") return TermKind::Antiholomorphic;
  fail(ErrorKind::ParseError, "unknown term kind '" + s + "'");
}

const char* kindName(TermKind k) {
  switch (k) {
    case TermKind::Holomorphic: return "holo";
    case TermKind::Mixed: return "mixed";
    case TermKind::Antiholomorphic: return "anti";
  }
  return "";
}

LieComplexSpec parseSpecChecked(const json& doc) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "model document must be an object");
  LieComplexSpec spec;
  spec.name = doc.value("name", std::string("unnamed"));
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    fail(ErrorKind::ParseError, "model document needs an integer 'n'");
  }
  spec.n = doc["n"].get<int>();
  if (doc.contains("d")) {
    for (const json& eq : doc.at("d")) {
      StructureEquation e;
      e.target = eq.at("target").get<int>();
      for (const json& t : eq.value("terms", json::array())) {
        StructureTerm term;
        term.coeff = coefficientFromJson(t.at("coeff"));
        term.kind = kindFromString(t.at("kind").get<std::string>());
        term.i = t.at("i").get<int>();
        term.j = t.at("j").get<int>();
        e.terms.push_back(term);
      }
      spec.d.push_back(std::move(e));
    }
  }
  if (doc.contains("metric") && !doc["metric"].is_null()) {
    if (spec.n < 1) fail(ErrorKind::ParseError, "metric given with n < 1");
    spec.metric = parseGramJson(doc["metric"], spec.n);
  }
  return spec;
}

}  // namespace

LieComplexSpec parseSpecDocument(const nlohmann::json& doc) {
  try {
    return parseSpecChecked(doc);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("malformed model document: ") + e.what());
  }
}

LieComplexSpec parseSpecText(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("model document is not JSON: ") + e.what());
  }
  return parseSpecDocument(doc);
}

nlohmann::json specToJson(const LieComplexSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["n"] = spec.n;
  json eqs = json::array();
  for (const auto& eq : spec.d) {
    json terms = json::array();
    for (const auto& t : eq.terms) {
      terms.push_back({{"coeff", formatScalar(t.coeff)},
                       {"kind", kindName(t.kind)},
                       {"i", t.i},
                       {"j", t.j}});
    }
    eqs.push_back({{"target", eq.target}, {"terms", terms}});
  }
  doc["d"] = eqs;
  if (spec.metric) doc["metric"] = gramToJson(*spec.metric);
  return doc;
}

Matrix parseGramJson(const nlohmann::json& rows, int n) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    fail(ErrorKind::ParseError, "metric must be an n×n array");
  }
  Matrix g = zeroMatrix(n, n);
  for (int r = 0; r < n; ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n) {
      fail(ErrorKind::ParseError, "metric must be an n×n array");
    }
    for (int c = 0; c < n; ++c) g(r, c) = coefficientFromJson(rows[r][c]);
  }
  return g;
}

nlohmann::json gramToJson(const Matrix& gram) {
  json rows = json::array();
  for (Index r = 0; r < gram.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < gram.cols(); ++c) row.push_back(formatScalar(gram(r, c)));
    rows.push_back(row);
  }
  return rows;
}

GradedOperator derivation(const FormBasis& basis,
                          const std::vector<Form>& generatorImages) {
  GradedOperator op(basis.dims(), DegreeMap::shift(1));
  for (int k = 0; k < basis.topDegree(); ++k) {
    const auto& monos = basis.monomials(k);
    for (Index col = 0; col < static_cast<Index>(monos.size()); ++col) {
      const Monomial m = monos[col];
      Form image;
      int position = 0;
      for (Monomial rest = m; rest; rest &= rest - 1, ++position) {
        const int g = __builtin_ctz(rest);
        const Monomial bit = Monomial{1} << g;
        const Monomial prefix = m & (bit - 1);
        const Monomial suffix = m & ~(prefix | bit);
        const Form& dg = generatorImages[g];
        if (dg.isZero()) continue;
        Form term = Form::monomial(prefix).wedge(dg).wedge(Form::monomial(suffix));
        image += (position % 2 ? GaussianRational(-1) : GaussianRational(1)) * term;
      }
      for (const auto& [mono, c] : image.terms()) {
        op.block(k)(basis.indexOf(mono), col) = c;
      }
    }
  }
  return op;
}

GradedOperator leftMultiplication(const FormBasis& basis, const Form& alpha) {
  const int r = alpha.degree();
  if (r == -2) {
    fail(ErrorKind::DimensionError, "left multiplication needs a homogeneous form");
  }
  GradedOperator op(basis.dims(), DegreeMap::shift(r < 0 ? 0 : r));
  if (r < 0) return op;
  for (int k = 0; k + r <= basis.topDegree(); ++k) {
    const auto& monos = basis.monomials(k);
    for (Index col = 0; col < static_cast<Index>(monos.size()); ++col) {
      const Form image = alpha.wedge(Form::monomial(monos[col]));
      for (const auto& [mono, c] : image.terms()) {
        op.block(k)(basis.indexOf(mono), col) = c;
      }
    }
  }
  return op;
}

Form applyToForm(const GradedOperator& op, const FormBasis& basis,
                 const Form& x) {
  Form out;
  for (int k = 0; k <= basis.topDegree(); ++k) {
    const int t = op.targetDegree(k);
    if (t < 0) continue;
    Form part;
    for (const auto& [m, c] : x.terms()) {
      if (monomialDegree(m) == k) part.add(m, c);
    }
    if (part.isZero()) continue;
    out += Form::fromCoordinates(basis, t, op.apply(k, part.coordinates(basis, k)));
  }
  return out;
}

bool shiftsBidegree(const GradedOperator& op, const FormBasis& basis, int dp,
                    int dq) {
  for (int k = 0; k <= basis.topDegree(); ++k) {
    const int t = op.targetDegree(k);
    if (t < 0) continue;
    const Matrix& b = op.block(k);
    for (Index col = 0; col < b.cols(); ++col) {
      const Bidegree src = basis.bidegree(basis.monomials(k)[col]);
      for (Index row = 0; row < b.rows(); ++row) {
        if (b(row, col).isZero()) continue;
        const Bidegree dst = basis.bidegree(basis.monomials(t)[row]);
        if (dst.p != src.p + dp || dst.q != src.q + dq) return false;
      }
    }
  }
  return true;
}

namespace {

void requireIdentity(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InternalError, "untwisted complex: " + what);
}

}  // namespace

std::shared_ptr<const InvariantComplex> buildInvariantComplex(
    const LieComplexSpec& spec, bool allowLarge) {
  const int n = spec.n;
  if (n < 1 || (!allowLarge && n > kDefaultMaxDimension) || n > 8) {
    fail(ErrorKind::SizeGuard,
         "complex dimension " + std::to_string(n) +
             " outside the supported range 1.." +
             std::to_string(allowLarge ? 8 : kDefaultMaxDimension));
  }
  auto out = std::make_shared<InvariantComplex>();
  out->spec = spec;
  out->basis = FormBasis(n);
  const FormBasis& basis = out->basis;

  std::vector<Form> holo(n);
  for (const auto& eq : spec.d) {
    if (eq.target < 1 || eq.target > n) {
      fail(ErrorKind::ParseError,
           "structure equation for generator " + std::to_string(eq.target) +
               " out of range");
    }
    for (const auto& t : eq.terms) {
      if (t.i < 1 || t.i > n || t.j < 1 || t.j > n) {
        fail(ErrorKind::ParseError, "term index out of range in d mu" +
                                        std::to_string(eq.target));
      }
      if (t.kind == TermKind::Antiholomorphic) {
        if (!t.coeff.isZero()) {
          fail(ErrorKind::NotIntegrable,
               "d mu" + std::to_string(eq.target) + " has a (0,2) part");
        }
        continue;
      }
      if (t.kind == TermKind::Holomorphic && t.i == t.j) {
        fail(ErrorKind::ParseError, "holo term with repeated index");
      }
      const Monomial a = basis.holomorphic(t.i);
      const Monomial b = t.kind == TermKind::Holomorphic
                             ? basis.holomorphic(t.j)
                             : basis.antiholomorphic(t.j);
      holo[eq.target - 1] +=
          Form::monomial(a, t.coeff).wedge(Form::monomial(b));
    }
  }

  std::vector<Form> images(2 * n), delImages(2 * n), delbarImages(2 * n);
  for (int g = 0; g < n; ++g) {
    const Form conjImage = holo[g].conjugate(basis);
    images[g] = holo[g];
    images[n + g] = conjImage;
    delImages[g] = holo[g].component(basis, {2, 0});
    delbarImages[g] = holo[g].component(basis, {1, 1});
    delImages[n + g] = conjImage.component(basis, {1, 1});
    delbarImages[n + g] = conjImage.component(basis, {0, 2});
  }
  out->generatorDifferentials = images;
  out->d = derivation(basis, images);

  for (int g = 0; g < n; ++g) {
    const Form residual = applyToForm(out->d, basis, holo[g]);
    if (!residual.isZero()) {
      fail(ErrorKind::NotALieAlgebra,
           "d^2 mu" + std::to_string(g + 1) + " = " +
               formatForm(residual, basis) + " (Jacobi identity fails)");
    }
  }

  out->del = derivation(basis, delImages);
  out->delbar = derivation(basis, delbarImages);

  GradedOperator conj(basis.dims(), DegreeMap::shift(0), Linearity::Antilinear);
  for (int k = 0; k <= basis.topDegree(); ++k) {
    const auto& monos = basis.monomials(k);
    for (Index col = 0; col < static_cast<Index>(monos.size()); ++col) {
      int sign = 1;
      const Monomial cm = basis.conjugate(monos[col], &sign);
      conj.block(k)(basis.indexOf(cm), col) = sign;
    }
  }
  out->conjugation = conj;

  const auto& del = out->del;
  const auto& delbar = out->delbar;
  requireIdentity(del + delbar == out->d, "d != del + delbar");
  requireIdentity((del * del).isZero(), "del^2 != 0");
  requireIdentity((delbar * delbar).isZero(), "delbar^2 != 0");
  requireIdentity((del * delbar + delbar * del).isZero(),
                  "del delbar + delbar del != 0");
  requireIdentity(shiftsBidegree(del, basis, 1, 0), "del leaves bidegree (p+1,q)");
  requireIdentity(shiftsBidegree(delbar, basis, 0, 1),
                  "delbar leaves bidegree (p,q+1)");
  requireIdentity(conj * conj == GradedOperator::identity(basis.dims()),
                  "conjugation is not an involution");
  requireIdentity(conj * del == delbar * conj, "conj del != delbar conj");
  return out;
}

}  // namespace twisted_hodge
