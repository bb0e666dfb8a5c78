#pragma once

#include <memory>
#include <string>

#include "oracle.hpp"
#include "twisted_hodge/catalog.hpp"
#include "twisted_hodge/cohomology.hpp"
#include "twisted_hodge/errors.hpp"
#include "twisted_hodge/hodge.hpp"

namespace testing {

using namespace twisted_hodge;

inline std::shared_ptr<const InvariantComplex> model(const std::string& key) {
  return buildInvariantComplex(builtinModel(key).spec);
}

inline TwistedComplex twisted(const std::string& key, const std::string& t1,
                              const std::string& t2) {
  auto c = model(key);
  return twistedComplex(c, parseTwist(t1, c->basis), parseTwist(t2, c->basis));
}

inline Form form(const InvariantComplex& c, const std::string& text) {
  return parseForm(text, c.basis);
}

inline GaussianRational gr(const std::string& text) { return parseGaussianRational(text); }

inline GaussianRational fromOracle(const oracle::C& c) {
  auto toMpq = [](const oracle::Q& q) {
    return mpq_class(mpz_class(numerator(q).str()), mpz_class(denominator(q).str()));
  };
  return {toMpq(c.re), toMpq(c.im)};
}

inline Matrix fromOracle(const oracle::Dense& a, int cols) {
  Matrix m(static_cast<Index>(a.size()), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int j = 0; j < cols; ++j) m(static_cast<Index>(i), j) = fromOracle(a[i][j]);
  }
  return m;
}

/// Gram matrix from JSON-ish rows of coefficient strings.
inline Matrix gram(std::initializer_list<std::initializer_list<const char*>> rows) {
  const Index n = static_cast<Index>(rows.size());
  Matrix g(n, n);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const char* entry : row) g(i, j++) = parseGaussianRational(entry);
    ++i;
  }
  return g;
}

}  // namespace testing
