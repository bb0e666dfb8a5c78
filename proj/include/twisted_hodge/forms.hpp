#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twisted_hodge/matrix.hpp"

namespace twisted_hodge {

/// A wedge monomial of the 2n generators μ¹..μⁿ, μ̄¹..μ̄ⁿ, as a bitmask:
/// bit g-1 is μ^g and bit n+g-1 is μ̄^g. The monomial is always read in
/// increasing bit order, i.e. μ^I ∧ μ̄^J with I, J increasing.
using Monomial = std::uint32_t;

/// Sign of a ∧ b relative to the canonical monomial a|b, or 0 when the
/// factors share a generator.
int wedgeSign(Monomial a, Monomial b);

inline int monomialDegree(Monomial m) { return __builtin_popcount(m); }

struct Bidegree {
  int p = 0;
  int q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Ordered monomial bases of ∧^{p,q} for a fixed complex dimension n.
///
/// Degree k is the concatenation of the bidegrees (0,k), (1,k-1), ... in
/// increasing p, and each bidegree lists (I, J) with I then J in
/// lexicographic order of increasing index sets.
class FormBasis {
 public:
  struct Block {
    Bidegree bidegree;
    Index offset = 0;
    Index size = 0;
  };

  FormBasis() = default;
  explicit FormBasis(int n);

  int n() const { return n_; }
  int topDegree() const { return 2 * n_; }
  Index dim(int k) const { return static_cast<Index>(monomials_.at(k).size()); }
  std::vector<Index> dims() const;
  Index totalDim() const;

  const std::vector<Monomial>& monomials(int k) const { return monomials_.at(k); }
  const std::vector<Block>& blocks(int k) const { return blocks_.at(k); }
  Index indexOf(Monomial m) const { return index_.at(m); }
  Bidegree bidegree(Monomial m) const;

  /// "1", "mu1", "mu1^mubar3", ...
  std::string name(Monomial m) const;

  Monomial holomorphic(int g) const { return Monomial{1} << (g - 1); }
  Monomial antiholomorphic(int g) const { return Monomial{1} << (n_ + g - 1); }
  Monomial conjugate(Monomial m, int* sign) const;

 private:
  int n_ = 0;
  std::vector<std::vector<Monomial>> monomials_;
  std::vector<std::vector<Block>> blocks_;
  std::vector<Index> index_;
};

/// A form with Q(i) coefficients, stored sparsely by monomial; zero
/// coefficients are never stored.
class Form {
 public:
  Form() = default;

  static Form monomial(Monomial m, const GaussianRational& c = 1);
  static Form fromCoordinates(const FormBasis& basis, int k, const Vector& x);

  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  GaussianRational coefficient(Monomial m) const;

  /// Degree of a nonzero homogeneous form, -1 for zero, -2 if inhomogeneous.
  int degree() const;
  bool isBihomogeneous(const FormBasis& basis, Bidegree bd) const;

  void add(Monomial m, const GaussianRational& c);
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const GaussianRational& c, const Form& f);

  Form wedge(const Form& o) const;
  Form conjugate(const FormBasis& basis) const;
  /// Terms of a given bidegree.
  Form component(const FormBasis& basis, Bidegree bd) const;

  /// Coordinates in degree k; throws DimensionError for terms of another
  /// degree.
  Vector coordinates(const FormBasis& basis, int k) const;

  friend bool operator==(const Form&, const Form&) = default;

 private:
  std::map<Monomial, GaussianRational> terms_;
};

/// Form expression text, e.g. "1/2*mu1^mubar3 + 1/2*mubar1^mubar3".
/// Terms are ordered by degree, then lexicographically by generator list.
std::string formatForm(const Form& form, const FormBasis& basis);

/// Parses `term (± term)*` with term = [coeff "*"] monomial | coeff, monomial
/// = gen ("^" gen)*, gen = mu<k> | mubar<k>. Complex coefficients with both
/// parts are parenthesised: "(1/2+1/3i)*mu1". Throws ParseError.
Form parseForm(std::string_view text, const FormBasis& basis);

}  // namespace twisted_hodge
