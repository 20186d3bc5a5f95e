// Polynomials over Q in the simple-root variables a_0, ..., a_{n-1}.
//
// Monomials are ordered graded-lexicographically: lower total degree first,
// and within one degree lexicographically descending (a_0^k comes first).
// The dense degree-k coordinates used by the solvers follow the same order.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hessgkm/linalg.hpp"
#include "hessgkm/rootsys.hpp"

namespace hessgkm {

using Exponent = std::vector<int>;

struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

int total_degree(const Exponent& e);

class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GradedLex>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(const Exponent& e, const Rational& c = Rational(1));
  static Polynomial linear(const QVector& coeffs);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(int k) const;
  Rational coefficient(const Exponent& e) const;
  Rational evaluate(const QVector& point) const;

  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(int k) const;
  std::string str() const;

 private:
  int nvars_;
  Terms terms_;
};

/// Nonzero degree-one polynomial, stored by its coefficient vector.
class LinearForm {
 public:
  explicit LinearForm(QVector coeffs);
  static LinearForm from_root(const IntVector& root);

  const QVector& coeffs() const { return coeffs_; }
  int nvars() const { return int(coeffs_.size()); }
  /// Lowest-index variable with nonzero coefficient.
  int pivot() const { return pivot_; }
  Polynomial polynomial() const { return Polynomial::linear(coeffs_); }
  /// Scaled so that the first nonzero coefficient is positive.
  LinearForm normalized_sign() const;

 private:
  QVector coeffs_;
  int pivot_ = -1;
};

/// p(x) -> p(images), where variable i is replaced by sum_j images(j, i) x_j.
Polynomial substitute(const Polynomial& p, const QMatrix& images);

/// The Weyl group action extended to polynomials: a_i -> w(a_i).
Polynomial act(const WeylGroup& group, int w, const Polynomial& p);

/// True iff p lies in the principal ideal generated by the form.
bool divides(const LinearForm& form, const Polynomial& p);

/// (1/|G|) sum_{g in G} g(p).
Polynomial reynolds(const WeylGroup& group, const std::vector<int>& elements, const Polynomial& p);

/// Degree-k monomials in n variables, in the fixed order.
class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  Index size() const { return Index(monomials_.size()); }
  const Exponent& operator[](Index i) const { return monomials_[std::size_t(i)]; }
  Index index_of(const Exponent& e) const;

 private:
  int nvars_;
  int degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, Index> index_;
};

/// C(m + n - 1, n - 1), the dimension of the degree-m piece.
Index graded_dimension(int nvars, int m);

QVector to_dense(const Polynomial& p, const MonomialBasis& basis);
Polynomial from_dense(const QVector& v, const MonomialBasis& basis);

/// Cached dense data for one polynomial ring: monomial bases per degree,
/// products of graded pieces, and linear substitutions as matrices.
/// Not safe for concurrent use; each computation owns its own instance.
class GradedRing {
 public:
  explicit GradedRing(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const MonomialBasis& basis(int k);
  Index dim(int k) { return basis(k).size(); }

  /// index(i * dim(b) + j) = position of monomial_i(a) * monomial_j(b) in degree a + b.
  const std::vector<Index>& product_index(int a, int b);
  /// Product of dense homogeneous pieces.
  QVector multiply(int a, const QVector& x, int b, const QVector& y);

  /// Matrix of the substitution on degree k (columns = images of monomials).
  QMatrix substitution_matrix(const QMatrix& images, int k);
  /// Rows whose common kernel in degree k is (form) intersected with R_k.
  QRowMatrix divisibility_rows(const LinearForm& form, int k);

 private:
  int nvars_;
  std::map<int, std::unique_ptr<MonomialBasis>> bases_;
  std::map<std::pair<int, int>, std::vector<Index>> products_;
};

QMatrix weyl_matrix_as_rational(const WeylGroup& group, int w);

}  // namespace hessgkm
