#include "hessgkm/polyring.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hessgkm {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponent(std::size_t(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Exponent e(std::size_t(nvars), 0);
  e[std::size_t(i)] = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(int(e.size()));
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(const QVector& coeffs) {
  const int n = int(coeffs.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponent e(std::size_t(n), 0);
    e[std::size_t(i)] = 1;
    p.add_term(e, coeffs(i));
  }
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Polynomial Polynomial::homogeneous_part(int k) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == k) p.terms_.emplace(e, c);
  return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::evaluate(const QVector& point) const {
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point(Index(i));
    total += t;
  }
  return total;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  if (int(e.size()) != nvars_) throw std::invalid_argument("Polynomial: exponent length mismatch");
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial p(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r = constant(nvars_, Rational(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    if (!first) {
      os << (coeff.sign() < 0 ? " - " : " + ");
      coeff = abs(coeff);
    } else if (coeff.sign() < 0) {
      os << "-";
      coeff = abs(coeff);
    }
    first = false;
    const bool constant_term = total_degree(e) == 0;
    if (!coeff.is_one() || constant_term) os << coeff;
    bool need_sep = !coeff.is_one();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_sep) os << "*";
      os << "a" << i + 1;
      if (e[i] > 1) os << "^" << e[i];
      need_sep = true;
    }
  }
  return os.str();
}

LinearForm::LinearForm(QVector coeffs) : coeffs_(std::move(coeffs)) {
  for (Index i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_(i).is_zero()) {
      pivot_ = int(i);
      break;
    }
  if (pivot_ < 0) throw std::invalid_argument("LinearForm: zero form");
}

LinearForm LinearForm::from_root(const IntVector& root) {
  QVector c(root.size());
  for (Index i = 0; i < root.size(); ++i) c(i) = Rational(root(i));
  return LinearForm(std::move(c));
}

LinearForm LinearForm::normalized_sign() const {
  if (coeffs_(pivot_).sign() > 0) return *this;
  QVector c = coeffs_;
  for (Index i = 0; i < c.size(); ++i) c(i) = -c(i);
  return LinearForm(std::move(c));
}

Polynomial substitute(const Polynomial& p, const QMatrix& images) {
  const int n = int(images.rows());
  std::vector<Polynomial> lin;
  for (Index i = 0; i < images.cols(); ++i) lin.push_back(Polynomial::linear(images.col(i)));
  Polynomial out(n);
  for (const auto& [e, c] : p.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * lin[i].pow(e[i]);
    out += t;
  }
  return out;
}

QMatrix weyl_matrix_as_rational(const WeylGroup& group, int w) {
  const IntMatrix& m = group.element(w).matrix;
  QMatrix q(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

Polynomial act(const WeylGroup& group, int w, const Polynomial& p) {
  return substitute(p, weyl_matrix_as_rational(group, w));
}

namespace {

// Images of the variables under restriction to the hyperplane form = 0,
// solving for the pivot variable.
QMatrix hyperplane_substitution(const LinearForm& form) {
  const int n = form.nvars();
  const int p = form.pivot();
  QMatrix images = QMatrix::Identity(n, n);
  const Rational lead = form.coeffs()(p);
  for (int j = 0; j < n; ++j) images(j, p) = j == p ? Rational(0) : -form.coeffs()(j) / lead;
  return images;
}

}  // namespace

bool divides(const LinearForm& form, const Polynomial& p) {
  return substitute(p, hyperplane_substitution(form)).is_zero();
}

Polynomial reynolds(const WeylGroup& group, const std::vector<int>& elements, const Polynomial& p) {
  Polynomial sum(p.nvars());
  for (int w : elements) sum += act(group, w, p);
  return sum * Rational(1, std::int64_t(elements.size()));
}

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  // Lexicographically descending enumeration of compositions of `degree`.
  Exponent e(std::size_t(nvars), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars - 1) {
      e[std::size_t(pos)] = left;
      monomials_.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[std::size_t(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (nvars == 0) {
    if (degree == 0) monomials_.push_back({});
  } else {
    rec(rec, 0, degree);
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], Index(i));
}

Index MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw std::out_of_range("MonomialBasis: monomial of wrong degree");
  return it->second;
}

Index graded_dimension(int nvars, int m) {
  if (m < 0) return 0;
  if (nvars == 0) return m == 0 ? 1 : 0;
  // C(m + n - 1, n - 1)
  Index r = 1;
  for (int i = 1; i <= nvars - 1; ++i) r = r * (m + i) / i;
  return r;
}

QVector to_dense(const Polynomial& p, const MonomialBasis& basis) {
  QVector v = QVector::Zero(basis.size());
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != basis.degree()) throw std::invalid_argument("to_dense: wrong degree");
    v(basis.index_of(e)) = c;
  }
  return v;
}

Polynomial from_dense(const QVector& v, const MonomialBasis& basis) {
  Polynomial p(basis.nvars());
  for (Index i = 0; i < v.size(); ++i) p.add_term(basis[i], v(i));
  return p;
}

const MonomialBasis& GradedRing::basis(int k) {
  auto it = bases_.find(k);
  if (it == bases_.end()) it = bases_.emplace(k, std::make_unique<MonomialBasis>(nvars_, k)).first;
  return *it->second;
}

const std::vector<Index>& GradedRing::product_index(int a, int b) {
  auto key = std::make_pair(a, b);
  auto it = products_.find(key);
  if (it != products_.end()) return it->second;
  const MonomialBasis& ba = basis(a);
  const MonomialBasis& bb = basis(b);
  const MonomialBasis& bc = basis(a + b);
  std::vector<Index> idx(std::size_t(ba.size() * bb.size()));
  for (Index i = 0; i < ba.size(); ++i)
    for (Index j = 0; j < bb.size(); ++j) {
      Exponent e = ba[i];
      for (std::size_t t = 0; t < e.size(); ++t) e[t] += bb[j][t];
      idx[std::size_t(i * bb.size() + j)] = bc.index_of(e);
    }
  return products_.emplace(key, std::move(idx)).first->second;
}

QVector GradedRing::multiply(int a, const QVector& x, int b, const QVector& y) {
  const auto& idx = product_index(a, b);
  const Index nb = dim(b);
  QVector out = QVector::Zero(dim(a + b));
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < nb; ++j) {
      if (y(j).is_zero()) continue;
      out(idx[std::size_t(i * nb + j)]) += x(i) * y(j);
    }
  }
  return out;
}

QMatrix GradedRing::substitution_matrix(const QMatrix& images, int k) {
  const MonomialBasis& b = basis(k);
  QMatrix m = QMatrix::Zero(b.size(), b.size());
  // Powers of the variable images, built incrementally in dense form.
  std::vector<std::vector<QVector>> powers(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) {
    powers[std::size_t(i)].push_back(QVector::Ones(1));
    for (int e = 1; e <= k; ++e) {
      QVector lin = images.col(i);
      powers[std::size_t(i)].push_back(multiply(e - 1, powers[std::size_t(i)][std::size_t(e - 1)], 1, lin));
    }
  }
  for (Index c = 0; c < b.size(); ++c) {
    const Exponent& e = b[c];
    QVector acc = QVector::Ones(1);
    int deg = 0;
    for (int i = 0; i < nvars_; ++i) {
      const int ei = e[std::size_t(i)];
      if (ei == 0) continue;
      acc = multiply(deg, acc, ei, powers[std::size_t(i)][std::size_t(ei)]);
      deg += ei;
    }
    m.col(c) = acc;
  }
  return m;
}

QRowMatrix GradedRing::divisibility_rows(const LinearForm& form, int k) {
  const QMatrix s = substitution_matrix(hyperplane_substitution(form), k);
  const MonomialBasis& b = basis(k);
  const int p = form.pivot();
  std::vector<Index> keep;
  for (Index i = 0; i < b.size(); ++i)
    if (b[i][std::size_t(p)] == 0) keep.push_back(i);
  QRowMatrix rows(Index(keep.size()), b.size());
  for (std::size_t r = 0; r < keep.size(); ++r) rows.row(Index(r)) = s.row(keep[r]);
  return rows;
}

}  // namespace hessgkm
