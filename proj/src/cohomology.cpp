#include "hessgkm/cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "hessgkm/errors.hpp"

namespace hessgkm {

namespace {

std::string label_key(const IntVector& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
  return s;
}

// Values of all degree-k monomials at `point`.
std::vector<Rational> monomial_values(const MonomialBasis& basis, const QVector& point) {
  std::vector<Rational> out;
  out.reserve(std::size_t(basis.size()));
  for (Index i = 0; i < basis.size(); ++i) {
    Rational v(1);
    for (std::size_t j = 0; j < basis[i].size(); ++j)
      for (int e = 0; e < basis[i][j]; ++e) v *= point(Index(j));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::string solve_key(const GkmGraph& graph, int k) {
  std::ostringstream os;
  os << "gkm-solve/1 n=" << graph.nvars << " V=" << graph.num_vertices() << " k=" << k << " E=";
  for (const auto& e : graph.edges) os << e.u << ':' << e.v << ':' << label_key(e.label) << ';';
  return os.str();
}

QEchelon solve_equivariant_degree(const GkmGraph& graph, GradedRing& ring, int k) {
  const Index p = ring.dim(k);
  const Index n = Index(graph.num_vertices()) * p;
  std::map<std::string, QRowMatrix> rows_by_label;
  Index total = 0;
  for (const auto& e : graph.edges) {
    auto [it, inserted] = rows_by_label.try_emplace(label_key(e.label));
    if (inserted) {
      QVector coeffs = e.label.cast<Rational>();
      it->second = ring.divisibility_rows(LinearForm(coeffs), k);
    }
    total += it->second.rows();
  }
  QRowMatrix a = QRowMatrix::Zero(total, n);
  Index r0 = 0;
  for (const auto& e : graph.edges) {
    const QRowMatrix& d = rows_by_label.at(label_key(e.label));
    for (Index r = 0; r < d.rows(); ++r)
      for (Index c = 0; c < p; ++c) {
        if (d(r, c).is_zero()) continue;
        a(r0 + r, Index(e.u) * p + c) = d(r, c);
        a(r0 + r, Index(e.v) * p + c) = -d(r, c);
      }
    r0 += d.rows();
  }
  return QEchelon::kernel_of(std::move(a));
}

std::vector<int> betti_from_dims(const std::vector<Index>& dims, int nvars) {
  std::vector<int> b;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    Index v = dims[k];
    for (std::size_t j = 0; j < k; ++j) v -= Index(b[j]) * graded_dimension(nvars, int(k - j));
    if (v < 0)
      throw NegativeBetti("degree " + std::to_string(k) + " gives " + std::to_string(v));
    b.push_back(int(v));
  }
  return b;
}

std::vector<int> betti(const GkmGraph& graph, int k_max) {
  GradedRing ring(graph.nvars);
  std::vector<Index> dims;
  for (int k = 0; k <= k_max; ++k) dims.push_back(solve_equivariant_degree(graph, ring, k).rank());
  return betti_from_dims(dims, graph.nvars);
}

std::vector<int> betti_oracle_cells(const RootSystem& rs, const WeylGroup& group, const GkmGraph& graph) {
  std::vector<int> b(std::size_t(graph.dimension() + 1), 0);
  for (int w : graph.vertices) {
    int count = 0;
    for (int a : graph.tangent_roots)
      if ((group.act(w, rs.positive_roots[std::size_t(a)]).array() < 0).any()) ++count;
    ++b[std::size_t(count)];
  }
  return b;
}

PiecewisePolynomial chern_class(const RootSystem& rs, const WeylGroup& group, const GkmGraph& graph,
                                const QVector& chi) {
  if (graph.mode == GkmMode::Partial) {
    for (int i : graph.theta) {
      const Rational pairing = rs.coroot_pairing(chi, i);
      if (!pairing.is_zero())
        throw ModeError("weight is not fixed by s_" + std::to_string(i + 1) + " on a partial graph");
    }
  }
  PiecewisePolynomial f;
  f.degree = 1;
  for (int w : graph.vertices) f.values.push_back(Polynomial::linear(group.act(w, chi)));
  return f;
}

bool satisfies_constraints(const GkmGraph& graph, const PiecewisePolynomial& f) {
  for (const auto& e : graph.edges) {
    const Polynomial diff = f.values[std::size_t(e.u)] - f.values[std::size_t(e.v)];
    if (!divides(LinearForm(e.label.cast<Rational>()), diff)) return false;
  }
  return true;
}

QVector RingPresentation::multiply(int a, const QVector& x, int b, const QVector& y) const {
  if (a + b > top_degree()) return QVector(0);
  const QMatrix& m = products.at({a, b});
  const Index db = dims[std::size_t(b)];
  QVector out = QVector::Zero(dims[std::size_t(a + b)]);
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < y.size(); ++j) {
      if (y(j).is_zero()) continue;
      const Rational f = x(i) * y(j);
      for (Index l = 0; l < out.size(); ++l)
        if (!m(i * db + j, l).is_zero()) out(l) += f * m(i * db + j, l);
    }
  }
  return out;
}

QMatrix RingPresentation::pairing(int k) const {
  const int d = top_degree();
  const Index r = dims[std::size_t(k)], c = dims[std::size_t(d - k)];
  QMatrix out(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) {
      QVector x = QVector::Zero(r), y = QVector::Zero(c);
      x(i) = 1;
      y(j) = 1;
      out(i, j) = integrate(multiply(k, x, d - k, y));
    }
  return out;
}

nlohmann::json RingPresentation::to_json() const {
  nlohmann::json j;
  j["dims"] = dims;
  auto& sc = j["structure_constants"] = nlohmann::json::array();
  for (const auto& [ab, m] : products) {
    if (ab.first > ab.second) continue;
    const Index db = dims[std::size_t(ab.second)];
    for (Index r = 0; r < m.rows(); ++r)
      for (Index l = 0; l < m.cols(); ++l)
        if (!m(r, l).is_zero())
          sc.push_back({ab.first, r / db, ab.second, r % db, l, m(r, l).str()});
  }
  auto& in = j["integral"] = nlohmann::json::array();
  for (Index i = 0; i < integral.size(); ++i) in.push_back(integral(i).str());
  return j;
}

GkmCohomology::GkmCohomology(const RootSystem& rs, const WeylGroup& group, GkmGraph graph, SolutionCache* cache)
    : rs_(&rs), group_(&group), graph_(std::move(graph)), cache_(cache), poly_(graph_.nvars) {
  compute();
}

const QEchelon& GkmCohomology::solutions(int k) {
  auto it = solutions_.find(k);
  if (it != solutions_.end()) return it->second;
  const Index ambient = Index(num_vertices()) * poly_.dim(k);
  std::string key;
  if (cache_) {
    key = solve_key(graph_, k);
    if (auto hit = cache_->load(key); hit && hit->ambient_dim() == ambient) {
      ++cache_hits_;
      return solutions_.emplace(k, std::move(*hit)).first->second;
    }
  }
  QEchelon s = solve_equivariant_degree(graph_, poly_, k);
  if (cache_) cache_->store(key, s);
  return solutions_.emplace(k, std::move(s)).first->second;
}

void GkmCohomology::compute() {
  const int d = top_degree();
  const Index nv = num_vertices();
  for (int k = 0; k <= d; ++k) {
    const QEchelon& s = solutions(k);
    const Index pk = poly_.dim(k);
    std::vector<QVector> rows;
    for (int j = 0; j < k; ++j) {
      const Index pj = poly_.dim(j), pm = poly_.dim(k - j);
      const auto& idx = poly_.product_index(j, k - j);
      for (const QVector& g : generators_[std::size_t(j)])
        for (Index m = 0; m < pm; ++m) {
          QVector v = QVector::Zero(nv * pk);
          for (Index u = 0; u < nv; ++u)
            for (Index i = 0; i < pj; ++i)
              if (!g(u * pj + i).is_zero()) v(u * pk + idx[std::size_t(i * pm + m)]) = g(u * pj + i);
          rows.push_back(s.coordinates(v));
        }
    }
    QRowMatrix mrows(Index(rows.size()), s.rank());
    for (std::size_t r = 0; r < rows.size(); ++r) mrows.row(Index(r)) = rows[r].transpose();
    QEchelon m = QEchelon::from_rows(std::move(mrows));
    if (m.rank() != Index(rows.size()))
      throw NegativeBetti("solution module is not free in degree " + std::to_string(k));
    const Index b = s.rank() - m.rank();
    if (b < 0) throw NegativeBetti("degree " + std::to_string(k) + " gives " + std::to_string(b));
    betti_.push_back(int(b));

    std::vector<char> pivot(std::size_t(s.rank()), 0);
    for (Index p : m.pivots()) pivot[std::size_t(p)] = 1;
    std::vector<Index> free;
    std::vector<QVector> gens;
    for (Index c = 0; c < s.rank(); ++c)
      if (!pivot[std::size_t(c)]) {
        free.push_back(c);
        gens.push_back(s.row(c).transpose());
      }
    module_part_.push_back(std::move(m));
    free_columns_.push_back(std::move(free));
    generators_.push_back(std::move(gens));
  }
}

QVector GkmCohomology::ordinary_coordinates(int k, const QVector& v) {
  const QEchelon& s = solutions(k);
  const QVector c = s.checked_coordinates(v);
  if (k > top_degree()) return QVector(0);
  const QVector r = module_part_[std::size_t(k)].reduce(c);
  const auto& free = free_columns_[std::size_t(k)];
  QVector out(Index(free.size()));
  for (std::size_t i = 0; i < free.size(); ++i) out(Index(i)) = r(free[i]);
  return out;
}

QVector GkmCohomology::ordinary_coordinates_or_zero(int k, const QVector& v) {
  if (k > top_degree()) return QVector(0);
  return ordinary_coordinates(k, v);
}

QVector GkmCohomology::vertex_product(int a, const QVector& x, int b, const QVector& y) {
  const Index pa = poly_.dim(a), pb = poly_.dim(b), pc = poly_.dim(a + b);
  QVector out(Index(num_vertices()) * pc);
  for (Index u = 0; u < num_vertices(); ++u)
    out.segment(u * pc, pc) = poly_.multiply(a, x.segment(u * pa, pa), b, y.segment(u * pb, pb));
  return out;
}

QVector GkmCohomology::scalar_product(int a, const QVector& m, int b, const QVector& x) {
  const Index pb = poly_.dim(b), pc = poly_.dim(a + b);
  QVector out(Index(num_vertices()) * pc);
  for (Index u = 0; u < num_vertices(); ++u) out.segment(u * pc, pc) = poly_.multiply(a, m, b, x.segment(u * pb, pb));
  return out;
}

Rational GkmCohomology::integrate(const QVector& top) {
  const int d = top_degree();
  const MonomialBasis& basis = poly_.basis(d);
  const Index p = basis.size();
  Rational results[2];
  for (int trial = 0; trial < 2; ++trial) {
    QVector point(nvars());
    for (int i = 0; i < nvars(); ++i) point(i) = trial == 0 ? Rational(1) : Rational(i + 1);
    const auto values = monomial_values(basis, point);
    Rational sum(0);
    for (Index u = 0; u < num_vertices(); ++u) {
      Rational f(0);
      for (Index i = 0; i < p; ++i)
        if (!top(u * p + i).is_zero()) f += top(u * p + i) * values[std::size_t(i)];
      if (f.is_zero()) continue;
      Rational euler(1);
      for (const auto& w : graph_.tangent_weights(*rs_, *group_, int(u))) euler *= w.cast<Rational>().dot(point);
      sum += f / euler;
    }
    results[trial] = sum;
  }
  if (results[0] != results[1]) throw Error("localization sum is not constant; input is not a class");
  return results[0];
}

const RingPresentation& GkmCohomology::ring() {
  if (ring_) return *ring_;
  RingPresentation r;
  const int d = top_degree();
  for (int k = 0; k <= d; ++k) r.dims.push_back(Index(betti_[std::size_t(k)]));
  for (int a = 0; a <= d; ++a)
    for (int b = a; a + b <= d; ++b) {
      const Index da = r.dims[std::size_t(a)], db = r.dims[std::size_t(b)], dc = r.dims[std::size_t(a + b)];
      QMatrix m(da * db, dc), mt(db * da, dc);
      for (Index i = 0; i < da; ++i)
        for (Index j = 0; j < db; ++j) {
          const QVector prod = vertex_product(a, generators_[std::size_t(a)][std::size_t(i)], b,
                                              generators_[std::size_t(b)][std::size_t(j)]);
          const QVector c = ordinary_coordinates(a + b, prod);
          m.row(i * db + j) = c.transpose();
          mt.row(j * da + i) = c.transpose();
        }
      r.products[{a, b}] = m;
      if (a != b) r.products[{b, a}] = mt;
    }
  r.integral = QVector(r.dims[std::size_t(d)]);
  for (Index i = 0; i < r.integral.size(); ++i) r.integral(i) = integrate(generators_[std::size_t(d)][std::size_t(i)]);
  ring_ = std::move(r);
  return *ring_;
}

PiecewisePolynomial GkmCohomology::to_piecewise(int k, const QVector& v) {
  PiecewisePolynomial f;
  f.degree = k;
  const MonomialBasis& basis = poly_.basis(k);
  for (Index u = 0; u < num_vertices(); ++u) f.values.push_back(from_dense(v.segment(u * basis.size(), basis.size()), basis));
  return f;
}

QVector GkmCohomology::from_piecewise(const PiecewisePolynomial& f) {
  const MonomialBasis& basis = poly_.basis(f.degree);
  QVector v(Index(num_vertices()) * basis.size());
  for (Index u = 0; u < num_vertices(); ++u) v.segment(u * basis.size(), basis.size()) = to_dense(f.values[std::size_t(u)], basis);
  return v;
}

const QMatrix& GkmCohomology::weyl_matrix(int w, int k) {
  auto it = weyl_matrices_.find({w, k});
  if (it != weyl_matrices_.end()) return it->second;
  return weyl_matrices_.emplace(std::make_pair(w, k), poly_.substitution_matrix(weyl_matrix_as_rational(*group_, w), k))
      .first->second;
}

}  // namespace hessgkm
