// Equivariant and ordinary cohomology of a GKM graph by degreewise exact
// linear algebra.
//
// A degree-k class is a vector in the ambient space Q^{V * dim R_k}: vertex
// blocks in vertex order, each block the dense coefficients of a homogeneous
// polynomial in the monomial order of polyring.hpp. The solution space S_k is
// held in echelon form; H^{2k} is S_k modulo M_k = R_+ * (lower generators),
// with the echelon-canonical complement of M_k as its basis.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hessgkm/gkm.hpp"
#include "hessgkm/linalg.hpp"
#include "hessgkm/polyring.hpp"
#include "json.hpp"

namespace hessgkm {

struct PiecewisePolynomial {
  int degree = 0;
  std::vector<Polynomial> values;
};

/// Storage for solved degrees, keyed by a canonical description of the
/// constraint system.
class SolutionCache {
 public:
  virtual ~SolutionCache() = default;
  virtual std::optional<QEchelon> load(const std::string& key) = 0;
  virtual void store(const std::string& key, const QEchelon& solutions) = 0;
};

/// Canonical text of the constraint system of `graph` in degree k.
std::string solve_key(const GkmGraph& graph, int k);

/// Echelon basis of the degree-k solution space.
QEchelon solve_equivariant_degree(const GkmGraph& graph, GradedRing& ring, int k);

/// Betti numbers b_0..b_{k_max} from the freeness recursion; throws
/// NegativeBetti.
std::vector<int> betti(const GkmGraph& graph, int k_max);
std::vector<int> betti_from_dims(const std::vector<Index>& dims, int nvars);

/// Independent count: b_k = #{vertices w : #{alpha : w(alpha) < 0} = k} with
/// alpha over the tangent roots of the graph.
std::vector<int> betti_oracle_cells(const RootSystem& rs, const WeylGroup& group, const GkmGraph& graph);

/// Values w(chi) at every vertex. ModeError when the graph is partial and chi
/// is not fixed by the simple reflections of Theta.
PiecewisePolynomial chern_class(const RootSystem& rs, const WeylGroup& group, const GkmGraph& graph,
                                const QVector& chi);

bool satisfies_constraints(const GkmGraph& graph, const PiecewisePolynomial& f);

/// Finite-dimensional graded commutative algebra given by structure constants.
struct RingPresentation {
  std::vector<Index> dims;
  /// products[{a, b}](i * dims[b] + j, l): coefficient of basis element l of
  /// degree a + b in e^a_i * e^b_j; only for a + b <= top degree.
  std::map<std::pair<int, int>, QMatrix> products;
  /// Values of the integration map on the top-degree basis.
  QVector integral;

  int top_degree() const { return int(dims.size()) - 1; }
  QVector multiply(int a, const QVector& x, int b, const QVector& y) const;
  Rational integrate(const QVector& top) const { return integral.dot(top); }
  QMatrix pairing(int k) const;
  nlohmann::json to_json() const;
};

class GkmCohomology {
 public:
  GkmCohomology(const RootSystem& rs, const WeylGroup& group, GkmGraph graph, SolutionCache* cache = nullptr);

  const GkmGraph& graph() const { return graph_; }
  const RootSystem& roots() const { return *rs_; }
  const WeylGroup& group() const { return *group_; }
  GradedRing& poly() { return poly_; }
  int nvars() const { return graph_.nvars; }
  int top_degree() const { return graph_.dimension(); }
  int num_vertices() const { return graph_.num_vertices(); }

  const std::vector<int>& betti() const { return betti_; }
  Index block(int k) { return poly_.dim(k); }
  /// Solution space of degree k; degrees above the top are solved on demand.
  const QEchelon& solutions(int k);
  Index equivariant_dim(int k) { return solutions(k).rank(); }
  /// Ambient vectors of the module generators of degree k (k <= top).
  const std::vector<QVector>& generators(int k) const { return generators_[std::size_t(k)]; }
  /// Coordinates in the ordinary basis of H^{2k}; throws if `v` is not a
  /// degree-k class.
  QVector ordinary_coordinates(int k, const QVector& v);
  /// Ordinary coordinates of the degree-k classes, zero above the top.
  QVector ordinary_coordinates_or_zero(int k, const QVector& v);

  QVector vertex_product(int a, const QVector& x, int b, const QVector& y);
  /// The polynomial m times x, vertexwise.
  QVector scalar_product(int a, const QVector& m, int b, const QVector& x);
  /// Localization integral of a top-degree class.
  Rational integrate(const QVector& top);

  /// Ordinary ring with structure constants in the generator basis.
  const RingPresentation& ring();

  PiecewisePolynomial to_piecewise(int k, const QVector& v);
  QVector from_piecewise(const PiecewisePolynomial& f);

  /// Dense action matrix of group element w on R_k.
  const QMatrix& weyl_matrix(int w, int k);

  std::size_t cache_hits() const { return cache_hits_; }

 private:
  void compute();

  const RootSystem* rs_;
  const WeylGroup* group_;
  GkmGraph graph_;
  SolutionCache* cache_;
  GradedRing poly_;
  std::map<int, QEchelon> solutions_;
  std::vector<int> betti_;
  std::vector<QEchelon> module_part_;
  std::vector<std::vector<Index>> free_columns_;
  std::vector<std::vector<QVector>> generators_;
  std::optional<RingPresentation> ring_;
  std::map<std::pair<int, int>, QMatrix> weyl_matrices_;
  std::size_t cache_hits_ = 0;
};

}  // namespace hessgkm
