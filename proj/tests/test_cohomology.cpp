#include "doctest.h"
#include "hessgkm/cohomology.hpp"
#include "hessgkm/errors.hpp"

using namespace hessgkm;

namespace {

struct Setup {
  RootSystem rs;
  WeylGroup w;
  Setup(LieType t, int r) : rs(build_root_system(t, r)), w(rs) {}
  GkmGraph graph(std::vector<int> theta, const HessIdeal& h, GkmMode mode) const {
    return build_gkm(rs, w, parabolic(rs, w, std::move(theta)), h, mode);
  }
};

// Cell count over coset representatives, written out from scratch: the
// number of tangent roots sent to negative roots.
std::vector<int> cells(const Setup& s, const std::vector<int>& theta, const std::vector<int>& roots, bool partial) {
  const auto par = parabolic(s.rs, s.w, theta);
  std::vector<int> tangent;
  for (int r : roots)
    if (!partial || !std::binary_search(par.phi_theta_plus.begin(), par.phi_theta_plus.end(), r)) tangent.push_back(r);
  std::vector<int> b(tangent.size() + 1, 0);
  const std::vector<int> verts = partial ? par.representatives : [&] {
    std::vector<int> all(std::size_t(s.w.size()));
    for (int i = 0; i < s.w.size(); ++i) all[std::size_t(i)] = i;
    return all;
  }();
  for (int x : verts) {
    int n = 0;
    for (int r : tangent) {
      const IntMatrix& m = s.w.element(x).matrix;
      const IntVector img = m * s.rs.positive_roots[std::size_t(r)];
      if (img.minCoeff() < 0) ++n;
    }
    ++b[std::size_t(n)];
  }
  return b;
}

std::vector<int> to_ints(const std::vector<Index>& v) { return std::vector<int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("spec examples for equivariant solves and betti numbers") {
  const Setup s(LieType::A, 2);
  const auto p0 = parabolic(s.rs, s.w, {});
  const auto p1 = parabolic(s.rs, s.w, {0});
  const auto flag = s.graph({}, full_ideal(s.rs, p0), GkmMode::Full);
  GradedRing ring(2);
  CHECK(solve_equivariant_degree(flag, ring, 0).rank() == 1);
  CHECK(solve_equivariant_degree(flag, ring, 1).rank() == 4);
  const auto trivial = s.graph({0}, minimal_ideal(s.rs, p1), GkmMode::Partial);
  CHECK(solve_equivariant_degree(trivial, ring, 1).rank() == 6);
  CHECK(betti(flag, 3) == std::vector<int>{1, 2, 2, 1});
  CHECK(betti(s.graph({}, simple_ideal(s.rs, p0), GkmMode::Full), 2) == std::vector<int>{1, 4, 1});
  CHECK(betti(trivial, 0) == std::vector<int>{3});
  CHECK(betti(flag, 5) == std::vector<int>{1, 2, 2, 1, 0, 0});

  const Setup b2(LieType::B, 2);
  const auto q0 = parabolic(b2.rs, b2.w, {});
  CHECK(betti_oracle_cells(b2.rs, b2.w, b2.graph({}, simple_ideal(b2.rs, q0), GkmMode::Full)) ==
        std::vector<int>{1, 6, 1});
  CHECK(betti_oracle_cells(s.rs, s.w, flag) == std::vector<int>{1, 2, 2, 1});

  CHECK_THROWS_AS(betti_from_dims({1, 0}, 2), NegativeBetti);
  CHECK(betti_from_dims({1, 2, 3}, 2) == std::vector<int>{1, 0, 0});
}

TEST_CASE("GKM betti numbers equal the cell count") {
  const std::pair<LieType, int> systems[] = {{LieType::A, 2}, {LieType::B, 2}, {LieType::C, 2},
                                             {LieType::G, 2}, {LieType::A, 3}};
  for (const auto& [type, rank] : systems) {
    const Setup s(type, rank);
    for (int mask = 0; mask < (1 << rank); ++mask) {
      std::vector<int> theta;
      for (int i = 0; i < rank; ++i)
        if (mask >> i & 1) theta.push_back(i);
      if (rank == 3 && theta.size() > 1) continue;
      const auto par = parabolic(s.rs, s.w, theta);
      for (const auto& h : enumerate_theta_ideals(s.rs, par))
        for (GkmMode mode : {GkmMode::Full, GkmMode::Partial}) {
          CAPTURE(s.rs.name());
          CAPTURE(mask);
          CAPTURE(h.roots.size());
          const auto g = build_gkm(s.rs, s.w, par, h, mode);
          const auto b = betti(g, g.dimension());
          CHECK(b == cells(s, theta, h.roots, mode == GkmMode::Partial));
          CHECK(b == betti_oracle_cells(s.rs, s.w, g));
          int sum = 0;
          for (int x : b) sum += x;
          CHECK(sum == g.num_vertices());
          if (g.connected_components() == 1)
            for (std::size_t k = 0; k < b.size(); ++k) CHECK(b[k] == b[b.size() - 1 - k]);
        }
    }
  }
}

TEST_CASE("larger rank-three cases") {
  for (LieType t : {LieType::B, LieType::C}) {
    const Setup s(t, 3);
    const auto par = parabolic(s.rs, s.w, {});
    for (const auto& h : {minimal_ideal(s.rs, par), simple_ideal(s.rs, par), full_ideal(s.rs, par)}) {
      const auto g = build_gkm(s.rs, s.w, par, h, GkmMode::Full);
      CHECK(betti(g, g.dimension()) == cells(s, {}, h.roots, false));
    }
  }
}

TEST_CASE("solution bases satisfy the constraints") {
  const Setup s(LieType::B, 2);
  const auto par = parabolic(s.rs, s.w, {1});
  const auto g = s.graph({1}, full_ideal(s.rs, par), GkmMode::Partial);
  GkmCohomology h(s.rs, s.w, g);
  for (int k = 0; k <= 4; ++k) {
    const auto& sol = h.solutions(k);
    for (Index i = 0; i < sol.rank(); ++i) {
      const QVector v = sol.row(i).transpose();
      CHECK(satisfies_constraints(g, h.to_piecewise(k, v)));
      CHECK(h.from_piecewise(h.to_piecewise(k, v)) == v);
    }
    // Equivariant dims follow from the ordinary betti numbers.
    Index expect = 0;
    for (int j = 0; j <= std::min(k, g.dimension()); ++j) expect += Index(h.betti()[std::size_t(j)]) * graded_dimension(2, k - j);
    CHECK(sol.rank() == expect);
  }
}

TEST_CASE("Chern classes") {
  const Setup s(LieType::A, 2);
  const auto p0 = parabolic(s.rs, s.w, {});
  const auto p1 = parabolic(s.rs, s.w, {0});
  const auto flag = s.graph({}, full_ideal(s.rs, p0), GkmMode::Full);
  const auto c1 = chern_class(s.rs, s.w, flag, s.rs.fundamental_weights[0]);
  CHECK(c1.values.size() == 6);
  CHECK(satisfies_constraints(flag, c1));
  const auto zero = chern_class(s.rs, s.w, flag, QVector::Zero(2));
  for (const auto& v : zero.values) CHECK(v.is_zero());
  const auto plane = s.graph({0}, full_ideal(s.rs, p1), GkmMode::Partial);
  const auto c2 = chern_class(s.rs, s.w, plane, s.rs.fundamental_weights[1]);
  CHECK(c2.values.size() == 3);
  CHECK(satisfies_constraints(plane, c2));
  CHECK_THROWS_AS(chern_class(s.rs, s.w, plane, s.rs.fundamental_weights[0]), ModeError);

  // Borel: on a full flag variety the Chern classes of the fundamental
  // weights span H^2 and generate the ring.
  for (auto [t, r] : {std::pair{LieType::A, 2}, std::pair{LieType::B, 2}, std::pair{LieType::A, 3}}) {
    const Setup f(t, r);
    const auto par = parabolic(f.rs, f.w, {});
    GkmCohomology h(f.rs, f.w, f.graph({}, full_ideal(f.rs, par), GkmMode::Full));
    std::vector<QVector> layer{QVector::Ones(1)};
    std::vector<QVector> degree1;
    for (const auto& om : f.rs.fundamental_weights)
      degree1.push_back(h.ordinary_coordinates(1, h.from_piecewise(chern_class(f.rs, f.w, h.graph(), om))));
    const auto& ring = h.ring();
    for (int k = 1; k <= h.top_degree(); ++k) {
      std::vector<QVector> next;
      for (const auto& x : layer)
        for (const auto& y : degree1) next.push_back(ring.multiply(k - 1, x, 1, y));
      QRowMatrix m(Index(next.size()), ring.dims[std::size_t(k)]);
      for (std::size_t i = 0; i < next.size(); ++i) m.row(Index(i)) = next[i].transpose();
      CHECK(rank(m) == ring.dims[std::size_t(k)]);
      layer = std::move(next);
    }
  }
}

TEST_CASE("ordinary ring structure") {
  const Setup s(LieType::A, 2);
  const auto p0 = parabolic(s.rs, s.w, {});
  GkmCohomology pet(s.rs, s.w, s.graph({}, simple_ideal(s.rs, p0), GkmMode::Full));
  const auto& ring = pet.ring();
  CHECK(to_ints(ring.dims) == std::vector<int>{1, 4, 1});
  CHECK(rank(ring.pairing(1)) == 4);
  CHECK(pet.generators(0).size() == 1);
  for (Index u = 0; u < 6; ++u) CHECK(pet.generators(0)[0](u) == Rational(1));
  // The unit acts as the identity.
  for (int k = 0; k <= 2; ++k)
    for (Index i = 0; i < ring.dims[std::size_t(k)]; ++i) {
      QVector e = QVector::Zero(ring.dims[std::size_t(k)]);
      e(i) = Rational(1);
      CHECK(ring.multiply(0, QVector::Ones(1), k, e) == e);
    }
  // Commutativity and associativity of the structure constants.
  const Setup b2(LieType::B, 2);
  const auto q = parabolic(b2.rs, b2.w, {});
  GkmCohomology flag(b2.rs, b2.w, b2.graph({}, full_ideal(b2.rs, q), GkmMode::Full));
  const auto& r = flag.ring();
  CHECK(to_ints(r.dims) == std::vector<int>{1, 2, 2, 2, 1});
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index l = 0; l < 2; ++l) {
        QVector x = QVector::Zero(2), y = QVector::Zero(2), z = QVector::Zero(2);
        x(i) = y(j) = z(l) = Rational(1);
        CHECK(r.multiply(1, x, 1, y) == r.multiply(1, y, 1, x));
        CHECK(r.multiply(2, r.multiply(1, x, 1, y), 1, z) == r.multiply(1, x, 2, r.multiply(1, y, 1, z)));
      }
  for (int k = 0; k <= 4; ++k) CHECK(rank(r.pairing(k)) == r.dims[std::size_t(k)]);
}

TEST_CASE("products of classes are classes and point classes integrate to one") {
  const Setup s(LieType::G, 2);
  for (std::vector<int> theta : {std::vector<int>{}, std::vector<int>{1}}) {
    const auto par = parabolic(s.rs, s.w, theta);
    for (const auto& h : enumerate_theta_ideals(s.rs, par)) {
      GkmCohomology c(s.rs, s.w, build_gkm(s.rs, s.w, par, h, theta.empty() ? GkmMode::Full : GkmMode::Partial));
      const int d = c.top_degree();
      for (int a = 0; a <= d; ++a)
        for (int b = a; a + b <= d; ++b)
          for (const auto& x : c.generators(a))
            for (const auto& y : c.generators(b)) CHECK_NOTHROW(c.ordinary_coordinates(a + b, c.vertex_product(a, x, b, y)));
      for (int v = 0; v < c.num_vertices(); ++v) {
        PiecewisePolynomial f;
        f.degree = d;
        f.values.assign(std::size_t(c.num_vertices()), Polynomial(2));
        Polynomial e = Polynomial::constant(2, Rational(1));
        for (const auto& t : c.graph().tangent_weights(s.rs, s.w, v)) e = e * Polynomial::linear(t.cast<Rational>());
        f.values[std::size_t(v)] = e;
        CHECK(satisfies_constraints(c.graph(), f));
        CHECK(c.integrate(c.from_piecewise(f)) == Rational(1));
      }
    }
  }
}
