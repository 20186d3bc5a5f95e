#include "doctest.h"
#include "hessgkm/errors.hpp"
#include "hessgkm/rootsys.hpp"
#include "oracles.hpp"

using namespace hessgkm;

namespace {

struct Case {
  LieType type;
  int rank;
  std::size_t positive;
  int order;
};

const Case kCases[] = {{LieType::A, 1, 1, 2},   {LieType::A, 2, 3, 6},    {LieType::A, 3, 6, 24},
                       {LieType::A, 4, 10, 120}, {LieType::B, 2, 4, 8},   {LieType::B, 3, 9, 48},
                       {LieType::B, 4, 16, 384}, {LieType::C, 2, 4, 8},   {LieType::C, 3, 9, 48},
                       {LieType::C, 4, 16, 384}, {LieType::D, 4, 12, 192}, {LieType::G, 2, 6, 12}};

IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(Index(rows.size()), Index(rows.begin()->size()));
  Index i = 0;
  for (auto r : rows) {
    Index j = 0;
    for (auto x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntVector vec(std::initializer_list<std::int64_t> v) {
  IntVector out(Index(v.size()));
  Index i = 0;
  for (auto x : v) out(i++) = x;
  return out;
}

}  // namespace

TEST_CASE("Cartan matrices follow the convention table") {
  CHECK(build_root_system(LieType::A, 2).cartan == mat({{2, -1}, {-1, 2}}));
  // B2: a_0 long, a_1 short, so s_1(a_0) = a_0 + 2 a_1.
  CHECK(build_root_system(LieType::B, 2).cartan == mat({{2, -2}, {-1, 2}}));
  CHECK(build_root_system(LieType::C, 2).cartan == mat({{2, -1}, {-2, 2}}));
  CHECK(build_root_system(LieType::G, 2).cartan == mat({{2, -1}, {-3, 2}}));
  const auto d4 = build_root_system(LieType::D, 4).cartan;
  for (int j : {0, 2, 3}) CHECK(d4(1, j) == -1);
  CHECK(d4(0, 2) == 0);
}

TEST_CASE("positive roots and group orders match the closure oracles") {
  for (const auto& c : kCases) {
    CAPTURE(c.rank);
    const RootSystem rs = build_root_system(c.type, c.rank);
    CHECK(rs.positive_roots.size() == c.positive);
    std::set<oracle::Vec> mine;
    for (const auto& r : rs.positive_roots) mine.insert(oracle::to_vec(r));
    CHECK(mine == oracle::positive_roots(rs.cartan));
    for (Index i = 0; i < rs.cartan.rows(); ++i) {
      CHECK(rs.cartan(i, i) == 2);
      for (Index j = 0; j < rs.cartan.cols(); ++j)
        if (i != j) CHECK(rs.cartan(i, j) <= 0);
    }
    if (c.order <= 192) {
      const WeylGroup w(rs);
      CHECK(w.size() == c.order);
      CHECK(int(oracle::weyl_lengths(rs.cartan).size()) == c.order);
    }
  }
}

TEST_CASE("spec examples for root systems") {
  const RootSystem a2 = build_root_system(LieType::A, 2);
  CHECK(a2.is_positive_root(vec({1, 1})));
  const RootSystem b2 = build_root_system(LieType::B, 2);
  CHECK(b2.is_positive_root(vec({1, 2})));
  CHECK(!b2.is_positive_root(vec({2, 1})));
  CHECK(build_root_system(LieType::A, 1).positive_roots.size() == 1);
  CHECK(build_root_system(LieType::G, 2).is_positive_root(vec({3, 2})));
  CHECK_THROWS_AS(build_root_system(LieType::A, 5), UnsupportedType);
  CHECK_THROWS_AS(build_root_system(LieType::D, 3), UnsupportedType);
  CHECK_THROWS_AS(lie_type_from_char('Z'), UnsupportedType);
}

TEST_CASE("fundamental weights are dual to the coroots") {
  for (const auto& c : kCases) {
    const RootSystem rs = build_root_system(c.type, c.rank);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j)
        CHECK(rs.coroot_pairing(rs.fundamental_weights[std::size_t(i)], j) == Rational(i == j ? 1 : 0));
  }
}

TEST_CASE("group structure: lengths, closure, relations") {
  for (const auto& c : kCases) {
    if (c.order > 48) continue;
    CAPTURE(c.rank);
    const RootSystem rs = build_root_system(c.type, c.rank);
    const WeylGroup w(rs);
    const auto lengths = oracle::weyl_lengths(rs.cartan);
    for (int x = 0; x < w.size(); ++x) {
      const auto& m = w.element(x).matrix;
      CHECK(lengths.at(oracle::key(m)) == w.length(x));
      int inversions = 0;
      for (const auto& r : rs.positive_roots) {
        const IntVector img = w.act(x, r);
        CHECK((rs.is_positive_root(img) || rs.is_positive_root(-img)));
        if (oracle::negative(img)) ++inversions;
      }
      CHECK(inversions == w.length(x));
      CHECK(w.multiply(x, w.inverse(x)) == w.identity());
      CHECK(int(w.element(x).word.size()) == w.length(x));
    }
    CHECK(w.length(w.identity()) == 0);
    CHECK(w.act(w.identity(), rs.simple_root(0)) == rs.simple_root(0));
    for (int i = 0; i < rs.rank; ++i) {
      const int si = w.simple_reflection(i);
      CHECK(w.length(si) == 1);
      CHECK(w.multiply(si, si) == w.identity());
      for (int j = i + 1; j < rs.rank; ++j) {
        const std::int64_t prod = rs.cartan(i, j) * rs.cartan(j, i);
        const int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
        int x = w.identity();
        const int sij = w.multiply(si, w.simple_reflection(j));
        for (int k = 0; k < m; ++k) x = w.multiply(x, sij);
        CHECK(x == w.identity());
      }
    }
    // Reflections in arbitrary roots.
    for (const auto& r : rs.positive_roots) {
      const int s = w.reflection(r);
      CHECK(w.act(s, r) == IntVector(-r));
      CHECK(w.multiply(s, s) == w.identity());
    }
  }
}

TEST_CASE("parabolic data") {
  const RootSystem a2 = build_root_system(LieType::A, 2);
  const WeylGroup w(a2);
  const auto p1 = parabolic(a2, w, {0});
  CHECK(p1.w_theta.size() == 2);
  CHECK(p1.cosets.size() == 3);
  CHECK(parabolic(a2, w, {}).cosets.size() == 6);
  CHECK(parabolic(a2, w, {0, 1}).cosets.size() == 1);
  CHECK_THROWS_AS(parabolic(a2, w, {2}), InvalidRoot);

  for (const auto& c : kCases) {
    if (c.order > 48) continue;
    const RootSystem rs = build_root_system(c.type, c.rank);
    const WeylGroup g(rs);
    for (int mask = 0; mask < (1 << rs.rank); ++mask) {
      std::vector<int> theta;
      for (int i = 0; i < rs.rank; ++i)
        if (mask >> i & 1) theta.push_back(i);
      const auto p = parabolic(rs, g, theta);
      CHECK(p.w_theta.size() * p.cosets.size() == std::size_t(g.size()));
      // Phi_Theta^+ = positive roots supported on Theta.
      std::vector<int> expect;
      for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
        bool inside = true;
        for (int i = 0; i < rs.rank; ++i)
          if (rs.positive_roots[r](i) != 0 && !(mask >> i & 1)) inside = false;
        if (inside) expect.push_back(int(r));
      }
      CHECK(p.phi_theta_plus == expect);
      // Cosets by brute-force right multiplication.
      for (std::size_t ci = 0; ci < p.cosets.size(); ++ci) {
        const int rep = p.representatives[ci];
        std::set<int> orbit;
        for (int u : p.w_theta) orbit.insert(g.multiply(rep, u));
        CHECK(std::vector<int>(orbit.begin(), orbit.end()) == p.cosets[ci]);
        for (int x : p.cosets[ci]) {
          CHECK(p.coset_of[std::size_t(x)] == int(ci));
          if (x != rep) CHECK(g.length(x) > g.length(rep));
        }
        for (int i : theta) CHECK(!oracle::negative(g.act(rep, rs.simple_root(i))));
      }
    }
  }
}
