#include "doctest.h"
#include "hessgkm/errors.hpp"
#include "hessgkm/hessenberg.hpp"
#include "oracles.hpp"

using namespace hessgkm;

namespace {

IntVector vec(std::initializer_list<std::int64_t> v) {
  IntVector out(Index(v.size()));
  Index i = 0;
  for (auto x : v) out(i++) = x;
  return out;
}

std::vector<std::vector<int>> subsets_of_theta(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::vector<int> t;
    for (int i = 0; i < rank; ++i)
      if (mask >> i & 1) t.push_back(i);
    out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("spec examples for Theta-ideals") {
  const RootSystem a2 = build_root_system(LieType::A, 2);
  const WeylGroup w(a2);
  const auto p0 = parabolic(a2, w, {});
  const auto p1 = parabolic(a2, w, {0});
  const auto a1a2 = root_indices(a2, {vec({1, 0}), vec({0, 1})});
  CHECK(validate_theta_ideal(a2, p0, a1a2));
  CHECK(!validate_theta_ideal(a2, p1, a1a2));
  CHECK(validate_theta_ideal(a2, p1, root_indices(a2, {vec({1, 0})})));
  CHECK(enumerate_theta_ideals(a2, p0).size() == 5);
  const auto e1 = enumerate_theta_ideals(a2, p1);
  REQUIRE(e1.size() == 2);
  CHECK(e1[0].roots == root_indices(a2, {vec({1, 0})}));
  CHECK(e1[1].dim_over_b() == 3);
  const auto all = enumerate_theta_ideals(a2, parabolic(a2, w, {0, 1}));
  REQUIRE(all.size() == 1);
  CHECK(all[0] == full_ideal(a2, parabolic(a2, w, {0, 1})));
  CHECK_THROWS_AS(root_indices(a2, {vec({2, 1})}), InvalidRoot);
  CHECK_THROWS_AS(root_indices(a2, {vec({1, 0, 0})}), InvalidRoot);
  CHECK_THROWS_AS(validate_theta_ideal(a2, p0, {7}), InvalidRoot);
  CHECK_THROWS_AS(make_ideal(a2, p1, a1a2), InvalidIdeal);
}

TEST_CASE("Theta-ideals agree with the direct bracket oracle") {
  const std::pair<LieType, int> systems[] = {{LieType::A, 2}, {LieType::B, 2}, {LieType::C, 2},
                                             {LieType::G, 2}, {LieType::A, 3}, {LieType::B, 3}};
  for (const auto& [type, rank] : systems) {
    const RootSystem rs = build_root_system(type, rank);
    const WeylGroup w(rs);
    const int npos = int(rs.positive_roots.size());
    std::vector<std::vector<int>> previous;
    for (const auto& theta : subsets_of_theta(rank)) {
      CAPTURE(rs.name());
      const auto par = parabolic(rs, w, theta);
      std::vector<std::vector<int>> expect;
      for (std::uint32_t mask = 0; mask < (1U << npos); ++mask) {
        std::vector<int> roots;
        for (int r = 0; r < npos; ++r)
          if (mask >> r & 1U) roots.push_back(r);
        const bool ok = oracle::is_theta_ideal(rs, theta, roots);
        CHECK(validate_theta_ideal(rs, par, roots) == ok);
        if (ok) expect.push_back(roots);
      }
      std::vector<std::vector<int>> got;
      for (const auto& h : enumerate_theta_ideals(rs, par)) {
        got.push_back(h.roots);
        CHECK(h.theta == theta);
        CHECK(is_lower_closed(rs, h.roots));
        for (int t : par.phi_theta_plus) CHECK(std::binary_search(h.roots.begin(), h.roots.end(), t));
      }
      std::sort(expect.begin(), expect.end());
      auto sorted = got;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == expect);
      for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].size() <= got[i].size());
      CHECK(minimal_ideal(rs, par).roots == par.phi_theta_plus);
      CHECK(got.front() == par.phi_theta_plus);
      CHECK(int(got.back().size()) == npos);
      const auto simple = simple_ideal(rs, par).roots;
      for (int i = 0; i < rank; ++i)
        CHECK(std::binary_search(simple.begin(), simple.end(), rs.positive_index(rs.simple_root(i))));
      // Every Theta-ideal is an ideal for each smaller Theta.
      if (theta.empty()) previous = got;
      else
        for (const auto& g : got) CHECK(std::find(previous.begin(), previous.end(), g) != previous.end());
    }
  }
}
