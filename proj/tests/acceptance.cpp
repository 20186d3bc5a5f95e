// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include "hessgkm/cache.hpp"
#include "hessgkm/cli.hpp"
#include "hessgkm/errors.hpp"
#include "hessgkm/theorems.hpp"
#include "oracles.hpp"

using namespace hessgkm;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string show(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<int> ints(const std::vector<Index>& v) { return std::vector<int>(v.begin(), v.end()); }

struct Case {
  Workspace* ws;
  std::vector<int> theta;
  HessIdeal ideal;
  std::string name() const {
    std::string s = ws->roots().name() + " theta=" + show(theta) + " I=" + show(ideal.roots);
    return s;
  }
};

// Cell count written from scratch: tangent roots sent to negative roots, over
// all elements (full) or minimal coset representatives (partial).
std::vector<int> cells(Workspace& ws, const Case& c, bool partial) {
  const auto& rs = ws.roots();
  const auto& g = ws.group();
  std::vector<int> phi_theta, tangent;
  for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
    bool inside = true;
    for (int i = 0; i < rs.rank; ++i)
      if (rs.positive_roots[r](i) != 0 && std::find(c.theta.begin(), c.theta.end(), i) == c.theta.end()) inside = false;
    if (inside) phi_theta.push_back(int(r));
  }
  for (int r : c.ideal.roots)
    if (!partial || std::find(phi_theta.begin(), phi_theta.end(), r) == phi_theta.end()) tangent.push_back(r);
  std::vector<int> b(tangent.size() + 1, 0);
  for (int x = 0; x < g.size(); ++x) {
    const IntMatrix& m = g.element(x).matrix;
    if (partial) {
      bool minimal = true;
      for (int t : phi_theta)
        if (oracle::negative(m * rs.positive_roots[std::size_t(t)])) minimal = false;
      if (!minimal) continue;
    }
    int n = 0;
    for (int r : tangent)
      if (oracle::negative(m * rs.positive_roots[std::size_t(r)])) ++n;
    ++b[std::size_t(n)];
  }
  return b;
}

bool check_passed(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.status == CheckStatus::Pass;
  return false;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Suite {
 public:
  void criterion(int n, const std::string& title, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << title << " - " << detail
         << " (" << secs << "s)";
    std::cout << line.str() << std::endl;
    if (!ok) failures_++;
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

}  // namespace

int main() {
  Suite suite;
  std::vector<std::unique_ptr<Workspace>> spaces;
  std::vector<Case> cases;
  for (auto [t, r] : {std::pair{LieType::A, 2}, std::pair{LieType::B, 2}, std::pair{LieType::G, 2},
                      std::pair{LieType::A, 3}}) {
    spaces.push_back(std::make_unique<Workspace>(t, r));
    Workspace& ws = *spaces.back();
    for (int mask = 0; mask < (1 << r); ++mask) {
      std::vector<int> theta;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) theta.push_back(i);
      if (r == 3 && theta.size() > 1) continue;
      for (const auto& h : enumerate_theta_ideals(ws.roots(), ws.parabolic(theta))) cases.push_back({&ws, theta, h});
    }
  }

  suite.criterion(1, "positive roots and Weyl group orders", [] {
    const struct {
      LieType t;
      int r;
      std::size_t pos;
      int order;
    } table[] = {{LieType::A, 2, 3, 6},  {LieType::A, 3, 6, 24},   {LieType::B, 2, 4, 8},
                 {LieType::B, 3, 9, 48}, {LieType::G, 2, 6, 12},   {LieType::D, 4, 12, 192}};
    for (const auto& row : table) {
      const RootSystem rs = build_root_system(row.t, row.r);
      const WeylGroup w(rs);
      const auto roots = oracle::positive_roots(rs.cartan);
      const auto group = oracle::weyl_lengths(rs.cartan);
      expect(rs.positive_roots.size() == row.pos && roots.size() == row.pos, rs.name() + " positive roots");
      expect(w.size() == row.order && int(group.size()) == row.order, rs.name() + " group order");
    }
    return std::string("6 systems match BFS and root-string oracles");
  });

  suite.criterion(2, "GKM betti numbers equal the cell oracle", [&] {
    int n = 0;
    for (const auto& c : cases)
      for (bool partial : {false, true}) {
        GkmCohomology& h = partial ? c.ws->partial(c.ideal) : c.ws->full(c.ideal);
        const auto& b = h.betti();
        expect(b == cells(*c.ws, c, partial), c.name() + (partial ? " partial " : " full ") + show(b));
        int sum = 0;
        for (int x : b) sum += x;
        expect(sum == h.num_vertices(), c.name() + " sum of betti numbers");
        if (h.graph().connected_components() == 1)
          expect(std::equal(b.begin(), b.end(), b.rbegin()), c.name() + " not palindromic");
        ++n;
      }
    return std::to_string(cases.size()) + " cases, " + std::to_string(n) + " graphs";
  });

  suite.criterion(3, "full flag betti numbers equal the length generating function", [&] {
    for (auto [t, r, want] : {std::tuple{LieType::A, 2, std::vector<int>{1, 2, 2, 1}},
                              std::tuple{LieType::B, 2, std::vector<int>{1, 2, 2, 2, 1}}}) {
      Workspace ws(t, r);
      const auto& b = ws.full(full_ideal(ws.roots(), ws.parabolic({}))).betti();
      std::vector<int> lengths(b.size(), 0);
      for (const auto& [m, len] : oracle::weyl_lengths(ws.roots().cartan)) {
        if (std::size_t(len) >= lengths.size()) lengths.resize(std::size_t(len) + 1, 0);
        ++lengths[std::size_t(len)];
      }
      expect(b == want && lengths == want, ws.roots().name() + " " + show(b));
    }
    return std::string("A2 (1,2,2,1), B2 (1,2,2,2,1)");
  });

  suite.criterion(4, "partial cohomology is the star-invariant part", [&] {
    for (const auto& c : cases) expect(verify_pullback_invariants(*c.ws, c.ideal).passed(), c.name());
    return std::to_string(cases.size()) + " cases";
  });

  suite.criterion(5, "Leray-Hirsch factorization with equivariant section", [&] {
    for (const auto& c : cases) {
      const auto r = verify_leray_hirsch(*c.ws, c.ideal);
      expect(r.passed() && check_passed(r, "section_equivariant"), c.name());
    }
    return std::to_string(cases.size()) + " cases";
  });

  std::vector<VerificationReport> wmod;
  suite.criterion(6, "star and dot actions commute exactly", [&] {
    for (const auto& c : cases) {
      wmod.push_back(verify_w_module_decomposition(*c.ws, c.ideal));
      expect(check_passed(wmod.back(), "star_dot_commute"), c.name());
    }
    return std::to_string(cases.size()) + " cases";
  });

  suite.criterion(7, "W-module character identity; dot action trivial on full flags", [&] {
    expect(wmod.size() == cases.size(), "criterion 6 did not finish");
    for (std::size_t i = 0; i < cases.size(); ++i)
      expect(check_passed(wmod[i], "character_identity") && wmod[i].passed(), cases[i].name());
    for (auto [t, r] : {std::pair{LieType::A, 2}, std::pair{LieType::B, 2}}) {
      Workspace ws(t, r);
      GkmCohomology& flag = ws.full(full_ideal(ws.roots(), ws.parabolic({})));
      std::vector<int> all(std::size_t(ws.group().size()));
      for (int g = 0; g < ws.group().size(); ++g) all[std::size_t(g)] = g;
      const auto dot = dot_rep(flag, all);
      for (int k = 0; k <= flag.top_degree(); ++k)
        for (int g : all) {
          // Apply the action to each generator directly and compare.
          for (std::size_t i = 0; i < flag.generators(k).size(); ++i) {
            const QVector img = flag.ordinary_coordinates(k, dot_apply(flag, g, k, flag.generators(k)[i]));
            QVector e = QVector::Zero(img.size());
            e(Index(i)) = Rational(1);
            expect(img == e, ws.roots().name() + " dot action not trivial");
          }
          expect(dot.matrix(k, g) == QMatrix::Identity(dot.dim(k), dot.dim(k)), ws.roots().name() + " dot matrix");
        }
    }
    return std::to_string(cases.size()) + " cases; A2, B2 full flags trivial";
  });

  std::vector<std::pair<std::string, RegularCohomology>> peterson;
  suite.criterion(8, "Peterson chain", [&] {
    const struct {
      LieType t;
      int r;
      std::vector<int> betti;
    } table[] = {{LieType::A, 2, {1, 4, 1}}, {LieType::B, 2, {1, 6, 1}}, {LieType::A, 3, {1, 11, 11, 1}}};
    std::string detail;
    for (const auto& row : table) {
      Workspace ws(row.t, row.r);
      const HessIdeal simple = simple_ideal(ws.roots(), ws.parabolic({}));
      const Case c{&ws, {}, simple};
      expect(cells(ws, c, false) == row.betti, ws.roots().name() + " cell oracle " + show(cells(ws, c, false)));
      expect(ws.full(simple).betti() == row.betti, ws.roots().name() + " GKM " + show(ws.full(simple).betti()));
      std::vector<int> xi(std::size_t(row.r));
      for (int i = 0; i < row.r; ++i) xi[std::size_t(i)] = i;
      RegularCohomology reg = regular_cohomology(ws, simple, xi);
      std::vector<int> binom{1};
      for (int i = 0; i < row.r; ++i) {
        std::vector<int> next(binom.size() + 1, 0);
        for (std::size_t j = 0; j < binom.size(); ++j) {
          next[j] += binom[j];
          next[j + 1] += binom[j];
        }
        binom = next;
      }
      expect(ints(reg.dims) == binom, ws.roots().name() + " invariants " + show(ints(reg.dims)));
      detail += ws.roots().name() + " " + show(row.betti) + "->" + show(binom) + " ";
      if (row.r == 2) peterson.emplace_back(ws.roots().name(), std::move(reg));
    }
    return detail;
  });

  suite.criterion(9, "Lefschetz package on the invariant rings", [&] {
    expect(peterson.size() == 2, "criterion 8 did not finish");
    for (const auto& [name, reg] : peterson) {
      const auto r = verify_pd_hl_hr(reg.ring, reg.omega_candidates, 12345);
      expect(r.passed() && !r.skipped(), name + " invariant ring");
    }
    Workspace ws(LieType::A, 2);
    const HessIdeal h = ws.ideal({0}, {0});
    const auto reg = regular_cohomology(ws, h, {});
    const auto r = verify_pd_hl_hr(reg.ring, reg.omega_candidates, 12345);
    expect(r.skipped() && !r.checks.empty() && r.checks[0].reason == "not irreducible",
           "A2 theta={1} I={a1} not skipped as not irreducible");
    return std::string("A2, B2 pass; A2 theta={1} I={a1} skipped (not irreducible)");
  });

  suite.criterion(10, "byte-identical reports across runs and cache settings", [&] {
    const fs::path root = fs::temp_directory_path() / ("hessgkm-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(root);
    std::vector<CaseSpec> specs(3);
    specs[0].theta = {1};
    specs[0].tasks = {"betti", "verify-main", "verify-lh", "verify-wmod"};
    specs[1].type = "B";
    specs[1].ideal = "simple";
    specs[1].xi = std::vector<int>{1, 2};
    specs[1].tasks = {"betti", "regular", "pdhlhr", "actions"};
    specs[2].type = "G";
    specs[2].theta = {2};
    specs[2].tasks = {"betti", "equivariant", "verify-main", "verify-lh"};
    for (std::size_t i = 0; i < specs.size(); ++i) {
      CaseSpec& s = specs[i];
      s.cache_dir = (root / ("cache" + std::to_string(i))).string();
      std::string reference;
      for (int run = 0; run < 4; ++run) {
        s.no_cache = run == 3;
        s.out_dir = (root / ("out" + std::to_string(i) + "-" + std::to_string(run))).string();
        std::ostringstream out, err;
        expect(run_and_write(s, out, err) == 0, "spec " + std::to_string(i) + " exit code: " + err.str());
        const std::string bytes = slurp(fs::path(s.out_dir) / "report.json");
        if (run == 0) reference = bytes;
        expect(!bytes.empty() && bytes == reference, "spec " + std::to_string(i) + " run " + std::to_string(run));
      }
    }
    fs::remove_all(root);
    return std::string("3 specs x (cold, warm, warm, no cache)");
  });

  return suite.failures() == 0 ? 0 : 1;
}
