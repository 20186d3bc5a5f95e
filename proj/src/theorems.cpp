#include "hessgkm/theorems.hpp"

#include <algorithm>
#include <random>

#include "hessgkm/errors.hpp"

namespace hessgkm {

namespace {

std::vector<int> to_ints(const std::vector<Index>& v) { return {v.begin(), v.end()}; }

std::vector<int> padded(std::vector<int> v, std::size_t n) {
  v.resize(std::max(v.size(), n), 0);
  return v;
}

QVector unit(Index n, Index i) {
  QVector e = QVector::Zero(n);
  e(i) = 1;
  return e;
}

std::vector<int> convolve(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

std::vector<int> trimmed(std::vector<int> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

// R(Theta)/(R(Theta)^{W_Theta}_+) in the variables a_i, i in Theta, with the
// standard monomials of a degreewise echelon basis of the invariant ideal.
class Coinvariants {
 public:
  Coinvariants(const WeylGroup& group, const ParabolicData& par) : theta_(par.theta), ring_(int(par.theta.size())) {
    const int m = int(theta_.size());
    for (int w : par.w_theta) {
      QMatrix r(m, m);
      const IntMatrix& full = group.element(w).matrix;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r(i, j) = Rational(full(theta_[std::size_t(i)], theta_[std::size_t(j)]));
      restricted_.push_back(r);
    }
    elements_ = par.w_theta;
    std::vector<QEchelon> invariants;
    for (int k = 0;; ++k) {
      const Index dk = ring_.dim(k);
      QMatrix avg = QMatrix::Zero(dk, dk);
      for (const auto& r : restricted_) avg += ring_.substitution_matrix(r, k);
      avg *= Rational(1, std::int64_t(restricted_.size()));
      invariants.push_back(QEchelon::from_rows(avg.transpose()));

      std::vector<QVector> rows;
      for (int j = 1; j <= k; ++j)
        for (Index f = 0; f < invariants[std::size_t(j)].rank(); ++f)
          for (Index mono = 0; mono < ring_.dim(k - j); ++mono)
            rows.push_back(ring_.multiply(j, invariants[std::size_t(j)].row(f).transpose(), k - j, unit(ring_.dim(k - j), mono)));
      QRowMatrix mat(Index(rows.size()), dk);
      for (std::size_t r = 0; r < rows.size(); ++r) mat.row(Index(r)) = rows[r].transpose();
      QEchelon ideal = QEchelon::from_rows(std::move(mat));
      std::vector<char> pivot(std::size_t(dk), 0);
      for (Index p : ideal.pivots()) pivot[std::size_t(p)] = 1;
      std::vector<Index> standard;
      for (Index c = 0; c < dk; ++c)
        if (!pivot[std::size_t(c)]) standard.push_back(c);
      if (standard.empty()) break;
      ideal_.push_back(std::move(ideal));
      standard_.push_back(std::move(standard));
      if (k > 64) throw Error("coinvariant algebra does not terminate");
    }
  }

  int top_degree() const { return int(standard_.size()) - 1; }
  const std::vector<Index>& standard(int k) const { return standard_[std::size_t(k)]; }
  std::vector<int> dims() const {
    std::vector<int> d;
    for (const auto& s : standard_) d.push_back(int(s.size()));
    return d;
  }

  /// The standard monomial as an exponent vector in all n variables.
  Exponent lifted_exponent(int k, Index j, int nvars) {
    const Exponent& e = ring_.basis(k)[standard_[std::size_t(k)][std::size_t(j)]];
    Exponent out(std::size_t(nvars), 0);
    for (std::size_t i = 0; i < theta_.size(); ++i) out[std::size_t(theta_[i])] = e[i];
    return out;
  }

  /// Matrix of the W_Theta element on the degree-k quotient.
  QMatrix action(int w, int k) {
    const auto pos = std::size_t(std::find(elements_.begin(), elements_.end(), w) - elements_.begin());
    const QMatrix sub = ring_.substitution_matrix(restricted_[pos], k);
    const auto& st = standard_[std::size_t(k)];
    QMatrix out(Index(st.size()), Index(st.size()));
    for (std::size_t j = 0; j < st.size(); ++j) {
      const QVector r = ideal_[std::size_t(k)].reduce(sub.col(st[j]));
      for (std::size_t i = 0; i < st.size(); ++i) out(Index(i), Index(j)) = r(st[i]);
    }
    return out;
  }

 private:
  std::vector<int> theta_;
  GradedRing ring_;
  std::vector<int> elements_;
  std::vector<QMatrix> restricted_;
  std::vector<QEchelon> ideal_;
  std::vector<std::vector<Index>> standard_;
};

// s_H(q): w -> w(q) for a monomial q in the Theta variables.
QVector section_class(GkmCohomology& full, const Exponent& e) {
  const int k = total_degree(e);
  const Index p = full.block(k);
  const Index col = full.poly().basis(k).index_of(e);
  QVector out(Index(full.num_vertices()) * p);
  for (int x = 0; x < full.num_vertices(); ++x) out.segment(Index(x) * p, p) = full.weyl_matrix(x, k).col(col);
  return out;
}

// Rank of the columns of a family of vectors.
Index column_rank(const std::vector<QVector>& cols, Index dim) {
  if (cols.empty()) return 0;
  QRowMatrix m(Index(cols.size()), dim);
  for (std::size_t i = 0; i < cols.size(); ++i) m.row(Index(i)) = cols[i].transpose();
  return rank(m);
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

nlohmann::json CaseDescriptor::to_json(const RootSystem& rs) const {
  nlohmann::json j;
  j["type"] = std::string(1, to_char(type));
  j["rank"] = rank;
  std::vector<int> th;
  for (int t : theta) th.push_back(t + 1);
  j["theta"] = th;
  auto& roots = j["ideal"] = nlohmann::json::array();
  for (int r : ideal) {
    const IntVector& v = rs.positive_roots[std::size_t(r)];
    roots.push_back(std::vector<std::int64_t>(v.data(), v.data() + v.size()));
  }
  if (has_xi) {
    std::vector<int> x;
    for (int t : xi) x.push_back(t + 1);
    j["xi"] = x;
  }
  return j;
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

bool VerificationReport::skipped() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Skipped; });
}

Check& VerificationReport::add(const std::string& check, bool ok, nlohmann::json witness) {
  checks.push_back(Check{check, ok ? CheckStatus::Pass : CheckStatus::Fail, "", std::move(witness)});
  return checks.back();
}

Check& VerificationReport::skip(const std::string& check, const std::string& reason) {
  checks.push_back(Check{check, CheckStatus::Skipped, reason, {}});
  return checks.back();
}

nlohmann::json VerificationReport::to_json(const RootSystem& rs) const {
  nlohmann::json j;
  j["name"] = name;
  j["case"] = descriptor.to_json(rs);
  j["status"] = passed() ? (skipped() ? "skipped" : "pass") : "fail";
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.reason.empty()) e["reason"] = c.reason;
    if (!c.witness.is_null()) e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  return j;
}

Workspace::Workspace(LieType type, int rank, SolutionCache* cache)
    : rs_(build_root_system(type, rank)), group_(std::make_unique<WeylGroup>(rs_)), cache_(cache) {}

const ParabolicData& Workspace::parabolic(const std::vector<int>& theta) {
  std::vector<int> key = theta;
  std::sort(key.begin(), key.end());
  auto& slot = parabolics_[key];
  if (!slot) slot = std::make_unique<ParabolicData>(hessgkm::parabolic(rs_, *group_, key));
  return *slot;
}

HessIdeal Workspace::ideal(const std::vector<int>& theta, const std::vector<int>& roots) {
  return make_ideal(rs_, parabolic(theta), roots);
}

GkmCohomology& Workspace::full(const HessIdeal& ideal) {
  auto& slot = full_[ideal.roots];
  if (!slot) {
    const ParabolicData& par = parabolic({});
    slot = std::make_unique<GkmCohomology>(rs_, *group_,
                                           build_gkm(rs_, *group_, par, HessIdeal{ideal.roots, {}}, GkmMode::Full), cache_);
  }
  return *slot;
}

GkmCohomology& Workspace::partial(const HessIdeal& ideal) {
  if (ideal.theta.empty()) return full(ideal);
  auto& slot = partial_[{ideal.theta, ideal.roots}];
  if (!slot)
    slot = std::make_unique<GkmCohomology>(
        rs_, *group_, build_gkm(rs_, *group_, parabolic(ideal.theta), ideal, GkmMode::Partial), cache_);
  return *slot;
}

GkmCohomology& Workspace::levi(const std::vector<int>& theta) {
  auto& slot = levi_[theta];
  if (!slot)
    slot = std::make_unique<GkmCohomology>(rs_, *group_, build_levi_flag_graph(rs_, *group_, parabolic(theta)), cache_);
  return *slot;
}

CaseDescriptor Workspace::descriptor(const HessIdeal& ideal) const {
  CaseDescriptor d;
  d.type = rs_.type;
  d.rank = rs_.rank;
  d.theta = ideal.theta;
  d.ideal = ideal.roots;
  return d;
}

std::size_t Workspace::cache_hits() const {
  std::size_t n = 0;
  for (const auto& [k, h] : full_) n += h->cache_hits();
  for (const auto& [k, h] : partial_) n += h->cache_hits();
  for (const auto& [k, h] : levi_) n += h->cache_hits();
  return n;
}

QVector pullback(GkmCohomology& full, const ParabolicData& parabolic, int k, const QVector& partial_class) {
  const Index p = full.block(k);
  QVector out(Index(full.num_vertices()) * p);
  for (int x = 0; x < full.num_vertices(); ++x) {
    const int c = parabolic.coset_of[std::size_t(full.graph().vertices[std::size_t(x)])];
    out.segment(Index(x) * p, p) = partial_class.segment(Index(c) * p, p);
  }
  return out;
}

std::vector<QMatrix> pullback_ordinary(Workspace& ws, const HessIdeal& ideal) {
  GkmCohomology& full = ws.full(ideal);
  GkmCohomology& part = ws.partial(ideal);
  const ParabolicData& par = ws.parabolic(ideal.theta);
  std::vector<QMatrix> out;
  for (int k = 0; k <= full.top_degree(); ++k) {
    const Index rows = Index(full.betti()[std::size_t(k)]);
    if (k > part.top_degree()) {
      out.push_back(QMatrix(rows, 0));
      continue;
    }
    const auto& gens = part.generators(k);
    QMatrix m(rows, Index(gens.size()));
    for (std::size_t j = 0; j < gens.size(); ++j)
      m.col(Index(j)) = full.ordinary_coordinates(k, pullback(full, par, k, gens[j]));
    out.push_back(std::move(m));
  }
  return out;
}

VerificationReport verify_pullback_invariants(Workspace& ws, const HessIdeal& ideal) {
  VerificationReport rep;
  rep.name = "verify-main";
  rep.descriptor = ws.descriptor(ideal);
  GkmCohomology& full = ws.full(ideal);
  GkmCohomology& part = ws.partial(ideal);
  const ParabolicData& par = ws.parabolic(ideal.theta);
  const int d = full.top_degree();

  // Equivariant degrees 0..d.
  {
    const GradedRepresentation star = star_rep(full, par.w_theta, true, d);
    const auto inv = invariant_dims(star);
    bool injective = true, image = true;
    std::vector<Index> partial_dims;
    for (int k = 0; k <= d; ++k) {
      const QEchelon& sp = part.solutions(k);
      const QEchelon& sf = full.solutions(k);
      partial_dims.push_back(sp.rank());
      QMatrix p(sf.rank(), sp.rank());
      for (Index j = 0; j < sp.rank(); ++j) {
        const QVector img = pullback(full, par, k, sp.row(j).transpose());
        if (!sf.contains(img)) {
          image = false;
          break;
        }
        p.col(j) = sf.coordinates(img);
      }
      if (!image) break;
      if (rank(p) != sp.rank()) injective = false;
      if (inv[std::size_t(k)] != sp.rank()) image = false;
      for (int u : star.group)
        if (star.matrix(k, u) * p != p) image = false;
    }
    rep.add("equivariant_injective", injective, {{"degrees", d + 1}});
    rep.add("equivariant_image_is_star_invariants", image,
            {{"partial_dims", to_ints(partial_dims)}, {"star_invariant_dims", to_ints(inv)}});
  }

  // Ordinary.
  const auto p = pullback_ordinary(ws, ideal);
  {
    const GradedRepresentation star = star_rep(full, par.w_theta, false);
    const auto inv = invariant_dims(star);
    bool injective = true, image = true;
    const auto pb = padded(part.betti(), std::size_t(d + 1));
    for (int k = 0; k <= d; ++k) {
      const QMatrix& m = p[std::size_t(k)];
      if (rank(m) != m.cols()) injective = false;
      if (inv[std::size_t(k)] != Index(pb[std::size_t(k)])) image = false;
      for (int u : star.group)
        if (star.matrix(k, u) * m != m) image = false;
    }
    rep.add("ordinary_injective", injective);
    rep.add("ordinary_image_is_star_invariants", image,
            {{"partial_betti", pb}, {"star_invariant_dims", to_ints(inv)}});
  }

  // Ring structure.
  {
    bool ok = true;
    const RingPresentation& pr = part.ring();
    const int dp = part.top_degree();
    for (int a = 0; a <= dp && ok; ++a)
      for (int b = a; b <= dp && a + b <= d && ok; ++b)
        for (std::size_t i = 0; i < part.generators(a).size() && ok; ++i)
          for (std::size_t j = 0; j < part.generators(b).size() && ok; ++j) {
            const QVector x = pullback(full, par, a, part.generators(a)[i]);
            const QVector y = pullback(full, par, b, part.generators(b)[j]);
            const QVector lhs = full.ordinary_coordinates(a + b, full.vertex_product(a, x, b, y));
            QVector rhs = QVector::Zero(lhs.size());
            if (a + b <= dp)
              rhs = p[std::size_t(a + b)] *
                    pr.multiply(a, unit(pr.dims[std::size_t(a)], Index(i)), b, unit(pr.dims[std::size_t(b)], Index(j)));
            if (lhs != rhs) ok = false;
          }
    rep.add("ring_structure", ok);
  }
  return rep;
}

VerificationReport verify_leray_hirsch(Workspace& ws, const HessIdeal& ideal) {
  VerificationReport rep;
  rep.name = "verify-lh";
  rep.descriptor = ws.descriptor(ideal);
  GkmCohomology& full = ws.full(ideal);
  GkmCohomology& part = ws.partial(ideal);
  GkmCohomology& levi = ws.levi(ideal.theta);
  const ParabolicData& par = ws.parabolic(ideal.theta);
  const int d = full.top_degree();

  const auto product = convolve(levi.betti(), part.betti());
  rep.add("poincare_factorization", product == trimmed(full.betti()),
          {{"full", full.betti()}, {"fiber", levi.betti()}, {"partial", part.betti()}, {"product", product}});

  Coinvariants coinv(ws.group(), par);
  const auto cdims = coinv.dims();
  int total = 0;
  for (int x : cdims) total += x;
  rep.add("coinvariant_dimension", total == int(par.w_theta.size()) && cdims == trimmed(levi.betti()),
          {{"coinvariant_dims", cdims}, {"fiber", levi.betti()}});
  if (coinv.top_degree() > d) {
    rep.add("section_basis", false, {{"reason", "coinvariant degree exceeds dimension"}});
    return rep;
  }

  // Section matrices: ordinary coordinates of s_H(q) for each standard q.
  const int ctop = coinv.top_degree();
  std::vector<QMatrix> section;
  for (int a = 0; a <= ctop; ++a) {
    const auto& st = coinv.standard(a);
    QMatrix m(Index(full.betti()[std::size_t(a)]), Index(st.size()));
    for (std::size_t j = 0; j < st.size(); ++j)
      m.col(Index(j)) = full.ordinary_coordinates(a, section_class(full, coinv.lifted_exponent(a, Index(j), full.nvars())));
    section.push_back(std::move(m));
  }

  const GradedRepresentation star = star_rep(full, par.w_theta, false);
  auto equivariant = [&](const std::vector<QMatrix>& sec) {
    for (int u : par.w_theta)
      for (int a = 0; a <= ctop; ++a)
        if (star.matrix(a, u) * sec[std::size_t(a)] != sec[std::size_t(a)] * coinv.action(u, a)) return false;
    return true;
  };
  const auto p = pullback_ordinary(ws, ideal);
  const RingPresentation& ring = full.ring();
  auto basis_check = [&](const std::vector<QMatrix>& sec, nlohmann::json& witness) {
    std::vector<std::vector<QVector>> by_degree(std::size_t(d + 1));
    for (int a = 0; a <= ctop; ++a)
      for (Index j = 0; j < sec[std::size_t(a)].cols(); ++j)
        for (int c = 0; a + c <= d && c <= part.top_degree(); ++c)
          for (Index i = 0; i < p[std::size_t(c)].cols(); ++i)
            by_degree[std::size_t(a + c)].push_back(
                ring.multiply(a, sec[std::size_t(a)].col(j), c, p[std::size_t(c)].col(i)));
    bool ok = true;
    std::vector<int> counts, ranks;
    for (int k = 0; k <= d; ++k) {
      const auto& v = by_degree[std::size_t(k)];
      const Index r = column_rank(v, Index(full.betti()[std::size_t(k)]));
      counts.push_back(int(v.size()));
      ranks.push_back(int(r));
      if (Index(v.size()) != Index(full.betti()[std::size_t(k)]) || r != Index(v.size())) ok = false;
    }
    witness = {{"products", counts}, {"ranks", ranks}, {"full", full.betti()}};
    return ok;
  };

  std::string which = "monomial";
  bool eq = equivariant(section);
  if (!eq) {
    // Average the section over W_Theta: s' = (1/|G|) sum_u u* s u^{-1}.
    which = "averaged";
    std::vector<QMatrix> avg;
    for (int a = 0; a <= ctop; ++a) {
      QMatrix m = QMatrix::Zero(section[std::size_t(a)].rows(), section[std::size_t(a)].cols());
      for (int u : par.w_theta)
        m += star.matrix(a, u) * section[std::size_t(a)] * coinv.action(ws.group().inverse(u), a);
      avg.push_back(m * Rational(1, std::int64_t(par.w_theta.size())));
    }
    section = std::move(avg);
    eq = equivariant(section);
  }
  nlohmann::json witness;
  const bool basis_ok = basis_check(section, witness);
  witness["section"] = which;
  rep.add("section_basis", basis_ok, witness);
  rep.add("section_equivariant", eq, {{"section", which}});
  return rep;
}

VerificationReport verify_w_module_decomposition(Workspace& ws, const HessIdeal& ideal) {
  VerificationReport rep;
  rep.name = "verify-wmod";
  rep.descriptor = ws.descriptor(ideal);
  GkmCohomology& full = ws.full(ideal);
  GkmCohomology& part = ws.partial(ideal);
  GkmCohomology& levi = ws.levi(ideal.theta);
  const ParabolicData& par = ws.parabolic(ideal.theta);
  const WeylGroup& group = ws.group();
  const int d = full.top_degree();

  std::vector<int> all(std::size_t(group.size()));
  for (int i = 0; i < group.size(); ++i) all[std::size_t(i)] = i;
  const GradedRepresentation dot = dot_rep(full, all);
  const GradedRepresentation star = star_rep(full, par.w_theta);

  bool commute = true;
  for (int k = 0; k <= d && commute; ++k)
    for (int u : par.w_theta)
      for (int w : all)
        if (star.matrix(k, u) * dot.matrix(k, w) != dot.matrix(k, w) * star.matrix(k, u)) {
          commute = false;
          break;
        }
  rep.add("star_dot_commute", commute, {{"pairs", std::size_t(d + 1) * par.w_theta.size() * all.size()}});
  if (!commute) return rep;

  const auto inv = invariant_subspaces(star);
  const Character chi_full = character(dot, group);
  const Character chi_inv = character(restrict_rep(dot, inv), group);
  const auto& fiber = levi.betti();
  bool ok = true;
  for (int k = 0; k <= d; ++k)
    for (std::size_t c = 0; c < chi_full.classes.size(); ++c) {
      Rational rhs(0);
      for (int i = 0; i <= k && i < int(fiber.size()); ++i)
        rhs += Rational(fiber[std::size_t(i)]) * chi_inv.values[std::size_t(k - i)][c];
      if (rhs != chi_full.values[std::size_t(k)][c]) ok = false;
    }
  rep.add("character_identity", ok, {{"full", chi_full.to_json()}, {"star_invariants", chi_inv.to_json()}, {"fiber", fiber}});

  const Character chi_part = character(dot_rep(part, all), group);
  bool same = true;
  for (int k = 0; k <= d; ++k)
    for (std::size_t c = 0; c < chi_full.classes.size(); ++c) {
      const Rational lhs = k <= part.top_degree() ? chi_part.values[std::size_t(k)][c] : Rational(0);
      if (lhs != chi_inv.values[std::size_t(k)][c]) same = false;
    }
  rep.add("partial_dot_character", same, {{"partial", chi_part.to_json()}});
  return rep;
}

nlohmann::json RegularCohomology::to_json() const {
  nlohmann::json j;
  j["dims"] = to_ints(dims);
  j["ring"] = ring.to_json();
  return j;
}

RegularCohomology regular_cohomology(Workspace& ws, const HessIdeal& ideal, const std::vector<int>& xi) {
  GkmCohomology& part = ws.partial(ideal);
  const std::vector<int> elements = ws.group().generated_by(xi);
  const GradedRepresentation dot = dot_rep(part, elements);
  RegularCohomology out;
  out.ring = invariant_subring(dot, part.ring());
  out.dims = out.ring.dims;

  // Chern class of the sum of the fundamental weights outside Theta; it is
  // fixed by the dot action, hence lies in every invariant subring. With the
  // tangent weights -w(alpha) the ample class is the negative one, so that
  // sign is tried first.
  const RootSystem& rs = ws.roots();
  const ParabolicData& par = ws.parabolic(ideal.theta);
  QVector chi = QVector::Zero(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    if (!par.in_theta(i)) chi += rs.fundamental_weights[std::size_t(i)];
  if (part.top_degree() >= 1 && !chi.isZero()) {
    const QVector c1 = part.from_piecewise(chern_class(rs, ws.group(), part.graph(), chi));
    const QVector coords = part.ordinary_coordinates(1, c1);
    const auto inv = invariant_subspaces(dot);
    if (inv[1].contains(coords)) {
      const QVector c = inv[1].coordinates(coords);
      out.omega_candidates.push_back(-c);
      out.omega_candidates.push_back(c);
    }
  }
  return out;
}

std::vector<Index> peterson_pattern(int n) {
  std::vector<Index> out(std::size_t(n + 1), 1);
  for (int k = 1; k < n; ++k) out[std::size_t(k)] = out[std::size_t(k - 1)] * (n - k + 1) / k;
  return out;
}

namespace {

// Matrix of multiplication by x (degree a) from degree b to degree a + b.
QMatrix multiplication_matrix(const RingPresentation& ring, int a, const QVector& x, int b) {
  const Index rows = a + b <= ring.top_degree() ? ring.dims[std::size_t(a + b)] : 0;
  QMatrix m(rows, ring.dims[std::size_t(b)]);
  for (Index j = 0; j < m.cols(); ++j) {
    const QVector img = ring.multiply(a, x, b, unit(ring.dims[std::size_t(b)], j));
    if (rows) m.col(j) = img;
  }
  return m;
}

QVector power(const RingPresentation& ring, const QVector& omega, int e) {
  QVector acc = unit(ring.dims[0], 0);
  for (int i = 0; i < e; ++i) acc = ring.multiply(i, acc, 1, omega);
  return acc;
}

std::vector<std::string> strings(const QVector& v) {
  std::vector<std::string> out;
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

}  // namespace

VerificationReport verify_pd_hl_hr(const RingPresentation& ring, const std::vector<QVector>& omega_candidates,
                                   std::uint64_t seed) {
  VerificationReport rep;
  rep.name = "pdhlhr";
  const int d = ring.top_degree();
  if (ring.dims[std::size_t(d)] != 1 || ring.dims[0] != 1) {
    rep.skip("pd_hl_hr", "not irreducible").witness = {{"dims", to_ints(ring.dims)}};
    return rep;
  }

  bool pd = true;
  for (int k = 0; 2 * k <= d; ++k) {
    const QMatrix m = ring.pairing(k);
    if (m.rows() != m.cols() || rank(m) != m.rows()) pd = false;
  }
  rep.add("poincare_duality", pd, {{"dims", to_ints(ring.dims)}});

  std::vector<QVector> candidates = omega_candidates;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  nlohmann::json log = nlohmann::json::array();
  std::optional<QVector> found;
  bool hl_found = false;
  for (int attempt = 0; attempt < 32 && !found; ++attempt) {
    QVector omega;
    std::string source;
    if (std::size_t(attempt) < candidates.size()) {
      omega = candidates[std::size_t(attempt)];
      source = "candidate";
    } else {
      omega = QVector(ring.dims[1]);
      for (Index i = 0; i < omega.size(); ++i) omega(i) = coeff(rng);
      source = "random";
    }
    bool hl = true, hr = true;
    for (int k = 0; 2 * k <= d && hl; ++k) {
      const QMatrix l = multiplication_matrix(ring, d - 2 * k, power(ring, omega, d - 2 * k), k);
      if (l.rows() != l.cols() || rank(l) != l.rows()) hl = false;
    }
    if (hl) {
      hl_found = true;
      for (int k = 0; 2 * k <= d && hr; ++k) {
        const Index n = ring.dims[std::size_t(k)];
        QRowMatrix kernel_basis;
        if (d - 2 * k + 1 + k <= d) {
          const QMatrix l = multiplication_matrix(ring, d - 2 * k + 1, power(ring, omega, d - 2 * k + 1), k);
          kernel_basis = QEchelon::kernel_of(QRowMatrix(l)).basis();
        } else {
          kernel_basis = QRowMatrix::Identity(n, n);
        }
        const QVector wpow = power(ring, omega, d - 2 * k);
        const Index r = kernel_basis.rows();
        QMatrix form(r, r);
        const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);
        for (Index i = 0; i < r; ++i) {
          const QVector wi = ring.multiply(d - 2 * k, wpow, k, kernel_basis.row(i).transpose());
          for (Index j = 0; j < r; ++j)
            form(i, j) = sign * ring.integrate(ring.multiply(d - k, wi, k, kernel_basis.row(j).transpose()));
        }
        for (const auto& minor : leading_principal_minors(form))
          if (minor.sign() <= 0) hr = false;
      }
    }
    log.push_back({{"attempt", attempt}, {"source", source}, {"omega", strings(omega)}, {"hl", hl}, {"hr", hl && hr}});
    if (hl && hr) found = omega;
  }
  rep.add("hard_lefschetz", hl_found, {{"seed", seed}, {"attempts", log}});
  rep.add("hodge_riemann", found.has_value(), found ? nlohmann::json{{"omega", strings(*found)}} : nlohmann::json{});
  return rep;
}

}  // namespace hessgkm
