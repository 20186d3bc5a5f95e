#include "hessgkm/actions.hpp"

#include <algorithm>
#include <set>

#include "hessgkm/errors.hpp"

namespace hessgkm {

namespace {

QMatrix to_matrix(const std::vector<QVector>& columns, Index rows) {
  QMatrix m(rows, Index(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) m.col(Index(c)) = columns[c];
  return m;
}

template <class Apply>
GradedRepresentation build_rep(GkmCohomology& h, const std::vector<int>& elements, bool equivariant,
                               int max_degree, ActionKind kind, Apply apply) {
  GradedRepresentation rep;
  rep.kind = kind;
  rep.equivariant = equivariant;
  rep.group = elements;
  std::sort(rep.group.begin(), rep.group.end());
  const int top = max_degree < 0 ? h.top_degree() : max_degree;
  for (int k = 0; k <= top; ++k) {
    std::vector<QMatrix> mats;
    for (int w : rep.group) {
      std::vector<QVector> cols;
      if (equivariant) {
        const QEchelon& s = h.solutions(k);
        for (Index i = 0; i < s.rank(); ++i) {
          const QVector img = apply(w, k, QVector(s.row(i).transpose()));
          if (!s.contains(img)) throw NotThetaIdeal("image of a class is not a class");
          cols.push_back(s.coordinates(img));
        }
        mats.push_back(to_matrix(cols, s.rank()));
      } else {
        const auto& gens = k <= h.top_degree() ? h.generators(k) : std::vector<QVector>{};
        for (const QVector& g : gens) {
          const QVector img = apply(w, k, g);
          if (!h.solutions(k).contains(img)) throw NotThetaIdeal("image of a class is not a class");
          cols.push_back(h.ordinary_coordinates(k, img));
        }
        mats.push_back(to_matrix(cols, Index(gens.size())));
      }
    }
    rep.matrices.push_back(std::move(mats));
  }
  return rep;
}

}  // namespace

Index GradedRepresentation::dim(int k) const { return matrices[std::size_t(k)].front().rows(); }

const QMatrix& GradedRepresentation::matrix(int k, int w) const {
  const auto it = std::lower_bound(group.begin(), group.end(), w);
  if (it == group.end() || *it != w) throw Error("element " + std::to_string(w) + " is not in the group");
  return matrices[std::size_t(k)][std::size_t(it - group.begin())];
}

nlohmann::json GradedRepresentation::to_json() const {
  nlohmann::json j;
  j["kind"] = kind == ActionKind::Star ? "star" : "dot";
  j["equivariant"] = equivariant;
  j["group"] = group;
  auto& degrees = j["matrices"] = nlohmann::json::array();
  for (const auto& mats : matrices) {
    auto deg = nlohmann::json::array();
    for (const auto& m : mats) {
      auto rows = nlohmann::json::array();
      for (Index r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).numerator_string(), m(r, c).denominator_string()});
        rows.push_back(row);
      }
      deg.push_back(rows);
    }
    degrees.push_back(deg);
  }
  return j;
}

QVector star_apply(GkmCohomology& h, int u, int k, const QVector& v) {
  if (h.graph().mode != GkmMode::Full) throw ModeError("star action needs a full-mode graph");
  const Index p = h.block(k);
  const WeylGroup& group = h.group();
  QVector out(v.size());
  for (int x = 0; x < h.num_vertices(); ++x) {
    const int y = h.graph().vertex_of[std::size_t(group.multiply(h.graph().vertices[std::size_t(x)], u))];
    out.segment(Index(x) * p, p) = v.segment(Index(y) * p, p);
  }
  return out;
}

QVector dot_apply(GkmCohomology& h, int w, int k, const QVector& v) {
  const Index p = h.block(k);
  const WeylGroup& group = h.group();
  const QMatrix& act = h.weyl_matrix(w, k);
  const int winv = group.inverse(w);
  QVector out(v.size());
  for (int x = 0; x < h.num_vertices(); ++x) {
    const int y = h.graph().vertex_of[std::size_t(group.multiply(winv, h.graph().vertices[std::size_t(x)]))];
    if (y < 0) throw ModeError("dot action leaves the vertex set");
    out.segment(Index(x) * p, p) = act * v.segment(Index(y) * p, p);
  }
  return out;
}

GradedRepresentation star_rep(GkmCohomology& full, const std::vector<int>& elements, bool equivariant,
                              int max_degree) {
  if (full.graph().mode != GkmMode::Full) throw ModeError("star action needs a full-mode graph");
  return build_rep(full, elements, equivariant, max_degree, ActionKind::Star,
                   [&](int u, int k, const QVector& v) { return star_apply(full, u, k, v); });
}

GradedRepresentation dot_rep(GkmCohomology& h, const std::vector<int>& elements, bool equivariant, int max_degree) {
  return build_rep(h, elements, equivariant, max_degree, ActionKind::Dot,
                   [&](int w, int k, const QVector& v) { return dot_apply(h, w, k, v); });
}

bool is_multiplicative(const GradedRepresentation& rep, const WeylGroup& group) {
  for (int k = 0; k < rep.num_degrees(); ++k) {
    const Index n = rep.dim(k);
    if (std::binary_search(rep.group.begin(), rep.group.end(), 0) && rep.matrix(k, 0) != QMatrix::Identity(n, n))
      return false;
    for (int u : rep.group)
      for (int v : rep.group)
        if (rep.matrix(k, group.multiply(u, v)) != rep.matrix(k, u) * rep.matrix(k, v)) return false;
  }
  return true;
}

namespace {

QMatrix projector(const GradedRepresentation& rep, int k) {
  const Index n = rep.dim(k);
  QMatrix p = QMatrix::Zero(n, n);
  for (const auto& m : rep.matrices[std::size_t(k)]) p += m;
  return p * Rational(1, std::int64_t(rep.group.size()));
}

}  // namespace

std::vector<Index> invariant_dims(const GradedRepresentation& rep) {
  std::vector<Index> out;
  for (int k = 0; k < rep.num_degrees(); ++k) {
    const QMatrix p = projector(rep, k);
    const Index r = rank(p);
    const Rational t = trace(p);
    if (t != Rational(std::int64_t(r)))
      throw Error("invariant dimension mismatch in degree " + std::to_string(k) + ": projector rank " +
                  std::to_string(r) + ", averaged trace " + t.str());
    out.push_back(r);
  }
  return out;
}

std::vector<QEchelon> invariant_subspaces(const GradedRepresentation& rep) {
  std::vector<QEchelon> out;
  for (int k = 0; k < rep.num_degrees(); ++k) out.push_back(QEchelon::from_rows(projector(rep, k).transpose()));
  return out;
}

RingPresentation invariant_subring(const GradedRepresentation& rep, const RingPresentation& ring) {
  const int top = ring.top_degree();
  if (rep.num_degrees() != top + 1) throw Error("representation and ring have different degree ranges");
  auto unit = [](Index n, Index i) {
    QVector e = QVector::Zero(n);
    e(i) = 1;
    return e;
  };
  // Ring automorphism check on basis products.
  for (int w : rep.group)
    for (int a = 0; a <= top; ++a)
      for (int b = a; a + b <= top; ++b)
        for (Index i = 0; i < ring.dims[std::size_t(a)]; ++i)
          for (Index j = 0; j < ring.dims[std::size_t(b)]; ++j) {
            const QVector x = unit(ring.dims[std::size_t(a)], i), y = unit(ring.dims[std::size_t(b)], j);
            const QVector lhs = rep.matrix(a + b, w) * ring.multiply(a, x, b, y);
            const QVector rhs = ring.multiply(a, rep.matrix(a, w) * x, b, rep.matrix(b, w) * y);
            if (lhs != rhs) throw NotAutomorphism("element " + std::to_string(w) + " in degrees " +
                                                  std::to_string(a) + "," + std::to_string(b));
          }

  const auto inv = invariant_subspaces(rep);
  RingPresentation out;
  for (const auto& e : inv) out.dims.push_back(e.rank());
  for (int a = 0; a <= top; ++a)
    for (int b = 0; a + b <= top; ++b) {
      const Index da = out.dims[std::size_t(a)], db = out.dims[std::size_t(b)];
      QMatrix m(da * db, out.dims[std::size_t(a + b)]);
      for (Index i = 0; i < da; ++i)
        for (Index j = 0; j < db; ++j) {
          const QVector prod = ring.multiply(a, inv[std::size_t(a)].row(i).transpose(), b,
                                             inv[std::size_t(b)].row(j).transpose());
          if (!inv[std::size_t(a + b)].contains(prod)) throw NotAutomorphism("invariants are not closed under products");
          m.row(i * db + j) = inv[std::size_t(a + b)].coordinates(prod).transpose();
        }
      out.products[{a, b}] = m;
    }
  out.integral = QVector(out.dims[std::size_t(top)]);
  for (Index i = 0; i < out.integral.size(); ++i)
    out.integral(i) = ring.integrate(inv[std::size_t(top)].row(i).transpose());
  return out;
}

GradedRepresentation restrict_rep(const GradedRepresentation& rep, const std::vector<QEchelon>& subspaces) {
  GradedRepresentation out;
  out.kind = rep.kind;
  out.equivariant = rep.equivariant;
  out.group = rep.group;
  for (int k = 0; k < rep.num_degrees(); ++k) {
    const QEchelon& u = subspaces[std::size_t(k)];
    std::vector<QMatrix> mats;
    for (const auto& m : rep.matrices[std::size_t(k)]) {
      QMatrix r(u.rank(), u.rank());
      for (Index i = 0; i < u.rank(); ++i) {
        const QVector img = m * u.row(i).transpose();
        r.col(i) = u.checked_coordinates(img);
      }
      mats.push_back(std::move(r));
    }
    out.matrices.push_back(std::move(mats));
  }
  return out;
}

std::vector<std::vector<int>> subgroup_classes(const WeylGroup& group, const std::vector<int>& elements) {
  std::vector<std::vector<int>> out;
  std::set<int> seen;
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  for (int x : sorted) {
    if (seen.count(x)) continue;
    std::set<int> cls;
    for (int g : sorted) cls.insert(group.multiply(group.multiply(g, x), group.inverse(g)));
    seen.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

Character character(const GradedRepresentation& rep, const WeylGroup& group) {
  Character ch;
  ch.classes = subgroup_classes(group, rep.group);
  for (int k = 0; k < rep.num_degrees(); ++k) {
    std::vector<Rational> row;
    for (const auto& cls : ch.classes) {
      const Rational t = trace(rep.matrix(k, cls.front()));
      for (int x : cls)
        if (trace(rep.matrix(k, x)) != t) throw Error("trace is not a class function");
      row.push_back(t);
    }
    ch.values.push_back(std::move(row));
  }
  return ch;
}

nlohmann::json Character::to_json() const {
  nlohmann::json j;
  j["classes"] = classes;
  auto& v = j["values"] = nlohmann::json::array();
  for (const auto& row : values) {
    auto r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.str());
    v.push_back(r);
  }
  return j;
}

}  // namespace hessgkm
