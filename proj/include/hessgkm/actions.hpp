// Star and dot actions of Weyl subgroups as exact matrices.
//
//   star  (u * f)(v) = f(v u)             u in W_Theta, full graphs only
//   dot   (w . f)(v) = w(f(w^{-1} v))     w in W, full or partial graphs
//
// Matrices act on column coordinate vectors, either in the echelon basis of
// the equivariant solution space S_k or in the ordinary basis of H^{2k}.
#pragma once

#include <map>
#include <vector>

#include "hessgkm/cohomology.hpp"
#include "json.hpp"

namespace hessgkm {

enum class ActionKind { Star, Dot };

struct GradedRepresentation {
  ActionKind kind = ActionKind::Dot;
  bool equivariant = false;
  /// Group elements in increasing index order.
  std::vector<int> group;
  /// matrices[k][i] is the matrix of group[i] in degree k.
  std::vector<std::vector<QMatrix>> matrices;

  int num_degrees() const { return int(matrices.size()); }
  Index dim(int k) const;
  const QMatrix& matrix(int k, int w) const;
  nlohmann::json to_json() const;
};

/// Ambient image of a degree-k class.
QVector star_apply(GkmCohomology& h, int u, int k, const QVector& v);
QVector dot_apply(GkmCohomology& h, int w, int k, const QVector& v);

/// Star action of `elements` (a subgroup of W_Theta) on a full-mode graph.
/// Degrees 0..max_degree, default the top degree. Throws ModeError on a
/// partial graph and NotThetaIdeal if some image is not a class.
GradedRepresentation star_rep(GkmCohomology& full, const std::vector<int>& elements, bool equivariant = false,
                              int max_degree = -1);
GradedRepresentation dot_rep(GkmCohomology& h, const std::vector<int>& elements, bool equivariant = false,
                             int max_degree = -1);

/// M(uv) = M(u) M(v) on all pairs, M(e) = 1.
bool is_multiplicative(const GradedRepresentation& rep, const WeylGroup& group);

/// Per degree, rank of the Reynolds projector, cross-checked against the
/// averaged trace (throws Error with both numbers on mismatch).
std::vector<Index> invariant_dims(const GradedRepresentation& rep);
/// Per degree, an echelon basis (rows) of the invariant vectors.
std::vector<QEchelon> invariant_subspaces(const GradedRepresentation& rep);

/// Invariant subring, with structure constants in the echelon bases of
/// invariant_subspaces. Throws NotAutomorphism if the group does not act by
/// ring automorphisms.
RingPresentation invariant_subring(const GradedRepresentation& rep, const RingPresentation& ring);
/// The representation restricted to invariant subspaces of another one
/// (same degrees); throws if those subspaces are not preserved.
GradedRepresentation restrict_rep(const GradedRepresentation& rep, const std::vector<QEchelon>& subspaces);

/// Conjugacy classes of a subgroup, each sorted, ordered by smallest member.
std::vector<std::vector<int>> subgroup_classes(const WeylGroup& group, const std::vector<int>& elements);

struct Character {
  std::vector<std::vector<int>> classes;
  /// values[k][c]: trace in degree k on class c.
  std::vector<std::vector<Rational>> values;
  nlohmann::json to_json() const;
};

/// Throws Error if a trace is not constant on a class.
Character character(const GradedRepresentation& rep, const WeylGroup& group);

}  // namespace hessgkm
