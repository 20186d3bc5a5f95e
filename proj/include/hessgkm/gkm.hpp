// GKM graphs of regular semisimple Hessenberg varieties.
//
// Full mode: vertices are the Weyl group elements (the T-fixed points wB of
// Hess(X, H) in G/B), with an edge w -- w s_alpha labelled w(alpha) for each
// alpha in I. Partial mode: vertices are the cosets w W_Theta (fixed points of
// Hess(X, H) in G/P) identified by minimal representatives, with edges for
// alpha in I \ Phi_Theta^+. Labels are normalized to a positive leading
// coefficient; parallel edges collapse and self-loops are dropped.
#pragma once

#include <string>
#include <vector>

#include "hessgkm/hessenberg.hpp"
#include "hessgkm/rootsys.hpp"
#include "json.hpp"

namespace hessgkm {

enum class GkmMode { Full, Partial };

std::string to_string(GkmMode m);
GkmMode gkm_mode_from_string(const std::string& s);  // throws ModeError

struct GkmEdge {
  int u = 0;
  int v = 0;
  IntVector label;
};

struct GkmGraph {
  GkmMode mode = GkmMode::Full;
  int nvars = 0;
  /// Group element attached to each vertex (minimal coset representative in
  /// partial mode).
  std::vector<int> vertices;
  /// Vertex of every group element, -1 when the element is not a vertex.
  std::vector<int> vertex_of;
  std::vector<GkmEdge> edges;
  /// Positive roots alpha whose images -w(alpha) are the tangent weights at w.
  std::vector<int> tangent_roots;
  HessIdeal ideal;
  std::vector<int> theta;

  int num_vertices() const { return int(vertices.size()); }
  /// Complex dimension of the variety.
  int dimension() const { return int(tangent_roots.size()); }
  /// Tangent weights at vertex v.
  std::vector<IntVector> tangent_weights(const RootSystem& rs, const WeylGroup& group, int v) const;
  /// Sorted adjacency lists.
  std::vector<std::vector<int>> adjacency() const;
  int connected_components() const;
};

/// Throws InvalidIdeal if `ideal` is not a Theta-ideal for `parabolic`.
GkmGraph build_gkm(const RootSystem& rs, const WeylGroup& group, const ParabolicData& parabolic,
                   const HessIdeal& ideal, GkmMode mode);

/// The flag variety P/B of the Levi factor: vertices W_Theta, all of
/// Phi_Theta^+ as edge directions.
GkmGraph build_levi_flag_graph(const RootSystem& rs, const WeylGroup& group, const ParabolicData& parabolic);

nlohmann::json to_json(const GkmGraph& g, const WeylGroup& group);

}  // namespace hessgkm
