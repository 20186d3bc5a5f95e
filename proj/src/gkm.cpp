#include "hessgkm/gkm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "hessgkm/errors.hpp"

namespace hessgkm {

namespace {

IntVector normalized(IntVector v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    if (v(i) < 0) v = -v;
    break;
  }
  return v;
}

std::vector<std::int64_t> key(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

// Adds the edges {u, vertex(w s_alpha)} with label w(alpha) for every vertex
// u (group element w) and every alpha in `directions`.
void add_edges(GkmGraph& g, const RootSystem& rs, const WeylGroup& group, const std::vector<int>& directions) {
  std::set<std::tuple<int, int, std::vector<std::int64_t>>> seen;
  for (int u = 0; u < g.num_vertices(); ++u) {
    const int w = g.vertices[std::size_t(u)];
    for (int a : directions) {
      const IntVector& alpha = rs.positive_roots[std::size_t(a)];
      const int ws = group.multiply(w, group.reflection(alpha));
      const int v = g.vertex_of[std::size_t(ws)];
      if (v < 0) throw Error("GKM edge leaves the vertex set");
      if (v == u) continue;
      const IntVector label = normalized(group.act(w, alpha));
      const auto entry = std::make_tuple(std::min(u, v), std::max(u, v), key(label));
      if (!seen.insert(entry).second) continue;
      g.edges.push_back(GkmEdge{std::min(u, v), std::max(u, v), label});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GkmEdge& a, const GkmEdge& b) {
    return std::make_tuple(a.u, a.v, key(a.label)) < std::make_tuple(b.u, b.v, key(b.label));
  });
}

}  // namespace

std::string to_string(GkmMode m) { return m == GkmMode::Full ? "full" : "partial"; }

GkmMode gkm_mode_from_string(const std::string& s) {
  if (s == "full") return GkmMode::Full;
  if (s == "partial") return GkmMode::Partial;
  throw ModeError("unknown mode '" + s + "'");
}

std::vector<IntVector> GkmGraph::tangent_weights(const RootSystem& rs, const WeylGroup& group, int v) const {
  std::vector<IntVector> out;
  const int w = vertices[std::size_t(v)];
  for (int a : tangent_roots) out.push_back(-group.act(w, rs.positive_roots[std::size_t(a)]));
  return out;
}

std::vector<std::vector<int>> GkmGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[std::size_t(e.u)].push_back(e.v);
    adj[std::size_t(e.v)].push_back(e.u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

int GkmGraph::connected_components() const {
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[std::size_t(x)] != x) x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
    return x;
  };
  int count = num_vertices();
  for (const auto& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[std::size_t(std::max(a, b))] = std::min(a, b);
      --count;
    }
  }
  return count;
}

GkmGraph build_gkm(const RootSystem& rs, const WeylGroup& group, const ParabolicData& parabolic,
                   const HessIdeal& ideal, GkmMode mode) {
  if (!validate_theta_ideal(rs, parabolic, ideal.roots))
    throw InvalidIdeal("root set is not a Theta-ideal for the given parabolic");
  GkmGraph g;
  g.mode = mode;
  g.nvars = rs.rank;
  g.ideal = ideal;
  g.theta = parabolic.theta;
  if (mode == GkmMode::Full) {
    g.vertices.resize(std::size_t(group.size()));
    std::iota(g.vertices.begin(), g.vertices.end(), 0);
    g.vertex_of = g.vertices;
    g.tangent_roots = ideal.roots;
  } else {
    g.vertices = parabolic.representatives;
    g.vertex_of = parabolic.coset_of;
    for (int a : ideal.roots)
      if (!std::binary_search(parabolic.phi_theta_plus.begin(), parabolic.phi_theta_plus.end(), a))
        g.tangent_roots.push_back(a);
  }
  add_edges(g, rs, group, g.tangent_roots);
  return g;
}

GkmGraph build_levi_flag_graph(const RootSystem& rs, const WeylGroup& group, const ParabolicData& parabolic) {
  GkmGraph g;
  g.mode = GkmMode::Full;
  g.nvars = rs.rank;
  g.theta = parabolic.theta;
  g.ideal = HessIdeal{parabolic.phi_theta_plus, parabolic.theta};
  g.vertices = parabolic.w_theta;
  g.vertex_of.assign(std::size_t(group.size()), -1);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) g.vertex_of[std::size_t(g.vertices[i])] = int(i);
  g.tangent_roots = parabolic.phi_theta_plus;
  add_edges(g, rs, group, g.tangent_roots);
  return g;
}

nlohmann::json to_json(const GkmGraph& g, const WeylGroup& group) {
  nlohmann::json j;
  j["mode"] = to_string(g.mode);
  j["theta"] = g.theta;
  j["ideal_indices"] = g.ideal.roots;
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (int w : g.vertices) verts.push_back(group.element(w).word);
  auto& cons = j["constraints"] = nlohmann::json::array();
  for (const auto& e : g.edges) cons.push_back({{"u", e.u}, {"v", e.v}, {"label", key(e.label)}});
  return j;
}

}  // namespace hessgkm
