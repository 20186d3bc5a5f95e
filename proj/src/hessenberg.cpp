#include "hessgkm/hessenberg.hpp"

#include <algorithm>

#include "hessgkm/errors.hpp"

namespace hessgkm {

std::vector<int> root_indices(const RootSystem& rs, const std::vector<IntVector>& roots) {
  std::vector<int> out;
  for (const auto& r : roots) {
    if (r.size() != rs.rank) throw InvalidRoot("root vector has wrong length");
    const int k = rs.positive_index(r);
    if (k < 0) {
      std::string s;
      for (Index i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r(i));
      throw InvalidRoot("[" + s + "] is not a positive root of " + rs.name());
    }
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<IntVector> root_vectors(const RootSystem& rs, const std::vector<int>& indices) {
  std::vector<IntVector> out;
  for (int k : indices) out.push_back(rs.positive_roots[std::size_t(k)]);
  return out;
}

ThetaIdealRules::ThetaIdealRules(const RootSystem& rs, const ParabolicData& parabolic)
    : npos_(int(rs.positive_roots.size())), required_(parabolic.phi_theta_plus) {
  const auto& pos = rs.positive_roots;
  // Roots of p: all positive roots and the negatives of Phi_Theta^+.
  std::vector<IntVector> p_roots = pos;
  for (int t : parabolic.phi_theta_plus) p_roots.push_back(-pos[std::size_t(t)]);
  // Positive roots of H impose nothing (beta + gamma would have to be
  // negative with gamma positive, so beta = -t and -(beta+gamma) = t - gamma
  // lies in Phi_Theta^+). The rules come from gamma = -r_j with r_j in I.
  for (int j = 0; j < npos_; ++j) {
    const IntVector gamma = -pos[std::size_t(j)];
    for (const auto& beta : p_roots) {
      const IntVector sum = beta + gamma;
      if (sum.isZero() || (sum.array() > 0).any()) continue;
      const int k = rs.positive_index(-sum);
      if (k >= 0 && k != j) implications_.emplace_back(j, k);
    }
  }
  // Unconditional requirements from gamma positive.
  for (int g = 0; g < npos_; ++g)
    for (int t : parabolic.phi_theta_plus) {
      const IntVector sum = pos[std::size_t(g)] - pos[std::size_t(t)];
      if (sum.isZero() || (sum.array() > 0).any()) continue;
      const int k = rs.positive_index(-sum);
      if (k >= 0) required_.push_back(k);
    }
  std::sort(required_.begin(), required_.end());
  required_.erase(std::unique(required_.begin(), required_.end()), required_.end());
  std::sort(implications_.begin(), implications_.end());
  implications_.erase(std::unique(implications_.begin(), implications_.end()), implications_.end());
}

bool ThetaIdealRules::is_valid(const std::vector<char>& member) const {
  for (int r : required_)
    if (!member[std::size_t(r)]) return false;
  for (const auto& [j, k] : implications_)
    if (member[std::size_t(j)] && !member[std::size_t(k)]) return false;
  return true;
}

std::vector<int> ThetaIdealRules::closure(std::vector<int> seed) const {
  std::vector<char> member(std::size_t(npos_), 0);
  for (int r : seed) member[std::size_t(r)] = 1;
  for (int r : required_) member[std::size_t(r)] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [j, k] : implications_)
      if (member[std::size_t(j)] && !member[std::size_t(k)]) {
        member[std::size_t(k)] = 1;
        changed = true;
      }
  }
  std::vector<int> out;
  for (int r = 0; r < npos_; ++r)
    if (member[std::size_t(r)]) out.push_back(r);
  return out;
}

bool validate_theta_ideal(const RootSystem& rs, const ParabolicData& parabolic,
                          const std::vector<int>& roots) {
  const int npos = int(rs.positive_roots.size());
  std::vector<char> member(std::size_t(npos), 0);
  for (int r : roots) {
    if (r < 0 || r >= npos) throw InvalidRoot("index " + std::to_string(r) + " is not a positive root");
    member[std::size_t(r)] = 1;
  }
  return ThetaIdealRules(rs, parabolic).is_valid(member);
}

std::vector<HessIdeal> enumerate_theta_ideals(const RootSystem& rs, const ParabolicData& parabolic) {
  const int npos = int(rs.positive_roots.size());
  if (npos > 24) throw TooLarge(rs.name() + " has " + std::to_string(npos) + " positive roots (limit 24)");
  const ThetaIdealRules rules(rs, parabolic);

  std::vector<char> fixed(std::size_t(npos), 0);
  for (int t : parabolic.phi_theta_plus) fixed[std::size_t(t)] = 1;
  std::vector<int> free;
  for (int r = 0; r < npos; ++r)
    if (!fixed[std::size_t(r)]) free.push_back(r);

  std::vector<HessIdeal> out;
  std::vector<char> member(std::size_t(npos), 0);
  const std::uint64_t count = std::uint64_t(1) << free.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    member = fixed;
    for (std::size_t b = 0; b < free.size(); ++b)
      if (mask >> b & 1U) member[std::size_t(free[b])] = 1;
    if (!rules.is_valid(member)) continue;
    HessIdeal h;
    h.theta = parabolic.theta;
    for (int r = 0; r < npos; ++r)
      if (member[std::size_t(r)]) h.roots.push_back(r);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const HessIdeal& a, const HessIdeal& b) {
    if (a.roots.size() != b.roots.size()) return a.roots.size() < b.roots.size();
    return a.roots < b.roots;
  });
  return out;
}

bool is_lower_closed(const RootSystem& rs, const std::vector<int>& roots) {
  for (int a : roots)
    for (const auto& beta : rs.positive_roots) {
      const int k = rs.positive_index(rs.positive_roots[std::size_t(a)] - beta);
      if (k >= 0 && !std::binary_search(roots.begin(), roots.end(), k)) return false;
    }
  return true;
}

HessIdeal make_ideal(const RootSystem& rs, const ParabolicData& parabolic, std::vector<int> roots) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (!validate_theta_ideal(rs, parabolic, roots))
    throw InvalidIdeal("root set is not a Theta-ideal for the given parabolic");
  return HessIdeal{std::move(roots), parabolic.theta};
}

HessIdeal full_ideal(const RootSystem& rs, const ParabolicData& parabolic) {
  std::vector<int> all(rs.positive_roots.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = int(i);
  return HessIdeal{std::move(all), parabolic.theta};
}

HessIdeal minimal_ideal(const RootSystem& rs, const ParabolicData& parabolic) {
  return HessIdeal{ThetaIdealRules(rs, parabolic).closure({}), parabolic.theta};
}

HessIdeal simple_ideal(const RootSystem& rs, const ParabolicData& parabolic) {
  std::vector<int> seed;
  for (int i = 0; i < rs.rank; ++i) seed.push_back(rs.positive_index(rs.simple_root(i)));
  return HessIdeal{ThetaIdealRules(rs, parabolic).closure(seed), parabolic.theta};
}

}  // namespace hessgkm
