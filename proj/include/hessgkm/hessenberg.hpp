// p-Hessenberg spaces H = b + sum_{alpha in I} g_{-alpha}, encoded by the
// root set I = I(H), a Theta-ideal of the positive roots.
//
// The Theta-ideal condition used here is bracket closure: H must be stable
// under ad(p). Since [g_beta, g_gamma] = g_{beta+gamma} whenever beta, gamma
// and beta+gamma are roots, this is the combinatorial test
//
//   Phi_Theta^+ is contained in I, and for every root beta of p
//   (Phi^+ together with -Phi_Theta^+) and every root gamma of H
//   (Phi^+ together with -I) with beta+gamma negative, -(beta+gamma) is in I.
//
// It is a reconstruction of the usual Theta-ideal definition from the
// Lie-theoretic meaning rather than a quoted one; the property tests check it
// against lower-closure and monotonicity in Theta.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hessgkm/rootsys.hpp"

namespace hessgkm {

struct HessIdeal {
  /// Sorted indices into RootSystem::positive_roots.
  std::vector<int> roots;
  std::vector<int> theta;

  /// dim H/b.
  int dim_over_b() const { return int(roots.size()); }
  friend bool operator==(const HessIdeal&, const HessIdeal&) = default;
};

/// Maps coefficient vectors to positive-root indices; throws InvalidRoot.
std::vector<int> root_indices(const RootSystem& rs, const std::vector<IntVector>& roots);
std::vector<IntVector> root_vectors(const RootSystem& rs, const std::vector<int>& indices);

/// The implications "j in I forces k in I" that bracket closure imposes,
/// precomputed for one parabolic.
class ThetaIdealRules {
 public:
  ThetaIdealRules(const RootSystem& rs, const ParabolicData& parabolic);

  bool is_valid(const std::vector<char>& member) const;
  /// Smallest Theta-ideal containing `seed`.
  std::vector<int> closure(std::vector<int> seed) const;

 private:
  int npos_ = 0;
  std::vector<int> required_;
  std::vector<std::pair<int, int>> implications_;
};

/// Throws InvalidRoot for indices that are not positive roots.
bool validate_theta_ideal(const RootSystem& rs, const ParabolicData& parabolic,
                          const std::vector<int>& roots);

/// All Theta-ideals, sorted by size and then lexicographically. TooLarge when
/// |Phi^+| > 24.
std::vector<HessIdeal> enumerate_theta_ideals(const RootSystem& rs, const ParabolicData& parabolic);

/// Lower closure in the root poset: alpha in I, beta in Phi^+ and
/// alpha - beta in Phi^+ imply alpha - beta in I.
bool is_lower_closed(const RootSystem& rs, const std::vector<int>& roots);

HessIdeal make_ideal(const RootSystem& rs, const ParabolicData& parabolic, std::vector<int> roots);
HessIdeal full_ideal(const RootSystem& rs, const ParabolicData& parabolic);
HessIdeal minimal_ideal(const RootSystem& rs, const ParabolicData& parabolic);
/// Smallest Theta-ideal containing the simple roots.
HessIdeal simple_ideal(const RootSystem& rs, const ParabolicData& parabolic);

}  // namespace hessgkm
