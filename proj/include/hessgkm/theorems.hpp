// Mechanical verification of the structural theorems on concrete cases.
//
// Every check is recorded in a VerificationReport instead of thrown, so a
// failing case can be rerun from its descriptor alone.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hessgkm/actions.hpp"
#include "hessgkm/cohomology.hpp"
#include "hessgkm/hessenberg.hpp"
#include "json.hpp"

namespace hessgkm {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string reason;
  nlohmann::json witness;
};

struct CaseDescriptor {
  LieType type = LieType::A;
  int rank = 0;
  std::vector<int> theta;
  std::vector<int> ideal;
  std::vector<int> xi;
  bool has_xi = false;

  nlohmann::json to_json(const RootSystem& rs) const;
};

struct VerificationReport {
  std::string name;
  CaseDescriptor descriptor;
  std::vector<Check> checks;
  double seconds = 0;

  bool passed() const;
  bool skipped() const;
  Check& add(const std::string& check, bool ok, nlohmann::json witness = {});
  Check& skip(const std::string& check, const std::string& reason);
  /// Without timings.
  nlohmann::json to_json(const RootSystem& rs) const;
};

/// Root data, group, parabolics and solved cohomologies of one root system,
/// shared by all cases of that type. Full-mode results depend only on the
/// ideal, so they are reused across Theta.
class Workspace {
 public:
  Workspace(LieType type, int rank, SolutionCache* cache = nullptr);
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const RootSystem& roots() const { return rs_; }
  const WeylGroup& group() const { return *group_; }
  const ParabolicData& parabolic(const std::vector<int>& theta);
  /// Validated ideal; throws InvalidIdeal.
  HessIdeal ideal(const std::vector<int>& theta, const std::vector<int>& roots);

  GkmCohomology& full(const HessIdeal& ideal);
  GkmCohomology& partial(const HessIdeal& ideal);
  /// The flag variety of the Levi factor, P/B.
  GkmCohomology& levi(const std::vector<int>& theta);

  CaseDescriptor descriptor(const HessIdeal& ideal) const;
  std::size_t cache_hits() const;

 private:
  RootSystem rs_;
  std::unique_ptr<WeylGroup> group_;
  SolutionCache* cache_;
  std::map<std::vector<int>, std::unique_ptr<ParabolicData>> parabolics_;
  std::map<std::vector<int>, std::unique_ptr<GkmCohomology>> full_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::unique_ptr<GkmCohomology>> partial_;
  std::map<std::vector<int>, std::unique_ptr<GkmCohomology>> levi_;
};

/// p(f)(w) = f(coset of w), from partial-graph classes to full-graph classes.
QVector pullback(GkmCohomology& full, const ParabolicData& parabolic, int k, const QVector& partial_class);
/// Per degree 0..top(full), the matrix of p in ordinary bases.
std::vector<QMatrix> pullback_ordinary(Workspace& ws, const HessIdeal& ideal);

VerificationReport verify_pullback_invariants(Workspace& ws, const HessIdeal& ideal);
VerificationReport verify_leray_hirsch(Workspace& ws, const HessIdeal& ideal);
VerificationReport verify_w_module_decomposition(Workspace& ws, const HessIdeal& ideal);

struct RegularCohomology {
  RingPresentation ring;
  std::vector<Index> dims;
  /// Degree-1 coordinates, in the invariant basis, of minus and plus the
  /// Chern class of a P-regular dominant weight; empty if unavailable.
  std::vector<QVector> omega_candidates;
  nlohmann::json to_json() const;
};

/// The W_Xi dot-invariant subring of the partial ring.
RegularCohomology regular_cohomology(Workspace& ws, const HessIdeal& ideal, const std::vector<int>& xi);

/// Binomial dims C(n, k), k = 0..n.
std::vector<Index> peterson_pattern(int n);

/// Poincare duality, hard Lefschetz and Hodge-Riemann on a graded ring.
/// Candidates are tried first, then seeded random integer combinations of
/// the degree-1 basis, at most 32 attempts in all.
VerificationReport verify_pd_hl_hr(const RingPresentation& ring, const std::vector<QVector>& omega_candidates,
                                   std::uint64_t seed);

}  // namespace hessgkm
