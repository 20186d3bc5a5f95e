// Root systems of small rank, their Weyl groups and parabolic subgroups.
//
// Weights are coefficient vectors in the simple-root basis. Simple roots are
// indexed from 0 inside the library; the command line uses 1-based indices.
//
// Convention table (standard numbering, c(i,j) = 2(a_i,a_j)/(a_j,a_j) and
// s_j(a_i) = a_i - c(i,j) a_j):
//   A_n  chain 0-1-...-(n-1), all roots of equal length
//   B_n  a_0..a_{n-2} long, a_{n-1} short   (B2: a_0 + 2 a_1 is a root)
//   C_n  a_0..a_{n-2} short, a_{n-1} long   (C2: 2 a_0 + a_1 is a root)
//   D_4  a_1 is the branch node joined to a_0, a_2, a_3
//   G_2  a_0 short, a_1 long                (3 a_0 + 2 a_1 is the highest root)
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "hessgkm/linalg.hpp"

namespace hessgkm {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

enum class LieType { A, B, C, D, G };

char to_char(LieType t);
LieType lie_type_from_char(char c);  // throws UnsupportedType

struct RootSystem {
  LieType type = LieType::A;
  int rank = 0;
  IntMatrix cartan;
  /// Symmetric form (a_i, a_j) on the simple roots, scaled to be integral.
  IntMatrix form;
  /// Sorted by height, then lexicographically descending.
  std::vector<IntVector> positive_roots;
  /// Rows of the inverse Cartan matrix.
  std::vector<QVector> fundamental_weights;

  std::string name() const;
  IntVector simple_root(int i) const;
  /// Index into positive_roots, or -1.
  int positive_index(const IntVector& v) const;
  bool is_root(const IntVector& v) const;
  bool is_positive_root(const IntVector& v) const { return positive_index(v) >= 0; }
  /// <v, a_j^vee> = sum_i v_i c(i,j).
  std::int64_t coroot_pairing(const IntVector& v, int j) const;
  Rational coroot_pairing(const QVector& v, int j) const;
  /// <v, alpha^vee> = 2 (v, alpha) / (alpha, alpha) for any root alpha.
  Rational coroot_pairing(const QVector& v, const IntVector& alpha) const;
};

/// Supported: A1..A4, B2..B4, C2..C4, D4, G2.
RootSystem build_root_system(LieType type, int rank);

struct WeylElement {
  /// Column i is the image of simple root i.
  IntMatrix matrix;
  int length = 0;
  /// A reduced word (0-based simple reflection indices), read left to right.
  std::vector<int> word;
};

/// A finite Weyl group stored as index tables. Element 0 is the identity and
/// elements appear in breadth-first (hence length-nondecreasing) order.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  int size() const { return int(elements_.size()); }
  int rank() const { return rank_; }
  const WeylElement& element(int w) const { return elements_[std::size_t(w)]; }
  const std::vector<WeylElement>& elements() const { return elements_; }

  int identity() const { return 0; }
  int multiply(int a, int b) const { return mult_[std::size_t(a) * std::size_t(size()) + std::size_t(b)]; }
  int inverse(int a) const { return inverse_[std::size_t(a)]; }
  int simple_reflection(int i) const { return simple_[std::size_t(i)]; }
  int length(int w) const { return elements_[std::size_t(w)].length; }
  /// Index of the element with this matrix, or -1.
  int find(const IntMatrix& m) const;
  /// The reflection s_alpha for a (positive or negative) root.
  int reflection(const IntVector& alpha) const;

  IntVector act(int w, const IntVector& v) const { return element(w).matrix * v; }
  QVector act(int w, const QVector& v) const;

  /// Conjugacy classes, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> conjugacy_classes() const;

  /// Elements of the subgroup generated by the given simple reflections.
  std::vector<int> generated_by(const std::vector<int>& simple_indices) const;

 private:
  const RootSystem* rs_ = nullptr;
  int rank_ = 0;
  std::vector<WeylElement> elements_;
  std::vector<int> mult_;
  std::vector<int> inverse_;
  std::vector<int> simple_;
  std::unordered_map<std::string, int> index_;
};

struct ParabolicData {
  /// Sorted 0-based simple root indices.
  std::vector<int> theta;
  /// Indices into RootSystem::positive_roots.
  std::vector<int> phi_theta_plus;
  std::vector<int> w_theta;
  /// Left cosets w W_theta; members sorted, cosets ordered by representative.
  std::vector<std::vector<int>> cosets;
  /// The minimal-length member of each coset.
  std::vector<int> representatives;
  /// Coset index of every group element.
  std::vector<int> coset_of;

  bool in_theta(int i) const;
};

ParabolicData parabolic(const RootSystem& rs, const WeylGroup& w, std::vector<int> theta);

}  // namespace hessgkm
