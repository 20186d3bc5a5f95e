#include "hessgkm/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hessgkm/errors.hpp"

namespace hessgkm {

namespace {

std::string key_of(const IntMatrix& m) {
  std::string k;
  k.reserve(std::size_t(m.size()) * 3);
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      k += std::to_string(m(i, j));
      k += ',';
    }
  return k;
}

IntMatrix symmetric_form(LieType type, int n) {
  IntMatrix f = IntMatrix::Zero(n, n);
  auto link = [&](int i, int j, std::int64_t v) { f(i, j) = f(j, i) = v; };
  switch (type) {
    case LieType::A:
      for (int i = 0; i < n; ++i) f(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case LieType::B:
      for (int i = 0; i < n; ++i) f(i, i) = 4;
      f(n - 1, n - 1) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case LieType::C:
      for (int i = 0; i < n; ++i) f(i, i) = 2;
      f(n - 1, n - 1) = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case LieType::D:
      for (int i = 0; i < n; ++i) f(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case LieType::G:
      f(0, 0) = 2;
      f(1, 1) = 6;
      link(0, 1, -3);
      break;
  }
  return f;
}

bool supported(LieType type, int rank) {
  switch (type) {
    case LieType::A: return rank >= 1 && rank <= 4;
    case LieType::B:
    case LieType::C: return rank >= 2 && rank <= 4;
    case LieType::D: return rank == 4;
    case LieType::G: return rank == 2;
  }
  return false;
}

bool lex_greater(const IntVector& a, const IntVector& b) {
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) > b(i);
  return false;
}

}  // namespace

char to_char(LieType t) {
  switch (t) {
    case LieType::A: return 'A';
    case LieType::B: return 'B';
    case LieType::C: return 'C';
    case LieType::D: return 'D';
    case LieType::G: return 'G';
  }
  return '?';
}

LieType lie_type_from_char(char c) {
  switch (c) {
    case 'A': return LieType::A;
    case 'B': return LieType::B;
    case 'C': return LieType::C;
    case 'D': return LieType::D;
    case 'G': return LieType::G;
    default: throw UnsupportedType(std::string("Lie type '") + c + "'");
  }
}

std::string RootSystem::name() const { return std::string(1, to_char(type)) + std::to_string(rank); }

IntVector RootSystem::simple_root(int i) const { return IntVector::Unit(rank, i); }

int RootSystem::positive_index(const IntVector& v) const {
  for (std::size_t k = 0; k < positive_roots.size(); ++k)
    if (positive_roots[k] == v) return int(k);
  return -1;
}

bool RootSystem::is_root(const IntVector& v) const {
  return positive_index(v) >= 0 || positive_index(-v) >= 0;
}

std::int64_t RootSystem::coroot_pairing(const IntVector& v, int j) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank; ++i) s += v(i) * cartan(i, j);
  return s;
}

Rational RootSystem::coroot_pairing(const QVector& v, int j) const {
  Rational s;
  for (int i = 0; i < rank; ++i) s += v(i) * Rational(cartan(i, j));
  return s;
}

Rational RootSystem::coroot_pairing(const QVector& v, const IntVector& alpha) const {
  Rational va, aa;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      va += v(i) * Rational(form(i, j) * alpha(j));
      aa += Rational(alpha(i) * form(i, j) * alpha(j));
    }
  return Rational(2) * va / aa;
}

RootSystem build_root_system(LieType type, int rank) {
  if (!supported(type, rank))
    throw UnsupportedType(std::string(1, to_char(type)) + std::to_string(rank) +
                          " is outside the supported table (A1-A4, B2-B4, C2-C4, D4, G2)");
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.form = symmetric_form(type, rank);
  rs.cartan = IntMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rs.cartan(i, j) = 2 * rs.form(i, j) / rs.form(j, j);

  // Positive roots: orbit of the simple roots under simple reflections, kept
  // while positive.
  std::vector<IntVector> roots;
  std::deque<IntVector> queue;
  for (int i = 0; i < rank; ++i) {
    roots.push_back(rs.simple_root(i));
    queue.push_back(rs.simple_root(i));
  }
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop_front();
    for (int j = 0; j < rank; ++j) {
      IntVector gamma = beta - rs.coroot_pairing(beta, j) * rs.simple_root(j);
      if ((gamma.array() < 0).any() || gamma.isZero()) continue;
      if (std::find(roots.begin(), roots.end(), gamma) != roots.end()) continue;
      roots.push_back(gamma);
      queue.push_back(gamma);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const IntVector& a, const IntVector& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return lex_greater(a, b);
  });
  rs.positive_roots = std::move(roots);

  QMatrix c(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) c(i, j) = Rational(rs.cartan(i, j));
  const QMatrix cinv = inverse(c);
  for (int i = 0; i < rank; ++i) rs.fundamental_weights.push_back(cinv.row(i).transpose());
  return rs;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs), rank_(rs.rank) {
  const int n = rs.rank;
  std::vector<IntMatrix> gens;
  for (int j = 0; j < n; ++j) {
    IntMatrix s = IntMatrix::Identity(n, n);
    for (int i = 0; i < n; ++i) s(j, i) -= rs.cartan(i, j);
    gens.push_back(s);
  }

  // Breadth-first search by right multiplication with simple reflections.
  std::vector<std::vector<int>> right;  // right[w][i] = w s_i
  elements_.push_back({IntMatrix::Identity(n, n), 0, {}});
  index_.emplace(key_of(elements_[0].matrix), 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    right.emplace_back(std::size_t(n), -1);
    for (int i = 0; i < n; ++i) {
      IntMatrix m = elements_[head].matrix * gens[std::size_t(i)];
      auto [it, inserted] = index_.emplace(key_of(m), int(elements_.size()));
      if (inserted) {
        WeylElement e;
        e.matrix = std::move(m);
        e.word = elements_[head].word;
        e.word.push_back(i);
        elements_.push_back(std::move(e));
      }
      right[head][std::size_t(i)] = it->second;
    }
  }

  // Length = number of positive roots sent to negative roots.
  for (auto& e : elements_) {
    int len = 0;
    for (const auto& a : rs.positive_roots) {
      IntVector img = e.matrix * a;
      if ((img.array() < 0).any()) ++len;
    }
    e.length = len;
  }

  const std::size_t size = elements_.size();
  mult_.assign(size * size, -1);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      int w = int(a);
      for (int i : elements_[b].word) w = right[std::size_t(w)][std::size_t(i)];
      mult_[a * size + b] = w;
    }
  inverse_.assign(size, -1);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      if (mult_[a * size + b] == 0) {
        inverse_[a] = int(b);
        break;
      }
  for (int i = 0; i < n; ++i) simple_.push_back(right[0][std::size_t(i)]);
}

int WeylGroup::find(const IntMatrix& m) const {
  auto it = index_.find(key_of(m));
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::reflection(const IntVector& alpha) const {
  const int n = rank_;
  IntMatrix s(n, n);
  for (int i = 0; i < n; ++i) {
    QVector ai = QVector::Zero(n);
    ai(i) = 1;
    const Rational p = rs_->coroot_pairing(ai, alpha);
    if (!p.is_integer()) throw InvalidRoot("non-integral reflection");
    const std::int64_t pi = std::stoll(p.numerator_string());
    s.col(i) = IntVector::Unit(n, i) - pi * alpha;
  }
  const int w = find(s);
  if (w < 0) throw InvalidRoot("reflection is not in the Weyl group");
  return w;
}

QVector WeylGroup::act(int w, const QVector& v) const {
  const IntMatrix& m = element(w).matrix;
  QVector out = QVector::Zero(v.size());
  for (Index j = 0; j < m.cols(); ++j) {
    if (v(j).is_zero()) continue;
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) out(i) += Rational(m(i, j)) * v(j);
  }
  return out;
}

std::vector<std::vector<int>> WeylGroup::conjugacy_classes() const {
  std::vector<int> cls(std::size_t(size()), -1);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < size(); ++x) {
    if (cls[std::size_t(x)] >= 0) continue;
    std::set<int> orbit;
    for (int g = 0; g < size(); ++g) orbit.insert(multiply(multiply(g, x), inverse(g)));
    for (int y : orbit) cls[std::size_t(y)] = int(out.size());
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<int> WeylGroup::generated_by(const std::vector<int>& simple_indices) const {
  std::vector<int> members{identity()};
  std::vector<char> seen(std::size_t(size()), 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (int i : simple_indices) {
      const int w = multiply(members[head], simple_reflection(i));
      if (!seen[std::size_t(w)]) {
        seen[std::size_t(w)] = 1;
        members.push_back(w);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool ParabolicData::in_theta(int i) const { return std::binary_search(theta.begin(), theta.end(), i); }

ParabolicData parabolic(const RootSystem& rs, const WeylGroup& w, std::vector<int> theta) {
  std::sort(theta.begin(), theta.end());
  theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  for (int i : theta)
    if (i < 0 || i >= rs.rank) throw InvalidRoot("theta index " + std::to_string(i + 1) + " out of range");

  ParabolicData p;
  p.theta = theta;
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    bool inside = true;
    for (int i = 0; i < rs.rank; ++i)
      if (rs.positive_roots[k](i) != 0 && !p.in_theta(i)) inside = false;
    if (inside) p.phi_theta_plus.push_back(int(k));
  }
  p.w_theta = w.generated_by(theta);

  p.coset_of.assign(std::size_t(w.size()), -1);
  for (int x = 0; x < w.size(); ++x) {
    if (p.coset_of[std::size_t(x)] >= 0) continue;
    std::vector<int> members;
    for (int u : p.w_theta) members.push_back(w.multiply(x, u));
    std::sort(members.begin(), members.end());
    int rep = members.front();
    for (int m : members)
      if (w.length(m) < w.length(rep)) rep = m;
    for (int m : members) p.coset_of[std::size_t(m)] = int(p.cosets.size());
    p.cosets.push_back(std::move(members));
    p.representatives.push_back(rep);
  }
  return p;
}

}  // namespace hessgkm
