#include "satake/isometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace satake {

Isometry Isometry::identity(const RootSystem& rs) {
  std::vector<RootIndex> p(rs.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<RootIndex>(i);
  return Isometry(rs, std::move(p));
}

Isometry Isometry::reflection(const RootSystem& rs, RootIndex a) {
  return Isometry(rs, rs.reflection_perm(a));
}

bool Isometry::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

Isometry Isometry::inverse() const {
  std::vector<RootIndex> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = static_cast<RootIndex>(i);
  return Isometry(*rs_, std::move(inv));
}

Isometry operator*(const Isometry& a, const Isometry& b) {
  std::vector<RootIndex> p(b.perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.perm_[b.perm_[i]];
  return Isometry(*a.rs_, std::move(p));
}

QMat Isometry::matrix() const {
  const auto& rs = *rs_;
  QMat m = qmat_zero(rs.rank, rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    RootIndex img = perm_[rs.simple[j]];
    for (int i = 0; i < rs.rank; ++i) m[i][j] = Rational(rs.roots[img][i]);
  }
  return m;
}

QVec Isometry::apply(const QVec& v) const {
  const auto& rs = *rs_;
  QVec r = qvec_zero(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    if (v[j].is_zero()) continue;
    RootIndex img = perm_[rs.simple[j]];
    for (int i = 0; i < rs.rank; ++i) r[i] += v[j] * Rational(rs.roots[img][i]);
  }
  return r;
}

PosSet Isometry::apply(const PosSet& s) const {
  const auto& rs = *rs_;
  PosSet out;
  for (std::size_t i = 0; i < rs.n_positive; ++i)
    if (s.test(i)) out.set(rs.pos_half(perm_[i]));
  return out;
}

int Isometry::order() const {
  Isometry g = *this;
  int n = 1;
  while (!g.is_identity()) {
    g = g * *this;
    ++n;
    if (n > 100000) throw std::logic_error("Isometry::order: runaway");
  }
  return n;
}

IsometryGroup::IsometryGroup(const RootSystem& rs, std::vector<Isometry> gens, std::string label)
    : rs_(&rs), gens_(std::move(gens)), label_(std::move(label)) {
  // drop identity generators and duplicates
  std::vector<Isometry> kept;
  for (auto& g : gens_) {
    if (g.is_identity()) continue;
    if (std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(g);
  }
  gens_ = std::move(kept);
}

IsometryGroup IsometryGroup::trivial(const RootSystem& rs) {
  return IsometryGroup(rs, {}, "1");
}

const std::vector<Isometry>& IsometryGroup::elements(std::size_t cap) const {
  if (!elements_.empty()) return elements_;
  std::unordered_set<Isometry, IsometryHash> seen;
  std::vector<Isometry> queue;
  Isometry e = Isometry::identity(*rs_);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    Isometry g = queue.back();
    queue.pop_back();
    for (const auto& s : gens_) {
      Isometry h = s * g;
      if (seen.insert(h).second) {
        if (seen.size() > cap) throw std::runtime_error("IsometryGroup: enumeration cap hit");
        queue.push_back(std::move(h));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  std::sort(elements_.begin(), elements_.end());
  return elements_;
}

long long IsometryGroup::order(std::size_t cap) const {
  return static_cast<long long>(elements(cap).size());
}

bool IsometryGroup::contains(const Isometry& g) const {
  const auto& els = elements();
  return std::binary_search(els.begin(), els.end(), g);
}

bool IsometryGroup::is_trivial() const { return gens_.empty(); }

std::vector<Isometry> diagram_automorphisms(const RootSystem& rs) {
  // A node permutation extends to a root permutation coordinate-wise; it is an
  // isometry iff it preserves the Cartan matrix.
  int n = rs.rank;
  auto a = rs.type.cartan_matrix();
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  while (std::next_permutation(p.begin(), p.end())) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (a[p[i]][p[j]] != a[i][j]) ok = false;
    if (ok) perms.push_back(p);
  }
  std::vector<Isometry> out;
  for (const auto& np : perms) {
    std::vector<RootIndex> perm(rs.size());
    for (std::size_t r = 0; r < rs.size(); ++r) {
      RootCoord c{};
      for (int i = 0; i < n; ++i) c[np[i]] = rs.roots[r][i];
      RootIndex img = rs.index_of(c);
      if (img == kNoRoot) { perm.clear(); break; }
      perm[r] = img;
    }
    if (!perm.empty()) out.emplace_back(rs, std::move(perm));
  }
  return out;
}

std::vector<Isometry> weyl_generators(const RootSystem& rs) {
  std::vector<Isometry> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(Isometry::reflection(rs, rs.simple[i]));
  return gens;
}

std::vector<Isometry> iso_generators(const RootSystem& rs) {
  auto gens = weyl_generators(rs);
  for (auto& d : diagram_automorphisms(rs)) gens.push_back(std::move(d));
  return gens;
}

}  // namespace satake
