#include "satake/finite_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace satake {

FiniteGroup::FiniteGroup(const IsometryGroup& g) {
  elements_ = g.elements();
  std::size_t n = elements_.size();
  if (n > 4000) throw std::runtime_error("FiniteGroup: group too large to tabulate");
  table_.assign(n, std::vector<std::uint16_t>(n));
  auto find = [&](const Isometry& x) -> std::uint16_t {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
    return static_cast<std::uint16_t>(it - elements_.begin());
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table_[i][j] = find(elements_[i] * elements_[j]);
  inv_.resize(n);
  elt_order_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (elements_[i].is_identity()) id_ = static_cast<std::uint16_t>(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::uint16_t x = static_cast<std::uint16_t>(i), acc = static_cast<std::uint16_t>(i);
    int ord = 1;
    while (acc != id_) {
      acc = table_[acc][x];
      ++ord;
    }
    elt_order_[i] = ord;
    // x^(ord-1) is the inverse
    acc = id_;
    for (int k = 0; k + 1 < ord; ++k) acc = table_[acc][x];
    inv_[i] = acc;
  }
}

std::uint16_t FiniteGroup::index_of(const Isometry& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || !(*it == g))
    throw std::invalid_argument("FiniteGroup::index_of: not an element");
  return static_cast<std::uint16_t>(it - elements_.begin());
}

Subgroup subgroup_closure(const FiniteGroup& g, Subgroup seed) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::uint16_t> members;
  auto add = [&](std::uint16_t x) {
    if (!in[x]) { in[x] = true; members.push_back(x); return true; }
    return false;
  };
  add(g.identity());
  for (auto s : seed) add(s);
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      add(g.mul(members[head], members[j]));
      add(g.mul(members[j], members[head]));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, std::uint16_t x) {
  Subgroup out;
  out.reserve(h.size());
  std::uint16_t xi = g.inv(x);
  for (auto e : h) out.push_back(g.mul(g.mul(x, e), xi));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup canonical_subgroup(const FiniteGroup& g, const Subgroup& h) {
  Subgroup best = h;
  for (std::uint16_t x = 0; x < g.order(); ++x) {
    Subgroup c = conjugate_subgroup(g, h, x);
    if (c < best) best = std::move(c);
  }
  return best;
}

bool subgroup_contains(const Subgroup& h, std::uint16_t x) {
  return std::binary_search(h.begin(), h.end(), x);
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  Subgroup out;
  for (std::uint16_t x = 0; x < g.order(); ++x) {
    if (conjugate_subgroup(g, h, x) == h) out.push_back(x);
  }
  return out;
}

std::vector<Subgroup> subgroup_conjugacy_classes(const FiniteGroup& g) {
  std::set<Subgroup> classes;
  std::vector<Subgroup> worklist;

  auto add_class = [&](const Subgroup& h) {
    Subgroup canon = canonical_subgroup(g, h);
    if (classes.insert(canon).second) worklist.push_back(canon);
  };

  add_class(Subgroup{g.identity()});

  // Perfect seeds: copies of GL3(2), reachable as <involution, order-7 elt>.
  if (g.order() % 168 == 0) {
    std::vector<std::uint16_t> invols, sevens;
    for (std::uint16_t x = 0; x < g.order(); ++x) {
      if (g.element_order(x) == 2) invols.push_back(x);
      if (g.element_order(x) == 7) sevens.push_back(x);
    }
    for (auto a : invols)
      for (auto b : sevens) {
        Subgroup k = subgroup_closure(g, {a, b});
        if (k.size() == 168) add_class(k);
      }
  }

  while (!worklist.empty()) {
    Subgroup h = worklist.back();
    worklist.pop_back();
    Subgroup n = normalizer(g, h);
    for (auto x : n) {
      if (subgroup_contains(h, x)) continue;
      // order of the coset xH in N/H; extend only by prime steps
      int m = 1;
      std::uint16_t acc = x;
      while (!subgroup_contains(h, acc)) { acc = g.mul(acc, x); ++m; }
      bool prime = m > 1;
      for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) { prime = false; break; }
      if (!prime) continue;
      Subgroup k = h;
      k.push_back(x);
      add_class(subgroup_closure(g, k));
    }
  }

  std::vector<Subgroup> out(classes.begin(), classes.end());
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool conjugate_into(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  if (h.size() > k.size() || k.size() % h.size() != 0) return false;
  for (std::uint16_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    std::uint16_t xi = g.inv(x);
    for (auto e : h) {
      if (!subgroup_contains(k, g.mul(g.mul(x, e), xi))) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

std::map<int, int> order_multiset(const FiniteGroup& g, const Subgroup& h) {
  std::map<int, int> m;
  for (auto e : h) m[g.element_order(e)]++;
  return m;
}

namespace {

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
  for (auto a : h)
    for (auto b : h)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::string abelian_label(std::size_t n, const std::map<int, int>& om) {
  int maxo = om.rbegin()->first;
  if (static_cast<std::size_t>(maxo) == n) return "Z" + std::to_string(n);
  // elementary abelian
  if (maxo == 2) {
    int k = 0;
    std::size_t m = n;
    while (m > 1) { m /= 2; ++k; }
    return "(Z2)^" + std::to_string(k);
  }
  if (n == 8 && maxo == 4) return "Z4xZ2";
  if (n == 12 && maxo == 6) return "Z6xZ2";
  if (n == 16 && maxo == 4 && om.at(4) == 12) return "Z4xZ4";
  if (n == 16 && maxo == 4) return "Z4x(Z2)^2";
  if (n == 16 && maxo == 8) return "Z8xZ2";
  if (n == 18 && maxo == 6) return "Z6xZ3";
  if (n == 24 && maxo == 12) return "Z12xZ2";
  if (n == 36 && maxo == 6) return "Z6xZ6";
  return "Ab" + std::to_string(n);
}

}  // namespace

std::string subgroup_label(const FiniteGroup& g, const Subgroup& h) {
  std::size_t n = h.size();
  if (n == 1) return "1";
  auto om = order_multiset(g, h);
  if (is_abelian(g, h)) return abelian_label(n, om);
  auto count = [&](int k) { return om.count(k) ? om.at(k) : 0; };
  switch (n) {
    case 6: return "S3";
    case 8: return count(4) == 2 ? "Di8" : "Q8";
    case 10: return "Di10";
    case 12:
      // dihedral of order 12 and Z2 x S3 are the same group; the tables use
      // both names, we normalize on Z2xS3
      if (count(3) == 8) return "A4";
      if (count(4) == 6) return "Dic3";
      return "Z2xS3";
    case 14: return "Di14";
    case 16:
      if (count(8) == 4 && count(2) == 5) return "SDi16";
      if (count(8) == 4 && count(2) == 9) return "Di16";
      if (count(8) == 4 && count(2) == 1) return "Q16";
      if (count(4) == 10) return "G16";
      return "G16";
    case 18:
      if (count(2) == 9) return "Di18";
      return count(6) > 0 ? "Z3xS3" : "(Z3)^2:Z2";
    case 20: return count(4) > 2 ? "F20" : "Di20";
    case 21: return "Z7:Z3";
    case 24:
      if (count(2) == 9 && count(4) == 6) return "S4";
      if (count(6) == 6 && count(2) == 1) return "SL2(3)";
      if (count(6) == 8) return "Z2xA4";
      if (count(12) > 0) return count(2) == 7 ? "Di24" : "Z3:Z8";
      return "G24";
    case 36:
      if (count(4) > 0 && count(2) == 9) return "S3xS3";
      return "G36";
    case 42: return "Z7:Z6";
    case 48:
      // order multiset separates GL2(3) from the other order-48 groups here
      if (count(8) == 12 && count(2) == 13 && count(6) == 8) return "GL2(3)";
      if (count(2) == 19) return "Z2xS4";
      return "G48";
    case 56: return "(Z2)^3:Z7";
    case 64: return "G64";
    case 72: return "G72";
    case 96: return "G96";
    case 168:
      if (count(7) == 48 && count(3) == 56) return "GL3(2)";
      return "G168";
    case 192: return "G192";
    case 336: return "G336";
    case 384: return "G384";
    case 1344:
      return "AGL3(2)";
    default: break;
  }
  return "G" + std::to_string(n);
}

std::string group_label(const IsometryGroup& g) {
  if (g.is_trivial()) return "1";
  FiniteGroup fg(g);
  Subgroup whole;
  for (std::uint16_t i = 0; i < fg.order(); ++i) whole.push_back(i);
  return subgroup_label(fg, whole);
}

}  // namespace satake
