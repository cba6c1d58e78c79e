#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "satake/isometry.hpp"

namespace satake {

/// A fully enumerated finite group with a multiplication table, built from an
/// IsometryGroup. Elements are indexed into the sorted element list.
class FiniteGroup {
public:
  explicit FiniteGroup(const IsometryGroup& g);

  std::size_t order() const { return elements_.size(); }
  const Isometry& element(std::uint16_t i) const { return elements_[i]; }
  std::uint16_t identity() const { return id_; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return table_[a][b]; }
  std::uint16_t inv(std::uint16_t a) const { return inv_[a]; }
  int element_order(std::uint16_t a) const { return elt_order_[a]; }
  std::uint16_t index_of(const Isometry& g) const;

private:
  std::vector<Isometry> elements_;
  std::vector<std::vector<std::uint16_t>> table_;
  std::vector<std::uint16_t> inv_;
  std::vector<int> elt_order_;
  std::uint16_t id_ = 0;
};

/// Subgroup as a sorted vector of element indices.
using Subgroup = std::vector<std::uint16_t>;

Subgroup subgroup_closure(const FiniteGroup& g, Subgroup seed);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, std::uint16_t x);
/// Lexicographically minimal conjugate, the canonical class representative.
Subgroup canonical_subgroup(const FiniteGroup& g, const Subgroup& h);
bool subgroup_contains(const Subgroup& h, std::uint16_t x);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

/// All conjugacy classes of subgroups, canonical representatives sorted by
/// (order, representative). Cyclic extension plus a scan for GL3(2)-type
/// perfect subgroups (the only non-trivial perfect ones that fit in the
/// stabilizer groups of this classification, AGL3(2) being the largest).
std::vector<Subgroup> subgroup_conjugacy_classes(const FiniteGroup& g);

/// Is some conjugate of h contained in k?
bool conjugate_into(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// Isomorphism-type label from order + abelianness + element-order multiset;
/// covers the groups named in the tables and falls back to "G<order>".
std::string subgroup_label(const FiniteGroup& g, const Subgroup& h);

std::string group_label(const IsometryGroup& g);

/// Multiset of element orders, as order -> count.
std::map<int, int> order_multiset(const FiniteGroup& g, const Subgroup& h);

}  // namespace satake
