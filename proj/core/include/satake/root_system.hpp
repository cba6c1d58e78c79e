#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "satake/cartan.hpp"
#include "satake/linalg.hpp"

namespace satake {

/// Root coordinates in the simple-root basis of the ambient system.
/// Entries fit comfortably in int8 (the largest coefficient anywhere up to
/// rank 8 is 6, on the E8 highest root).
using RootCoord = std::array<std::int8_t, 8>;

using RootIndex = std::uint16_t;
inline constexpr RootIndex kNoRoot = 0xffff;

/// A subsystem closed under negation, stored as its set of positive roots.
using PosSet = std::bitset<128>;

/// Immutable root system with exact inner product.
///
/// Roots are ordered positives first, each half sorted by (height, lex), so
/// indices are canonical for a given type. All values are immutable after
/// construction; concurrent readers need no locking.
class RootSystem {
public:
  static const RootSystem& get(CartanType t);  // global cache, one per type

  CartanType type;
  int rank;
  std::vector<RootCoord> roots;
  std::size_t n_positive = 0;
  QMat form;                        // symmetrized Cartan matrix, long norm^2 = 2
  std::vector<RootIndex> simple;    // indices of the simple roots
  std::vector<RootIndex> neg;       // index of the negative of each root
  RootIndex highest_root;           // highest root w.r.t. the simple base
  RootIndex highest_short_root;     // = highest_root when simply laced

  std::size_t size() const { return roots.size(); }

  RootIndex index_of(const RootCoord& c) const;       // kNoRoot if absent
  bool is_positive(RootIndex r) const { return r < n_positive; }
  int height(RootIndex r) const;

  Rational inner(const QVec& v, const QVec& w) const;
  Rational inner_roots(RootIndex a, RootIndex b) const;
  /// 6*(a,b) as an integer (integral for every root pair up to rank 8).
  int inner6(RootIndex a, RootIndex b) const { return inner6_[a][b]; }
  Rational norm2(RootIndex r) const { return inner_roots(r, r); }
  bool is_long(RootIndex r) const;

  /// Cartan integer <b, a> = 2(b,a)/(a,a).
  long long cartan_int(RootIndex a, RootIndex b) const;

  QVec coords_q(RootIndex r) const;

  /// Reflection of an arbitrary vector about root a.
  QVec reflect(RootIndex a, const QVec& v) const;

  /// Reflection of a root about a root, as an index.
  RootIndex reflect_root(RootIndex a, RootIndex b) const;

  /// Largest (down, up) with b - down*a and b + up*a in the system.
  std::pair<int, int> root_string(RootIndex a, RootIndex b) const;

  /// |c^{mn}_{ab}| for every (m, n) with m*a + n*b a root, m, n > 0.
  std::vector<std::tuple<int, int, long long>> structure_constant_magnitudes(
      RootIndex a, RootIndex b) const;

  /// Action of the reflection about root a on all root indices (memoized).
  const std::vector<RootIndex>& reflection_perm(RootIndex a) const;

  /// Positive-half projection: index of r or of -r among the positives.
  RootIndex pos_half(RootIndex r) const { return r < n_positive ? r : neg[r]; }

  /// Action of reflection_perm on positive halves of negation-closed sets.
  const std::vector<RootIndex>& reflection_pos_perm(RootIndex a) const;

  PosSet full_set() const;
  std::vector<RootIndex> set_to_roots(const PosSet& s) const;  // both halves

private:
  explicit RootSystem(CartanType t);
  mutable std::vector<std::vector<RootIndex>> refl_cache_;
  mutable std::vector<std::vector<RootIndex>> refl_pos_cache_;
  std::vector<std::vector<std::int8_t>> inner6_;
};

/// |N_{a,b}| = p + 1 where p is the down-string of b through a; 0 when a + b
/// is not a root.
long long chevalley_n_magnitude(const RootSystem& rs, RootIndex a, RootIndex b);

}  // namespace satake
