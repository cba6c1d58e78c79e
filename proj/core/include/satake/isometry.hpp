#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satake/root_system.hpp"

namespace satake {

/// Element of Iso(Phi): a permutation of the root indices that preserves the
/// inner product. The matrix action on E is derived from the images of the
/// simple roots when needed.
class Isometry {
public:
  Isometry() : rs_(nullptr) {}
  Isometry(const RootSystem& rs, std::vector<RootIndex> perm)
      : rs_(&rs), perm_(std::move(perm)) {}

  static Isometry identity(const RootSystem& rs);
  static Isometry reflection(const RootSystem& rs, RootIndex a);

  const RootSystem& system() const { return *rs_; }
  const std::vector<RootIndex>& perm() const { return perm_; }
  RootIndex operator()(RootIndex r) const { return perm_[r]; }

  bool is_identity() const;
  Isometry inverse() const;
  /// (a * b)(x) = a(b(x)).
  friend Isometry operator*(const Isometry& a, const Isometry& b);

  bool operator==(const Isometry& o) const { return perm_ == o.perm_; }
  bool operator<(const Isometry& o) const { return perm_ < o.perm_; }

  QMat matrix() const;
  QVec apply(const QVec& v) const;
  PosSet apply(const PosSet& s) const;

  /// Order as a group element.
  int order() const;

private:
  const RootSystem* rs_;
  std::vector<RootIndex> perm_;
};

struct IsometryHash {
  std::size_t operator()(const Isometry& g) const {
    std::size_t h = 1469598103934665603ull;
    for (RootIndex r : g.perm()) {
      h ^= r;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Finitely generated group of isometries with optional full enumeration.
class IsometryGroup {
public:
  IsometryGroup() = default;
  IsometryGroup(const RootSystem& rs, std::vector<Isometry> gens, std::string label = "");

  static IsometryGroup trivial(const RootSystem& rs);

  const RootSystem& system() const { return *rs_; }
  const std::vector<Isometry>& generators() const { return gens_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  /// Full element list (cached). Throws if the closure exceeds the cap; the
  /// largest group this is ever called on is AGL3(2), order 1344.
  const std::vector<Isometry>& elements(std::size_t cap = 2000000) const;
  long long order(std::size_t cap = 2000000) const;
  bool contains(const Isometry& g) const;
  bool is_trivial() const;

private:
  const RootSystem* rs_ = nullptr;
  std::vector<Isometry> gens_;
  std::string label_;
  mutable std::vector<Isometry> elements_;
};

/// Non-trivial Dynkin diagram automorphisms of the fundamental base, extended
/// to root permutations. Empty for B, C, F4, G2, E7, E8.
std::vector<Isometry> diagram_automorphisms(const RootSystem& rs);

/// Generators of W (simple reflections).
std::vector<Isometry> weyl_generators(const RootSystem& rs);

/// Generators of Iso(Phi) = W plus diagram automorphisms.
std::vector<Isometry> iso_generators(const RootSystem& rs);

}  // namespace satake
