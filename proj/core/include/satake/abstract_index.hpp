#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satake/subsystem.hpp"

namespace satake {

/// The quadruple (E, Delta, Delta0, Pi) realized inside an ambient root
/// system: E is the ambient space, delta a base of a subsystem given by
/// positive roots, delta0 a subset, pi a group of isometries stabilizing
/// both. Central torus bookkeeping (c = split central rank, d = central rank)
/// rides along for the T^d_c notation instead of extra ambient dimensions.
struct AbstractIndex {
  const RootSystem* ambient = nullptr;
  std::vector<RootIndex> delta;
  std::vector<RootIndex> delta0;
  IsometryGroup pi;

  const RootSystem& system() const { return *ambient; }
  bool in_delta0(RootIndex r) const;
  PosSet psi() const;   // <delta>
  PosSet psi0() const;  // <delta0>

  /// Orbits of pi on delta \ delta0.
  std::vector<std::vector<RootIndex>> distinguished_orbits() const;

  /// E_s = fixed(pi) within (span delta0)^perp; E_a = orthocomplement.
  std::vector<QVec> e_s_basis() const;
  std::vector<QVec> e_a_basis() const;

  int central_rank() const;        // d = dim E - |delta|
  int split_central_rank() const;  // c = dim(Ebar ∩ E_s)

  bool is_quasisplit() const { return delta0.empty(); }
  bool is_split() const { return delta0.empty() && pi.is_trivial(); }
  bool is_anisotropic() const;
  bool is_isotropic() const { return !is_anisotropic(); }
  bool is_inner() const { return pi.is_trivial(); }

  int rank() const;           // |delta| + dim Ebar
  int relative_rank() const;  // dim E_s
};

/// Pointwise fixed subspace of the group inside the given subspace, via the
/// exact kernel of sum_{sigma in Pi}(sigma - id) restricted to it.
/// Throws if the group does not stabilize the subspace.
std::vector<QVec> fixed_space(const IsometryGroup& pi, const std::vector<QVec>& subspace);

struct IndexValidation {
  bool valid = true;
  std::string violation;  // empty, or "structure" / "axiom (i)" / "axiom (ii)" / "axiom (iii)"
  std::string detail;
};

/// Tits' three axioms: (i) the projection of delta \ delta0 to E_s is a base
/// of a possibly non-reduced root system, (ii) -w0 commutes with pi and
/// stabilizes delta0, (iii) removing any distinguished orbit leaves an index.
IndexValidation validate_index(const AbstractIndex& idx);

struct DerivedStructure {
  std::vector<QVec> e_s;
  std::vector<QVec> e_a;
  AbstractIndex anisotropic_kernel;  // (E_a as ambient bookkeeping: same system)
  AbstractIndex minimal_subindex;
  int rank;
  int relative_rank;
  bool split, quasisplit, isotropic, inner;
};

DerivedStructure derived_structure(const AbstractIndex& idx);

/// All pi-stable subsets of delta containing delta0, as indices.
std::vector<AbstractIndex> subindices(const AbstractIndex& idx);

struct IndexName {
  std::string type_label;           // "1E6", "2E6", "F4", ...
  std::string anisotropic_pattern;  // kernel type string
  std::string tits_name;            // "F II", "E IX", or a synthesized code
};

/// Canonical isomorphism-invariant fingerprint of an index (type of each
/// pi-irreducible block, kernel pattern up to diagram symmetry, pi structure).
std::string index_iso_fingerprint(const AbstractIndex& idx);

bool is_isomorphic(const AbstractIndex& a, const AbstractIndex& b);

/// W-conjugacy of two decorated triples in the shared ambient; returns a
/// witness when conjugate.
std::optional<Isometry> conjugate_in(const RootSystem& rs, const AbstractIndex& a,
                                     const AbstractIndex& b);

}  // namespace satake
