#pragma once

#include <string>
#include <vector>

#include "satake/weyl.hpp"

namespace satake {

/// Smallest p-closed set containing seed and -seed. A set S is p-closed when
/// for a, b in S and m, n > 0 with ma+nb a root and |c^{mn}_{ab}| nonzero
/// mod p, the root ma+nb lies in S (p = 0 reads as: |c| != 0, i.e. always).
PosSet p_closure(const RootSystem& rs, const std::vector<RootIndex>& seed, long long p);
PosSet p_closure_set(const RootSystem& rs, const PosSet& seed, long long p);

bool is_p_closed(const RootSystem& rs, const PosSet& psi, long long p);

/// Roots orthogonal to every member of psi.
PosSet perp_set(const RootSystem& rs, const PosSet& psi);

/// psi = Phi ∩ span(psi)?
bool is_parabolic_subsystem(const RootSystem& rs, const PosSet& psi);

/// Is psi contained in some subsystem of type D4?
bool contained_in_d4(const RootSystem& rs, const PosSet& psi);

/// Irreducible components of the induced base, each a list of base roots.
std::vector<std::vector<RootIndex>> base_components(const RootSystem& rs,
                                                    const std::vector<RootIndex>& base);

/// Type string without Carter tags, e.g. "D4(A1)^3", "A2A2~", "-" for empty.
/// Tilde marks all-short components in a non-simply-laced ambient.
std::string identify_type_untagged(const RootSystem& rs, const PosSet& psi);

/// Type string with ' / '' tags where the ambient has several W-classes of
/// the same isomorphism type that the classification distinguishes.
std::string identify_type(const RootSystem& rs, const PosSet& psi);

/// Conjugation-invariant fingerprint used to separate W-classes cheaply:
/// tagged type, size, parabolicity, perp type, and the multiset of
/// inner-product profiles of the ambient roots against psi.
struct ClassKey {
  std::string type;
  std::size_t size = 0;
  bool parabolic = false;
  std::string perp_type;
  std::vector<std::uint64_t> profile;  // sorted per-root profile hashes

  bool operator==(const ClassKey& o) const = default;
  bool operator<(const ClassKey& o) const {
    if (type != o.type) return type < o.type;
    if (size != o.size) return size < o.size;
    if (parabolic != o.parabolic) return parabolic < o.parabolic;
    if (perp_type != o.perp_type) return perp_type < o.perp_type;
    return profile < o.profile;
  }
};

ClassKey class_key(const RootSystem& rs, const PosSet& psi);

/// Are the two subsystems W-conjugate? Invariant screen first, orbit search
/// only when the screen cannot decide. For rank <= 4 ambients the orbit
/// search is always used (triality splits classes there that no isometry
/// invariant can separate).
bool conjugate_subsystems(const RootSystem& rs, const PosSet& a, const PosSet& b);

/// W-class representatives of all p-closed subsystems. Exhaustive for G2/F4
/// (every p-closed set is the closure of at most rank seeds); Borel-de
/// Siebenthal recursion for the simply-laced types where p-closed = closed.
std::vector<PosSet> p_closed_class_reps(const RootSystem& rs, long long p);

/// Representatives of subsystems maximal among proper p-closed ones.
std::vector<PosSet> maximal_p_closed_subsystems(const RootSystem& rs, long long p);

struct AlmostPrimitiveEntry {
  PosSet rep;
  std::string type;        // tagged type string
  std::string stab_label;  // Stab_W(Delta) label, "W(Phi)" for the empty set
  long long stab_order;
};

/// Almost p-primitive subsystems with their Stab_W(Delta) data, ordered to
/// match the paper's tables (rank desc, then type string; empty set last).
std::vector<AlmostPrimitiveEntry> almost_primitive(const RootSystem& rs, long long p);

}  // namespace satake
