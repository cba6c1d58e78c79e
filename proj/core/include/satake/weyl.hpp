#pragma once

#include <optional>
#include <unordered_map>

#include "satake/isometry.hpp"

namespace satake {

struct ChamberWalk {
  Isometry w;              // the Weyl element
  std::vector<int> word;   // reduced word certificate, w = s_{word.back()} ... s_{word.front()}
};

/// The unique w in W taking the chamber of image_base to the fundamental
/// chamber, i.e. w(image_base) = fundamental base as a set.
/// Throws std::invalid_argument if image_base is not a base of Phi.
ChamberWalk to_base(const RootSystem& rs, const std::vector<RootIndex>& image_base);

/// Unique u in W_Psi (Psi = <delta>) with u(image) = delta as sets, where
/// image is another base of Psi. Walks with reflections about delta only.
Isometry to_base_in_subsystem(const RootSystem& rs, const std::vector<RootIndex>& delta,
                              const std::vector<RootIndex>& image);

/// Is sigma an element of W? (sigma must stabilize Phi, which it does by type.)
bool is_in_weyl(const RootSystem& rs, const Isometry& sigma);

/// Orbit of a negation-closed root set under a generating set, with Schreier
/// transversal bookkeeping. States are positive-halves.
class SubsystemOrbit {
public:
  SubsystemOrbit(const RootSystem& rs, const PosSet& start, const std::vector<Isometry>& gens,
                 bool collect_stabilizer = true);

  const RootSystem& system() const { return *rs_; }
  std::size_t size() const { return states_.size(); }
  const PosSet& state(std::size_t i) const { return states_[i]; }
  const PosSet& canonical() const { return states_[canonical_id_]; }
  const PosSet& start() const { return states_[0]; }

  std::optional<std::size_t> find(const PosSet& s) const;

  /// Group element mapping start() to state i.
  Isometry transversal(std::size_t i) const;

  /// Schreier generators of the setwise stabilizer of start().
  const std::vector<Isometry>& stabilizer_generators() const { return stab_gens_; }

private:
  const RootSystem* rs_;
  const std::vector<Isometry>* gens_;
  std::vector<PosSet> states_;
  std::vector<std::pair<std::uint32_t, std::int32_t>> parent_;  // (state, gen)
  std::unordered_map<PosSet, std::uint32_t> index_;
  std::size_t canonical_id_ = 0;
  std::vector<Isometry> stab_gens_;
};

/// Lexicographic order on sorted index sets (smaller first-differing index wins).
bool pos_set_less(const PosSet& a, const PosSet& b);

struct OrbitResult {
  PosSet canonical;
  std::size_t orbit_size;
  IsometryGroup stabilizer;  // setwise stabilizer of the input set, Schreier generators
};

/// W-orbit (or Iso(Phi)-orbit) of a subsystem with canonical representative
/// and setwise stabilizer.
OrbitResult orbit_of_subsystem(const RootSystem& rs, const PosSet& psi, bool with_outer = false);

/// The group of the base: permutations of delta induced by the setwise
/// W-stabilizer of <delta> (the paper's Stab_W(Delta)), returned as honest
/// isometries of E fixing delta setwise.
IsometryGroup stab_of_base(const RootSystem& rs, const std::vector<RootIndex>& delta);

/// Same with Iso(Phi) in place of W.
IsometryGroup iso_stab_of_base(const RootSystem& rs, const std::vector<RootIndex>& delta);

/// Product of the fundamental degrees.
long long weyl_order(CartanType t);

/// Base of a negation-closed subsystem induced by the ambient positivity:
/// positive members not expressible as a sum of two positive members.
std::vector<RootIndex> induced_base(const RootSystem& rs, const PosSet& psi);

/// Subsystem generated by a set of roots (reflection closure, no p-condition).
PosSet span_closure(const RootSystem& rs, const std::vector<RootIndex>& gens);

}  // namespace satake
