#pragma once

#include <set>

#include "satake/embedding.hpp"
#include "satake/finite_group.hpp"

namespace satake {

/// One row of the classification: an isotropic maximal H-candidate over a
/// given exceptional ambient, with the admissible ambient indices G (possibly
/// none) and the set of p where the row is a p-embedding.
struct ClassificationRow {
  std::string delta_class;  // tagged type of <Delta>
  std::string stab_w;       // Stab_W(Delta) label
  long long stab_w_order = 1;
  std::string pi_label;
  AbstractIndex h;
  std::string h_code;  // canonical index descriptor, e.g. "3D4[*o**]xT2_0"
  std::string psi0;
  std::string phi_a;
  std::vector<std::string> g_names;
  std::set<long long> p_set;
};

/// Conjugacy classes of subgroups of a stabilizer group, labeled.
struct PiClass {
  IsometryGroup group;
  std::string label;
};

std::vector<PiClass> subgroup_classes(const IsometryGroup& g);

/// The subgroup of Stab_Iso(Delta) stabilizing a given containing subsystem
/// position (column 5 of the paper's almost-primitive-but-not-maximal table).
IsometryGroup stab_sigma(const RootSystem& rs, const std::vector<RootIndex>& delta,
                         const PosSet& sigma_position);

/// All positions of almost p-primitive subsystems strictly containing psi.
std::vector<PosSet> containing_almost_primitive_positions(const RootSystem& rs,
                                                          const PosSet& psi, long long p);

/// Conjugacy classes of Pi <= Stab_Iso(Delta) making (H, Phi) maximal:
/// not conjugate into any position stabilizer, and with trivial fixed space
/// on the central complement.
std::vector<PiClass> maximal_pi_classes(const RootSystem& rs, const PosSet& psi, long long p);

/// Used by is_maximal(characterization).
bool pi_class_is_maximal_table3(const RootSystem& rs, const PosSet& psi,
                                const IsometryGroup& pi, long long p);

/// Candidate H-indices for a (Delta, Pi-class) pair: all W-classes of valid
/// isotropic decorated triples (Delta, Delta0, Pi'), Pi' in the class.
struct HCandidate {
  AbstractIndex h;
  std::string h_code;
};
std::vector<HCandidate> candidate_h_indices(const RootSystem& rs,
                                            const std::vector<RootIndex>& delta,
                                            const IsometryGroup& stab_w_group,
                                            const PiClass& pi_class);

/// The full pipeline for one ambient type and characteristic.
std::vector<ClassificationRow> classify(CartanType t, long long p);

/// Rows for all p in {0,2,3} merged, with p_set filled in.
std::vector<ClassificationRow> classify_all(CartanType t);

/// Canonical serialized descriptor of an index (used in row CSV and golden
/// files): per pi-block "<g>TYPE[o/* pattern in Bourbaki order]", blocks
/// joined with "x", central torus as "xT<d>_<c>".
std::string index_code(const AbstractIndex& idx);

}  // namespace satake
