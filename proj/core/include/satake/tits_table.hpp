#pragma once

#include <set>

#include "satake/abstract_index.hpp"

namespace satake {

/// Static entry for an isotropic index of exceptional type: the shapes that
/// can appear as the ambient index G in the classification, with their names
/// and per-field admissibility annotations (Tits Table II).
struct ExceptionalIndexEntry {
  std::string name;             // "F I", "E IX", "1E7{D6}", ...
  std::vector<int> delta0_nodes;  // 0-based Bourbaki positions
  int pi_order;                 // 1 or 2
  bool real_admissible;
  bool padic_admissible;
  bool cd1_admissible;          // quasisplit entries only (Steinberg)
};

/// Isotropic indices of the given exceptional type, in table order.
const std::vector<ExceptionalIndexEntry>& exceptional_isotropic_indices(CartanType t);

/// Realize an entry concretely in its ambient system: delta = fundamental
/// base, delta0 by node positions, pi trivial or the diagram flip.
AbstractIndex realize_exceptional_index(CartanType t, const ExceptionalIndexEntry& e);

/// Name lookup for a G-index given ambient type, pi order and the canonical
/// kernel data; throws if no Table II entry matches.
const ExceptionalIndexEntry& identify_exceptional_entry(const AbstractIndex& g);

IndexName identify_name(const AbstractIndex& idx);

/// Is the index realizable as the index of a group over the given class of
/// fields? Real: |pi| <= 2 plus the per-family Satake patterns of real forms.
/// p-adic: pi solvable plus A-type anisotropic kernels with the classical
/// bounds on anisotropic dimensions.
bool index_real_admissible(const AbstractIndex& idx);
bool index_padic_admissible(const AbstractIndex& idx);

/// Is the black-node pattern (1-based standard Bourbaki positions) one of
/// Tits' Table II rows for the family, rank and fold order? The paper's
/// axioms (i)-(iii) are necessary but not sufficient (a pattern like
/// B4[*o*o] passes them and admits no group over any field), so candidate
/// enumeration is driven by this catalog and merely cross-validated by the
/// axioms.
bool pattern_in_table_ii(char family, int n, int fold, const std::set<int>& black);

/// Check all pi-blocks of an index against Table II.
bool index_in_table_ii(const AbstractIndex& idx);

/// (type string, minimal black mask over isomorphisms onto the standard
/// Bourbaki diagram of the component's type); bit p = black at standard
/// position p+1.
std::pair<std::string, std::uint32_t> component_standard_pattern(
    const RootSystem& rs, const std::vector<RootIndex>& comp,
    const std::vector<RootIndex>& black);

}  // namespace satake
