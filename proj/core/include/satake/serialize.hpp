#pragma once

#include <string>

#include "satake/admissibility.hpp"

namespace satake {

/// Tits-Satake JSON document for an index: ambient type, delta as ambient
/// root indices (Bourbaki node order for full-rank bases), delta0 as
/// positions into delta, pi generators as node-position permutations, the
/// central (c, d) bookkeeping, plus the full root permutations of the pi
/// generators so the round trip is lossless off the span of delta.
std::string index_to_json(const AbstractIndex& idx);
AbstractIndex index_from_json(const std::string& json);

/// { "p": ..., "G": index-doc, "H": index-doc, "flags": {...} }; flags are
/// recomputed on load, never trusted.
std::string embedding_to_json(const IndexEmbedding& e);
IndexEmbedding embedding_from_json(const std::string& json);

/// ASCII Tits-Satake rendering: one line per component, nodes in Bourbaki
/// order ("o" distinguished, "*" blackened), pi orbits listed as node groups.
std::string render_index(const AbstractIndex& idx);

/// Classification rows as CSV with columns
/// Delta,StabW,Pi,H,Psi0,Phi_a,G,p_set,cd1,R,Qp (one line per (row, G) pair,
/// a single line with empty G columns for rows without admissible G).
std::string rows_to_csv(const std::vector<ClassificationRow>& rows);
std::string rows_to_json(const std::vector<ClassificationRow>& rows);

}  // namespace satake
