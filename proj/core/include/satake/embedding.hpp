#pragma once

#include "satake/abstract_index.hpp"
#include "satake/tits_table.hpp"

namespace satake {

/// A p-embedding of abstract indices with theta the identity: the spec stores
/// H's base directly as positive roots of Phi = <Lambda> (the paper's
/// "identify H with its image under theta").
struct IndexEmbedding {
  AbstractIndex g;  // (F, Lambda, Lambda0, Xi), Lambda the fundamental base
  AbstractIndex h;  // (E, Delta, Delta0, Pi), Delta positive roots of Phi
  long long p = 0;
};

struct AnisotropicData {
  std::vector<QVec> e_s, e_a;
  PosSet phi_a, phi_s;
  PosSet psi0;
  PosSet in_phi_a;   // union of components of phi_a inside psi0
  PosSet phi_ebar_a; // Phi ∩ (E_{Delta0})^perp ∩ E_a
};

AnisotropicData anisotropic_data(const AbstractIndex& h);

struct EmbeddingValidation {
  bool valid = true;
  std::string axiom;   // "A.1" ... "A.4" when invalid
  std::string detail;
  bool a2_injective = true;  // reported, never failed on
};

EmbeddingValidation validate_embedding(const IndexEmbedding& e);

/// Lambda_a = Lambda ∩ E_a(h) as root indices.
std::vector<RootIndex> lambda_a(const IndexEmbedding& e);

/// The (H, theta)-embedded subindex L = (F, Lambda_a, Lambda0, Xi), plus the
/// minimal subindex H_m of H for the Levi reduction pair (L, H_m, theta).
struct EmbeddedSubindex {
  AbstractIndex l;
  AbstractIndex h_m;
};
EmbeddedSubindex embedded_subindex(const IndexEmbedding& e);

enum class MaximalityMode { Direct, Characterization };
bool is_maximal(const IndexEmbedding& e, MaximalityMode mode);

/// Search W_Lambda for a conjugation of the decorated triples.
std::optional<Isometry> conjugate_embeddings(const IndexEmbedding& a, const IndexEmbedding& b);

struct EmbeddingFlags {
  bool isotropic = false;
  bool split = false;
  bool quasisplit = false;
  bool independent = false;
  bool maximal = false;
};

EmbeddingFlags embedding_flags(const IndexEmbedding& e);

}  // namespace satake
