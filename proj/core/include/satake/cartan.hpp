#pragma once

#include <string>
#include <vector>

#include "satake/linalg.hpp"

namespace satake {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Irreducible Cartan type, Bourbaki numbering throughout.
struct CartanType {
  Family family;
  int rank;

  CartanType(Family f, int r);

  bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
  bool is_exceptional() const;
  bool is_simply_laced() const;

  std::string name() const;
  static CartanType parse(const std::string& s);

  /// Cartan matrix A with A[i][j] = <alpha_j, alpha_i> = 2(ai,aj)/(ai,ai).
  std::vector<std::vector<int>> cartan_matrix() const;

  /// (alpha_i, alpha_i)/2 under the "long roots have norm^2 = 2" normalization.
  QVec root_half_norms() const;

  /// Fundamental degrees d_1..d_r; the Weyl group order is their product.
  std::vector<long long> degrees() const;

  long long weyl_order() const;
};

}  // namespace satake
