#pragma once

#include "satake/classifier.hpp"

namespace satake {

/// Column values for the special-fields columns: Y, N, ? and Y* (imported
/// from the literature rather than derived here).
enum class Flag { Yes, No, Unknown, ImportedYes };

std::string flag_str(Flag f);

struct AdmissibilityFlags {
  Flag cd1 = Flag::No;
  Flag real = Flag::No;
  Flag padic = Flag::No;
};

/// Columns 8-10 for one (row, G) pair. The imported static data covers the
/// rows whose real-field value the paper itself takes from the literature.
AdmissibilityFlags admissibility_flags(const ClassificationRow& row, const std::string& g_name);

}  // namespace satake
