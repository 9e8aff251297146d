#pragma once

// Vinberg trichotomy for indecomposable matrices with nonpositive
// off-diagonal entries and symmetric zero pattern: finite, affine or
// indefinite type, each with a re-checkable positive certificate vector.

#include "linepencils/matrix.hpp"

namespace linepencils {

enum class VinbergType { Fin, Aff, Ind };

struct VinbergCertificate {
  VinbergType type;
  IntVec u;  // strictly positive; Bu > 0 (Fin), = 0 (Aff), < 0 (Ind)
};

// throws NotIndecomposable / BadSignPattern when the preconditions fail
VinbergCertificate vinberg_classify(const RatMat& block);
VinbergCertificate vinberg_classify(const IntMat& block);

// re-check a certificate against its block
bool vinberg_verify(const RatMat& block, const VinbergCertificate& cert);

const char* vinberg_name(VinbergType t);

}  // namespace linepencils
