#pragma once

// Serial reference versions of the OpenMP kernels. They share the math of
// the parallel paths but none of the scheduling, and tests compare the two.

#include <secular/matrix.hpp>

#include <vector>

namespace secular::reference {

UPoly det_pencil(const PMatrix& p);
PMatrix adjugate_pencil(const PMatrix& p);

}  // namespace secular::reference
