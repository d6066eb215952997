#ifndef ORBICAT_FACTOR_HPP
#define ORBICAT_FACTOR_HPP

#include <vector>

#include "orbicat/poly.hpp"

namespace orbicat {

// Monic irreducible factors of f (with multiplicity, repeated factors
// adjacent), over the smallest cyclotomic field containing the coefficients
// of f.  Deterministic: factors are sorted by degree, then coefficient order.
// The constant content is dropped; a nonzero constant input yields {}.
std::vector<KPoly> factor_poly(const KPoly& f);

// Same, but over the stated field (which must contain every coefficient).
// Matters when rational-looking input should split in a larger field.
std::vector<KPoly> factor_poly(const KPoly& f, const CycField* field);

// The distinct roots of f that lie in its coefficient field (resp. the stated
// field), in deterministic order.  f need not split; only the linear factors
// contribute.
std::vector<CycScalar> roots_in_field(const KPoly& f);
std::vector<CycScalar> roots_in_field(const KPoly& f, const CycField* field);

}  // namespace orbicat

#endif
