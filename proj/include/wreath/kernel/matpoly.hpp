#pragma once

#include "wreath/kernel/bitmatrix.hpp"
#include "wreath/kernel/poly.hpp"

namespace wreath {

FieldPtr gf2();

/// Characteristic polynomial over GF(2), via a Krylov decomposition.
Poly char_poly(const BitMatrix& m);
/// Monic minimal polynomial over GF(2).
Poly min_poly(const BitMatrix& m);
/// Minimal polynomial of v under right multiplication by m.
Poly local_min_poly(const BitMatrix& m, const BitVec& v);
/// p(m) for p over GF(2).
BitMatrix evaluate(const Poly& p, const BitMatrix& m);

}  // namespace wreath
