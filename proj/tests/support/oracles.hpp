#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Everything here is deliberately simple and shares no code paths with the
// library routines it checks.

#include <cstdint>
#include <vector>

#include "wreath/kernel/bitmatrix.hpp"
#include "wreath/kernel/poly.hpp"

namespace oracle {

/// Entry-by-entry triple loop product.
wreath::BitMatrix naive_product(const wreath::BitMatrix& a, const wreath::BitMatrix& b);
/// Rank by column-by-column elimination on a dense bool copy.
std::size_t column_rank(const wreath::BitMatrix& m);
/// p(m) by explicit powering.
wreath::BitMatrix evaluate_by_powers(const wreath::Poly& p, const wreath::BitMatrix& m);

/// dim Hom(m, n) from the full linear system A X = X B over all generator
/// pairs, one unknown per matrix entry. Meant for dim(m) * dim(n) <= 4096.
std::size_t naive_hom_dim(const std::vector<wreath::BitMatrix>& a, const std::vector<wreath::BitMatrix>& b);
/// Vectors fixed by every matrix, counted by brute force over all 2^dim
/// vectors (dim <= 20).
std::size_t brute_fixed_dim(const std::vector<wreath::BitMatrix>& mats);

}  // namespace oracle
