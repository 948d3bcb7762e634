#pragma once

#include <optional>

#include "wreath/kernel/bitmatrix.hpp"

namespace wreath {

/// Growing subspace of GF(2)^n kept in semi-echelon form: every stored row
/// has a distinct pivot column and is zero in all earlier pivot columns
/// of rows added before it.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols = 0) : cols_(cols), stride_(words_for(cols)) {}
    static EchelonBasis from_matrix(const BitMatrix& m);

    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }
    std::size_t dim() const { return rows_.size(); }
    bool full() const { return rows_.size() == cols_; }

    const BitVec& row(std::size_t i) const { return rows_[i]; }
    std::size_t pivot(std::size_t i) const { return pivots_[i]; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduces v in place; returns true when a nonzero remainder is left.
    bool reduce(BitVec& v) const;
    /// Reduces v and records the coefficient of each stored row used.
    bool reduce(BitVec& v, BitVec& coeffs) const;
    bool contains(BitVec v) const { return !reduce(v); }

    /// Inserts v if it is independent; returns the new row index.
    std::optional<std::size_t> add(BitVec v);
    /// Inserts an already reduced vector with its precomputed pivot.
    std::size_t add_reduced(BitVec v);

    /// Coordinates of v with respect to the stored rows; v must lie in the span.
    BitVec coordinates(BitVec v) const;

    BitMatrix matrix() const;
    /// Fully reduced basis of the same space (canonical).
    BitMatrix canonical() const;
    /// Columns that are not pivots, in increasing order.
    std::vector<std::size_t> non_pivots() const;

private:
    std::size_t cols_;
    std::size_t stride_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

BitMatrix span_intersection(const BitMatrix& a, const BitMatrix& b);
bool same_span(const BitMatrix& a, const BitMatrix& b);

}  // namespace wreath
