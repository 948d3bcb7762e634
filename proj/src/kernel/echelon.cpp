#include "wreath/kernel/echelon.hpp"

#include <algorithm>

namespace wreath {

EchelonBasis EchelonBasis::from_matrix(const BitMatrix& m) {
    EchelonBasis e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row_vec(r));
    return e;
}

bool EchelonBasis::reduce(BitVec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t p = pivots_[i];
        if (bits::get(v, p)) bits::xor_into(v, rows_[i], p / kWordBits);
    }
    return !bits::is_zero(v);
}

bool EchelonBasis::reduce(BitVec& v, BitVec& coeffs) const {
    coeffs.assign(words_for(rows_.size()), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t p = pivots_[i];
        if (bits::get(v, p)) {
            bits::xor_into(v, rows_[i], p / kWordBits);
            bits::set(coeffs, i);
        }
    }
    return !bits::is_zero(v);
}

std::optional<std::size_t> EchelonBasis::add(BitVec v) {
    if (v.size() != stride_) throw DimensionError("EchelonBasis::add: width mismatch");
    if (!reduce(v)) return std::nullopt;
    return add_reduced(std::move(v));
}

std::size_t EchelonBasis::add_reduced(BitVec v) {
    std::size_t p = bits::first_set(v);
    if (p == bits::npos) throw DimensionError("EchelonBasis::add_reduced: zero vector");
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return rows_.size() - 1;
}

BitVec EchelonBasis::coordinates(BitVec v) const {
    BitVec c;
    if (reduce(v, c)) throw DimensionError("EchelonBasis::coordinates: vector outside span");
    return c;
}

BitMatrix EchelonBasis::matrix() const { return BitMatrix::from_rows(cols_, rows_); }

BitMatrix EchelonBasis::canonical() const {
    BitMatrix m = matrix();
    RowReduction rr = row_reduce(m);
    return rr.rref.row_block(0, rr.rank);
}

std::vector<std::size_t> EchelonBasis::non_pivots() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

BitMatrix span_intersection(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("span_intersection: column mismatch");
    // x a = y b  <=>  (x|y) [a; b] = 0
    BitMatrix stacked = vstack(a, b);
    BitMatrix ns = nullspace(stacked);
    EchelonBasis out(a.cols());
    for (std::size_t r = 0; r < ns.rows(); ++r) {
        BitVec x(words_for(a.rows()), 0);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (ns.get(r, i)) bits::set(x, i);
        out.add(a.apply(x));
    }
    return out.matrix();
}

bool same_span(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return EchelonBasis::from_matrix(a).canonical() == EchelonBasis::from_matrix(b).canonical();
}

}  // namespace wreath
