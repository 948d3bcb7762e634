#pragma once

#include <vector>

#include "wreath/kernel/poly.hpp"

namespace wreath {

/// Dense matrix over an arbitrary table field. Used for the small
/// eigenvector problems of character-table construction.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    static FieldMatrix identity(FieldPtr f, std::size_t n);

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::vector<Elem> row(std::size_t r) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_), a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }
    bool operator==(const FieldMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix scaled(Elem s) const;
    FieldMatrix transpose() const;
    std::vector<Elem> apply(const std::vector<Elem>& v) const;

private:
    FieldPtr f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref_in_place(FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);
/// Basis of {v : v m = 0} as rows.
FieldMatrix left_nullspace(const FieldMatrix& m);
Poly char_poly(const FieldMatrix& m);

}  // namespace wreath
