#pragma once

#include <functional>
#include <vector>

#include "wreath/groups/permutation.hpp"
#include "wreath/kernel/field.hpp"

namespace wreath {

/// Small square matrix over a table field, stored row-major.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(FieldPtr f, unsigned n);
    FqMatrix(FieldPtr f, unsigned n, std::vector<Elem> entries);
    static FqMatrix identity(FieldPtr f, unsigned n);
    static FqMatrix diagonal(FieldPtr f, const std::vector<Elem>& d);
    /// Identity plus c in position (i, j), i != j.
    static FqMatrix elementary(FieldPtr f, unsigned n, unsigned i, unsigned j, Elem c);
    /// Antidiagonal matrix with ones.
    static FqMatrix antidiagonal(FieldPtr f, unsigned n);

    const FieldPtr& field() const { return f_; }
    unsigned size() const { return n_; }
    Elem at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }
    Elem& at(unsigned i, unsigned j) { return a_[i * n_ + j]; }
    const std::vector<Elem>& entries() const { return a_; }

    FqMatrix operator*(const FqMatrix& o) const;
    bool operator==(const FqMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
    FqMatrix transpose() const;
    /// Entrywise x -> x^e, e.g. the field automorphism x -> x^q.
    FqMatrix entry_power(std::uint64_t e) const;
    Elem det() const;
    bool is_identity() const;
    bool is_scalar() const;
    /// Row vector times matrix.
    std::vector<Elem> apply(const std::vector<Elem>& v) const;

private:
    FieldPtr f_;
    unsigned n_ = 0;
    std::vector<Elem> a_;
};

/// Elements fixing the hermitian form w, in the sense a w conj(a)^T = w with
/// conj(x) = x^q over GF(q^2).
bool preserves_hermitian_form(const FqMatrix& a, const FqMatrix& w, std::uint64_t q);

/// Nonzero row vectors or projective points of F^dim, optionally restricted
/// by a predicate, with matrices acting on the right.
class VectorDomain {
public:
    VectorDomain(FieldPtr f, unsigned dim, bool projective, const std::function<bool(const std::vector<Elem>&)>& keep = {});

    std::size_t size() const { return points_.size(); }
    unsigned dim() const { return dim_; }
    bool projective() const { return projective_; }
    const std::vector<Elem>& point(std::size_t i) const { return points_[i]; }
    /// Index of v (normalized first when projective), or size() if absent.
    std::size_t index_of(std::vector<Elem> v) const;
    Permutation permutation_of(const FqMatrix& a) const;
    /// Recover a matrix from its permutation, up to scalars when projective.
    /// Only meaningful for linear (non-projective) domains.
    FqMatrix matrix_of(const Permutation& g) const;

private:
    std::uint64_t code(const std::vector<Elem>& v) const;
    void normalize(std::vector<Elem>& v) const;

    FieldPtr f_;
    unsigned dim_;
    bool projective_;
    std::vector<std::vector<Elem>> points_;
    std::vector<std::uint32_t> lookup_;
};

}  // namespace wreath
