#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Raised when operand shapes are incompatible.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A packed row vector over GF(2). Length is tracked by the owner.
using BitVec = std::vector<Word>;

namespace bits {
inline bool get(std::span<const Word> v, std::size_t i) { return (v[i / kWordBits] >> (i % kWordBits)) & 1U; }
inline void set(std::span<Word> v, std::size_t i) { v[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void flip(std::span<Word> v, std::size_t i) { v[i / kWordBits] ^= Word{1} << (i % kWordBits); }
inline void xor_into(std::span<Word> dst, std::span<const Word> src, std::size_t from_word = 0) {
    for (std::size_t w = from_word; w < dst.size(); ++w) dst[w] ^= src[w];
}
bool is_zero(std::span<const Word> v);
/// Index of the lowest set bit, or npos when v is zero.
std::size_t first_set(std::span<const Word> v, std::size_t from_word = 0);
std::size_t popcount(std::span<const Word> v);
bool dot(std::span<const Word> a, std::span<const Word> b);
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
}  // namespace bits

/// Dense GF(2) matrix, row-major, each row padded to whole words.
/// Padding bits beyond cols() are kept zero by every operation.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix random(std::size_t rows, std::size_t cols, std::mt19937_64& rng);
    static BitMatrix from_rows(std::size_t cols, const std::vector<BitVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    bool get(std::size_t r, std::size_t c) const { return (words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U; }
    void set(std::size_t r, std::size_t c, bool v = true);
    void flip(std::size_t r, std::size_t c) { words_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    std::span<Word> row(std::size_t r) { return {words_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {words_.data() + r * stride_, stride_}; }
    BitVec row_vec(std::size_t r) const { return BitVec(row(r).begin(), row(r).end()); }
    void set_row(std::size_t r, std::span<const Word> v);
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    const std::vector<Word>& words() const { return words_; }

    bool is_zero() const;
    bool is_identity() const;
    BitMatrix transpose() const;
    BitMatrix row_block(std::size_t first, std::size_t count) const;
    BitMatrix col_block(std::size_t first, std::size_t count) const;
    BitMatrix select_rows(const std::vector<std::size_t>& idx) const;
    void append_row(std::span<const Word> v);

    /// v * this, with v of length rows().
    BitVec apply(std::span<const Word> v) const;

    BitMatrix& operator+=(const BitMatrix& o);
    friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
    friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

    /// Row strings of hex digits; digit i holds columns 4i..4i+3, column 4i in the high bit.
    std::vector<std::string> to_hex() const;
    static BitMatrix from_hex(std::size_t rows, std::size_t cols, const std::vector<std::string>& hex);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> words_;
};

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);

/// Product over GF(2). Uses the method of four Russians once both sides are large.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
/// Plain row-combination product, always available for comparison.
BitMatrix mat_mul_naive(const BitMatrix& a, const BitMatrix& b);
BitMatrix mat_mul_m4rm(const BitMatrix& a, const BitMatrix& b);

BitMatrix mat_pow(const BitMatrix& a, std::uint64_t e);

struct RowReduction {
    std::size_t rank = 0;
    BitMatrix rref;
    BitMatrix transform;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination: transform * m == rref.
RowReduction row_reduce(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);
/// Basis of the left nullspace {v : v m = 0}.
BitMatrix nullspace(const BitMatrix& m);
/// Inverse of a square matrix; throws DimensionError when singular.
BitMatrix inverse(const BitMatrix& m);
bool is_invertible(const BitMatrix& m);

}  // namespace wreath
