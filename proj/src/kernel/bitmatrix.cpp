#include "wreath/kernel/bitmatrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace wreath {

namespace bits {
bool is_zero(std::span<const Word> v) {
    return std::all_of(v.begin(), v.end(), [](Word w) { return w == 0; });
}

std::size_t first_set(std::span<const Word> v, std::size_t from_word) {
    for (std::size_t w = from_word; w < v.size(); ++w)
        if (v[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(v[w]));
    return npos;
}

std::size_t popcount(std::span<const Word> v) {
    std::size_t c = 0;
    for (Word w : v) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool dot(std::span<const Word> a, std::span<const Word> b) {
    Word acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
    return std::popcount(acc) & 1;
}
}  // namespace bits

namespace {
Word tail_mask(std::size_t cols) {
    std::size_t r = cols % kWordBits;
    return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

std::string shape(const BitMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }
}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::random(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    if (m.stride_ == 0) return m;
    Word mask = tail_mask(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto row = m.row(r);
        for (auto& w : row) w = rng();
        row[m.stride_ - 1] &= mask;
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, const std::vector<BitVec>& rows) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
    Word bit = Word{1} << (c % kWordBits);
    Word& w = words_[r * stride_ + c / kWordBits];
    w = v ? (w | bit) : (w & ~bit);
}

void BitMatrix::set_row(std::size_t r, std::span<const Word> v) {
    if (v.size() != stride_) throw DimensionError("set_row: vector has " + std::to_string(v.size()) + " words, matrix " + shape(*this));
    std::copy(v.begin(), v.end(), words_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    Word* d = words_.data() + dst * stride_;
    const Word* s = words_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(words_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     words_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     words_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

bool BitMatrix::is_zero() const { return bits::is_zero(words_); }

bool BitMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        auto row = this->row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            Word expect = (r / kWordBits == w) ? (Word{1} << (r % kWordBits)) : 0;
            if (row[w] != expect) return false;
        }
    }
    return true;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto row = this->row(r);
        for (std::size_t w = 0; w < stride_; ++w) {
            Word x = row[w];
            while (x) {
                std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
                x &= x - 1;
                t.set(c, r);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw DimensionError("row_block out of range for " + shape(*this));
    BitMatrix m(count, cols_);
    std::copy(words_.begin() + static_cast<std::ptrdiff_t>(first * stride_),
              words_.begin() + static_cast<std::ptrdiff_t>((first + count) * stride_), m.words_.begin());
    return m;
}

BitMatrix BitMatrix::col_block(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw DimensionError("col_block out of range for " + shape(*this));
    BitMatrix m(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c)
            if (get(r, first + c)) m.set(r, c);
    return m;
}

BitMatrix BitMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    BitMatrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) m.set_row(i, row(idx[i]));
    return m;
}

void BitMatrix::append_row(std::span<const Word> v) {
    if (rows_ == 0 && stride_ == 0 && cols_ == 0) throw DimensionError("append_row on matrix without columns");
    if (v.size() != stride_) throw DimensionError("append_row: vector width does not match " + shape(*this));
    words_.insert(words_.end(), v.begin(), v.end());
    ++rows_;
}

BitVec BitMatrix::apply(std::span<const Word> v) const {
    BitVec out(stride_, 0);
    for (std::size_t w = 0; w < v.size(); ++w) {
        Word x = v[w];
        while (x) {
            std::size_t r = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
            x &= x - 1;
            if (r >= rows_) throw DimensionError("apply: vector longer than " + shape(*this));
            const Word* s = words_.data() + r * stride_;
            for (std::size_t k = 0; k < stride_; ++k) out[k] ^= s[k];
        }
    }
    return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("add: " + shape(*this) + " vs " + shape(o));
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) { return mat_mul(a, b); }

std::vector<std::string> BitMatrix::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::vector<std::string> out;
    out.reserve(rows_);
    std::size_t nd = (cols_ + 3) / 4;
    for (std::size_t r = 0; r < rows_; ++r) {
        std::string s(nd, '0');
        for (std::size_t d = 0; d < nd; ++d) {
            unsigned v = 0;
            for (std::size_t k = 0; k < 4; ++k) {
                std::size_t c = 4 * d + k;
                if (c < cols_ && get(r, c)) v |= 8U >> k;
            }
            s[d] = digits[v];
        }
        out.push_back(std::move(s));
    }
    return out;
}

BitMatrix BitMatrix::from_hex(std::size_t rows, std::size_t cols, const std::vector<std::string>& hex) {
    if (hex.size() != rows) throw DimensionError("from_hex: expected " + std::to_string(rows) + " rows");
    BitMatrix m(rows, cols);
    std::size_t nd = (cols + 3) / 4;
    for (std::size_t r = 0; r < rows; ++r) {
        if (hex[r].size() != nd) throw DimensionError("from_hex: row " + std::to_string(r) + " has wrong length");
        for (std::size_t d = 0; d < nd; ++d) {
            char ch = hex[r][d];
            unsigned v;
            if (ch >= '0' && ch <= '9') v = static_cast<unsigned>(ch - '0');
            else if (ch >= 'a' && ch <= 'f') v = static_cast<unsigned>(ch - 'a' + 10);
            else throw std::invalid_argument("from_hex: bad digit");
            for (std::size_t k = 0; k < 4; ++k) {
                std::size_t c = 4 * d + k;
                if (v & (8U >> k)) {
                    if (c >= cols) throw std::invalid_argument("from_hex: bit set beyond column count");
                    m.set(r, c);
                }
            }
        }
    }
    return m;
}

std::string BitMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '.');
        os << '\n';
    }
    return os.str();
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack: " + shape(a) + " vs " + shape(b));
    BitMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto dst = m.row(r);
        auto ra = a.row(r);
        std::copy(ra.begin(), ra.end(), dst.begin());
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (b.get(r, c)) m.set(r, a.cols() + c);
    }
    return m;
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack: " + shape(a) + " vs " + shape(b));
    BitMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) m.set_row(r, a.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r) m.set_row(a.rows() + r, b.row(r));
    return m;
}

BitMatrix mat_mul_naive(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: " + shape(a) + " times " + shape(b));
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto out = c.row(r);
        auto ar = a.row(r);
        for (std::size_t w = 0; w < ar.size(); ++w) {
            Word x = ar[w];
            while (x) {
                std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
                x &= x - 1;
                bits::xor_into(out, b.row(k));
            }
        }
    }
    return c;
}

BitMatrix mat_mul_m4rm(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: " + shape(a) + " times " + shape(b));
    constexpr std::size_t kChunk = 8;
    const std::size_t stride = b.stride();
    BitMatrix c(a.rows(), b.cols());
    std::vector<Word> table((std::size_t{1} << kChunk) * stride, 0);
    for (std::size_t k0 = 0; k0 < a.cols(); k0 += kChunk) {
        std::size_t width = std::min(kChunk, a.cols() - k0);
        std::size_t entries = std::size_t{1} << width;
        for (std::size_t i = 1; i < entries; ++i) {
            std::size_t low = static_cast<std::size_t>(std::countr_zero(i));
            Word* dst = table.data() + i * stride;
            const Word* prev = table.data() + (i & (i - 1)) * stride;
            auto src = b.row(k0 + low);
            for (std::size_t w = 0; w < stride; ++w) dst[w] = prev[w] ^ src[w];
        }
        std::size_t word = k0 / kWordBits;
        std::size_t shift = k0 % kWordBits;
        Word mask = (Word{1} << width) - 1;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            std::size_t idx = static_cast<std::size_t>((a.row(r)[word] >> shift) & mask);
            if (idx == 0) continue;
            const Word* src = table.data() + idx * stride;
            auto out = c.row(r);
            for (std::size_t w = 0; w < stride; ++w) out[w] ^= src[w];
        }
    }
    return c;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul: " + shape(a) + " times " + shape(b));
    if (a.rows() >= 64 && a.cols() >= 64) return mat_mul_m4rm(a, b);
    return mat_mul_naive(a, b);
}

BitMatrix mat_pow(const BitMatrix& a, std::uint64_t e) {
    if (a.rows() != a.cols()) throw DimensionError("mat_pow: non-square " + shape(a));
    BitMatrix result = BitMatrix::identity(a.rows());
    BitMatrix base = a;
    while (e) {
        if (e & 1U) result = mat_mul(result, base);
        e >>= 1;
        if (e) base = mat_mul(base, base);
    }
    return result;
}

RowReduction row_reduce(const BitMatrix& m) {
    RowReduction out;
    out.rref = m;
    out.transform = BitMatrix::identity(m.rows());
    BitMatrix& a = out.rref;
    BitMatrix& t = out.transform;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !a.get(p, c)) ++p;
        if (p == m.rows()) continue;
        a.swap_rows(p, r);
        t.swap_rows(p, r);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i != r && a.get(i, c)) {
                a.xor_row(i, r);
                t.xor_row(i, r);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && !a.get(p, c)) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        std::size_t from = c / kWordBits;
        auto pr = a.row(r);
        for (std::size_t i = r + 1; i < a.rows(); ++i)
            if (a.get(i, c)) bits::xor_into(a.row(i), pr, from);
        ++r;
    }
    return r;
}

BitMatrix nullspace(const BitMatrix& m) {
    RowReduction rr = row_reduce(m);
    return rr.transform.row_block(rr.rank, m.rows() - rr.rank);
}

BitMatrix inverse(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse: non-square " + shape(m));
    RowReduction rr = row_reduce(m);
    if (rr.rank != m.rows()) throw DimensionError("inverse: singular " + shape(m));
    return rr.transform;
}

bool is_invertible(const BitMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace wreath
