#include "wreath/families/fq_matrix.hpp"

#include <stdexcept>

namespace wreath {

FqMatrix::FqMatrix(FieldPtr f, unsigned n) : f_(std::move(f)), n_(n), a_(std::size_t{n} * n, 0) {}

FqMatrix::FqMatrix(FieldPtr f, unsigned n, std::vector<Elem> entries) : f_(std::move(f)), n_(n), a_(std::move(entries)) {
    if (a_.size() != std::size_t{n} * n) throw std::invalid_argument("FqMatrix: wrong number of entries");
    for (auto x : a_)
        if (x >= f_->size()) throw std::invalid_argument("FqMatrix: entry outside the field");
}

FqMatrix FqMatrix::identity(FieldPtr f, unsigned n) {
    FqMatrix m(std::move(f), n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqMatrix FqMatrix::diagonal(FieldPtr f, const std::vector<Elem>& d) {
    FqMatrix m(std::move(f), static_cast<unsigned>(d.size()));
    for (unsigned i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

FqMatrix FqMatrix::elementary(FieldPtr f, unsigned n, unsigned i, unsigned j, Elem c) {
    if (i == j) throw std::invalid_argument("FqMatrix::elementary: i == j");
    FqMatrix m = identity(std::move(f), n);
    m.at(i, j) = c;
    return m;
}

FqMatrix FqMatrix::antidiagonal(FieldPtr f, unsigned n) {
    FqMatrix m(std::move(f), n);
    for (unsigned i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
    return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("FqMatrix: size mismatch");
    FqMatrix r(f_, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned k = 0; k < n_; ++k) {
            Elem x = at(i, k);
            if (x == 0) continue;
            for (unsigned j = 0; j < n_; ++j) r.at(i, j) = f_->add(r.at(i, j), f_->mul(x, o.at(k, j)));
        }
    return r;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix r(f_, n_);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FqMatrix FqMatrix::entry_power(std::uint64_t e) const {
    FqMatrix r(f_, n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->pow(a_[i], e);
    return r;
}

Elem FqMatrix::det() const {
    std::vector<Elem> m = a_;
    Elem d = 1;
    for (unsigned c = 0; c < n_; ++c) {
        unsigned p = c;
        while (p < n_ && m[p * n_ + c] == 0) ++p;
        if (p == n_) return 0;
        if (p != c) {
            for (unsigned j = 0; j < n_; ++j) std::swap(m[p * n_ + j], m[c * n_ + j]);
            d = f_->neg(d);
        }
        Elem piv = m[c * n_ + c];
        d = f_->mul(d, piv);
        Elem pinv = f_->inv(piv);
        for (unsigned r = c + 1; r < n_; ++r) {
            Elem factor = f_->mul(m[r * n_ + c], pinv);
            if (factor == 0) continue;
            for (unsigned j = c; j < n_; ++j) m[r * n_ + j] = f_->sub(m[r * n_ + j], f_->mul(factor, m[c * n_ + j]));
        }
    }
    return d;
}

bool FqMatrix::is_identity() const { return *this == identity(f_, n_); }

bool FqMatrix::is_scalar() const {
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j)
            if (i != j ? at(i, j) != 0 : at(i, i) != at(0, 0)) return false;
    return true;
}

std::vector<Elem> FqMatrix::apply(const std::vector<Elem>& v) const {
    std::vector<Elem> r(n_, 0);
    for (unsigned k = 0; k < n_; ++k) {
        if (v[k] == 0) continue;
        for (unsigned j = 0; j < n_; ++j) r[j] = f_->add(r[j], f_->mul(v[k], at(k, j)));
    }
    return r;
}

bool preserves_hermitian_form(const FqMatrix& a, const FqMatrix& w, std::uint64_t q) {
    return a * w * a.entry_power(q).transpose() == w;
}

VectorDomain::VectorDomain(FieldPtr f, unsigned dim, bool projective,
                           const std::function<bool(const std::vector<Elem>&)>& keep)
    : f_(std::move(f)), dim_(dim), projective_(projective) {
    std::uint64_t total = ipow(f_->size(), dim_);
    if (total > (std::uint64_t{1} << 26)) throw std::invalid_argument("VectorDomain: space too large");
    lookup_.assign(static_cast<std::size_t>(total), static_cast<std::uint32_t>(-1));
    std::vector<Elem> v(dim_, 0);
    for (std::uint64_t c = 1; c < total; ++c) {
        std::uint64_t x = c;
        for (unsigned i = 0; i < dim_; ++i) {
            v[i] = static_cast<Elem>(x % f_->size());
            x /= f_->size();
        }
        if (projective_) {
            std::vector<Elem> n = v;
            normalize(n);
            if (n != v) continue;
        }
        if (keep && !keep(v)) continue;
        lookup_[c] = static_cast<std::uint32_t>(points_.size());
        points_.push_back(v);
    }
    if (points_.size() > kMaxDegree) throw std::invalid_argument("VectorDomain: too many points for a permutation");
}

std::uint64_t VectorDomain::code(const std::vector<Elem>& v) const {
    std::uint64_t c = 0;
    for (unsigned i = dim_; i-- > 0;) c = c * f_->size() + v[i];
    return c;
}

void VectorDomain::normalize(std::vector<Elem>& v) const {
    for (auto x : v) {
        if (x == 0) continue;
        Elem s = f_->inv(x);
        for (auto& y : v) y = f_->mul(y, s);
        return;
    }
}

std::size_t VectorDomain::index_of(std::vector<Elem> v) const {
    if (projective_) normalize(v);
    auto i = lookup_[code(v)];
    return i == static_cast<std::uint32_t>(-1) ? size() : i;
}

Permutation VectorDomain::permutation_of(const FqMatrix& a) const {
    std::vector<Point> img(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        std::size_t j = index_of(a.apply(points_[i]));
        if (j == size()) throw std::invalid_argument("VectorDomain: matrix does not preserve the domain");
        img[i] = static_cast<Point>(j);
    }
    return Permutation(std::move(img));
}

FqMatrix VectorDomain::matrix_of(const Permutation& g) const {
    if (projective_) throw std::logic_error("VectorDomain::matrix_of: projective domain");
    FqMatrix m(f_, dim_);
    for (unsigned i = 0; i < dim_; ++i) {
        std::vector<Elem> e(dim_, 0);
        e[i] = 1;
        const auto& row = points_[g[index_of(e)]];
        for (unsigned j = 0; j < dim_; ++j) m.at(i, j) = row[j];
    }
    return m;
}

}  // namespace wreath
