#include "wreath/kernel/field_matrix.hpp"

#include "wreath/kernel/bitmatrix.hpp"

namespace wreath {

FieldMatrix FieldMatrix::identity(FieldPtr f, std::size_t n) {
    FieldMatrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("FieldMatrix product shape mismatch");
    FieldMatrix r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Elem a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) = f_->add(r.at(i, j), f_->mul(a, o.at(k, j)));
        }
    return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("FieldMatrix sum shape mismatch");
    FieldMatrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
    return r;
}

FieldMatrix FieldMatrix::scaled(Elem s) const {
    FieldMatrix r(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], s);
    return r;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<Elem> FieldMatrix::apply(const std::vector<Elem>& v) const {
    if (v.size() != rows_) throw DimensionError("FieldMatrix apply shape mismatch");
    std::vector<Elem> out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) out[j] = f_->add(out[j], f_->mul(v[i], at(i, j)));
    }
    return out;
}

std::vector<std::size_t> rref_in_place(FieldMatrix& m) {
    const FieldPtr& F = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Elem inv = F->inv(m.at(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = F->mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Elem t = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) = F->sub(m.at(i, j), F->mul(t, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const FieldMatrix& m) {
    FieldMatrix t = m;
    return rref_in_place(t).size();
}

FieldMatrix left_nullspace(const FieldMatrix& m) {
    // v m = 0  <=>  m^T v^T = 0; solve via rref of m^T.
    const FieldPtr& F = m.field();
    FieldMatrix t = m.transpose();
    auto pivots = rref_in_place(t);
    std::vector<bool> is_pivot(t.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t n = t.cols();
    FieldMatrix out(F, n - pivots.size(), n);
    std::size_t k = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        out.at(k, free) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out.at(k, pivots[i]) = F->neg(t.at(i, free));
        ++k;
    }
    return out;
}

Poly char_poly(const FieldMatrix& m0) {
    if (m0.rows() != m0.cols()) throw DimensionError("char_poly: non-square matrix");
    const FieldPtr& F = m0.field();
    const std::size_t n = m0.rows();
    FieldMatrix h = m0;
    for (std::size_t c = 1; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && h.at(piv, c - 1) == 0) ++piv;
        if (piv == n) continue;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(c, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, c));
        }
        Elem t = h.at(c, c - 1);
        for (std::size_t i = c + 1; i < n; ++i) {
            Elem u = F->div(h.at(i, c - 1), t);
            if (u == 0) continue;
            for (std::size_t j = 0; j < n; ++j) h.at(i, j) = F->sub(h.at(i, j), F->mul(u, h.at(c, j)));
            for (std::size_t r = 0; r < n; ++r) h.at(r, c) = F->add(h.at(r, c), F->mul(u, h.at(r, i)));
        }
    }
    // 1-indexed recurrence on the Hessenberg form.
    auto H = [&](std::size_t i, std::size_t j) { return h.at(i - 1, j - 1); };
    std::vector<Poly> p(n + 1, Poly(F));
    p[0] = Poly::constant(F, 1);
    Poly x = Poly::x(F);
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = (x - Poly::constant(F, H(k, k))) * p[k - 1];
        Elem t = 1;
        for (std::size_t i = 1; i < k; ++i) {
            t = F->mul(t, H(k - i + 1, k - i));
            Elem c = F->mul(H(k - i, k), t);
            if (c != 0) p[k] = p[k] - p[k - i - 1].scaled(c);
        }
    }
    return p[n];
}

}  // namespace wreath
