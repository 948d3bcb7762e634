#include "oracles.hpp"

namespace oracle {

using wreath::BitMatrix;

BitMatrix naive_product(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            bool s = false;
            for (std::size_t k = 0; k < a.cols(); ++k) s ^= a.get(i, k) && b.get(k, j);
            if (s) c.set(i, j);
        }
    return c;
}

std::size_t column_rank(const BitMatrix& m) {
    std::vector<std::vector<bool>> cols(m.cols(), std::vector<bool>(m.rows()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) cols[j][i] = m.get(i, j);
    std::size_t r = 0;
    std::vector<std::vector<bool>> basis;
    std::vector<std::size_t> lead;
    for (auto& c : cols) {
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (c[lead[b]])
                for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] != basis[b][i];
        std::size_t l = 0;
        while (l < c.size() && !c[l]) ++l;
        if (l == c.size()) continue;
        basis.push_back(c);
        lead.push_back(l);
        ++r;
    }
    return r;
}

BitMatrix evaluate_by_powers(const wreath::Poly& p, const BitMatrix& m) {
    BitMatrix acc(m.rows(), m.cols());
    BitMatrix power = BitMatrix::identity(m.rows());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeff(i)) acc += power;
        power = naive_product(power, m);
    }
    return acc;
}

}  // namespace oracle

namespace oracle {

std::size_t naive_hom_dim(const std::vector<wreath::BitMatrix>& a, const std::vector<wreath::BitMatrix>& b) {
    const std::size_t dm = a.at(0).rows(), dn = b.at(0).rows();
    const std::size_t unknowns = dm * dn;
    // equation (s, i, j): sum_k a[i][k] x[k][j] + sum_k x[i][k] b[k][j] = 0
    std::vector<std::vector<bool>> rows;
    for (std::size_t s = 0; s < a.size(); ++s)
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t j = 0; j < dn; ++j) {
                std::vector<bool> eq(unknowns, false);
                for (std::size_t k = 0; k < dm; ++k)
                    if (a[s].get(i, k)) eq[k * dn + j] = !eq[k * dn + j];
                for (std::size_t k = 0; k < dn; ++k)
                    if (b[s].get(k, j)) eq[i * dn + k] = !eq[i * dn + k];
                rows.push_back(std::move(eq));
            }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < unknowns && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t k = c; k < unknowns; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
        ++rank;
    }
    return unknowns - rank;
}

std::size_t brute_fixed_dim(const std::vector<wreath::BitMatrix>& mats) {
    const std::size_t d = mats.at(0).rows();
    std::size_t count = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
        bool fixed = true;
        for (auto& m : mats) {
            std::uint64_t img = 0;
            for (std::size_t i = 0; i < d; ++i)
                if ((v >> i) & 1U)
                    for (std::size_t j = 0; j < d; ++j)
                        if (m.get(i, j)) img ^= std::uint64_t{1} << j;
            if (img != v) {
                fixed = false;
                break;
            }
        }
        if (fixed) ++count;
    }
    std::size_t dim = 0;
    while ((std::size_t{1} << dim) < count) ++dim;
    return dim;
}

}  // namespace oracle
