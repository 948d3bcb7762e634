#include "wreath/kernel/matpoly.hpp"

#include "wreath/kernel/echelon.hpp"

namespace wreath {

FieldPtr gf2() {
    static FieldPtr f = make_field(2, 1);
    return f;
}

namespace {

Poly bits_to_poly(const BitVec& b, std::size_t len) {
    std::vector<Elem> c(len, 0);
    for (std::size_t i = 0; i < len; ++i) c[i] = bits::get(b, i) ? 1 : 0;
    return Poly(gf2(), std::move(c));
}

// Extends `space` by the cyclic subspace of v modulo the current content of
// `space`, returning the monic relation polynomial p with p(m) v in the old space.
// When `space` is empty this is the local minimal polynomial.
Poly extend_cyclic(const BitMatrix& m, const BitVec& v, EchelonBasis& space) {
    const std::size_t n = m.rows();
    const std::size_t start = space.dim();
    const std::size_t pw = words_for(n + 2);
    std::vector<BitVec> polys;
    BitVec w = v;
    for (std::size_t j = 0;; ++j) {
        BitVec u = w;
        BitVec poly(pw, 0);
        bits::set(poly, j);
        for (std::size_t i = 0; i < space.dim(); ++i) {
            std::size_t p = space.pivot(i);
            if (!bits::get(u, p)) continue;
            bits::xor_into(u, space.row(i), p / kWordBits);
            if (i >= start) bits::xor_into(poly, polys[i - start]);
        }
        if (bits::is_zero(u)) return bits_to_poly(poly, j + 1);
        space.add_reduced(std::move(u));
        polys.push_back(std::move(poly));
        w = m.apply(w);
    }
}

Poly lcm(const Poly& a, const Poly& b) { return (a * b / gcd(a, b)).monic(); }

}  // namespace

Poly char_poly(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("char_poly: non-square matrix");
    const std::size_t n = m.rows();
    Poly result = Poly::constant(gf2(), 1);
    EchelonBasis space(n);
    for (std::size_t i = 0; i < n && !space.full(); ++i) {
        BitVec e(words_for(n), 0);
        bits::set(e, i);
        if (space.contains(e)) continue;
        result = result * extend_cyclic(m, e, space);
    }
    return result;
}

Poly local_min_poly(const BitMatrix& m, const BitVec& v) {
    EchelonBasis space(m.rows());
    return extend_cyclic(m, v, space);
}

Poly min_poly(const BitMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("min_poly: non-square matrix");
    const std::size_t n = m.rows();
    Poly result = Poly::constant(gf2(), 1);
    EchelonBasis covered(n);
    for (std::size_t i = 0; i < n && !covered.full(); ++i) {
        BitVec e(words_for(n), 0);
        bits::set(e, i);
        if (covered.contains(e)) continue;
        EchelonBasis local(n);
        Poly p = extend_cyclic(m, e, local);
        result = lcm(result, p);
        for (std::size_t r = 0; r < local.dim(); ++r) covered.add(local.row(r));
    }
    return result;
}

BitMatrix evaluate(const Poly& p, const BitMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("evaluate: non-square matrix");
    const std::size_t n = m.rows();
    BitMatrix r(n, n);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        r = mat_mul(r, m);
        if (p.coeff(i) & 1U)
            for (std::size_t k = 0; k < n; ++k) r.flip(k, k);
    }
    return r;
}

}  // namespace wreath
