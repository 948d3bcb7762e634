#include "wreath/rep/hom.hpp"

#include <algorithm>
#include <bit>

#include "wreath/kernel/matpoly.hpp"

namespace wreath {

namespace {

BitVec flatten(const BitMatrix& x) {
    BitVec v(words_for(x.rows() * x.cols()), 0);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (x.get(i, j)) bits::set(v, i * x.cols() + j);
    return v;
}

BitMatrix unflatten(std::span<const Word> v, std::size_t rows, std::size_t cols) {
    BitMatrix x(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (bits::get(v, i * cols + j)) x.set(i, j);
    return x;
}

/// Unit vectors whose spins generate m, chosen greedily.
std::vector<BitVec> generating_seeds(const GModule& m) {
    std::vector<BitVec> seeds;
    EchelonBasis e(m.dim());
    for (std::size_t i = 0; i < m.dim() && !e.full(); ++i) {
        BitVec v(words_for(m.dim()), 0);
        bits::set(v, i);
        if (e.contains(v)) continue;
        seeds.push_back(v);
        std::size_t from = e.dim();
        e.add(v);
        for (std::size_t j = from; j < e.dim() && !e.full(); ++j)
            for (auto& a : m.action()) e.add(a.apply(e.row(j)));
    }
    return seeds;
}

BitMatrix combine(BitMatrix base, const BitVec& coeffs, const std::vector<BitMatrix>& l) {
    for (std::size_t k = 0; k < l.size(); ++k)
        if (k / kWordBits < coeffs.size() && bits::get(coeffs, k)) base += l[k];
    return base;
}

std::vector<BitMatrix> canonical_basis(const std::vector<BitMatrix>& maps, std::size_t rows, std::size_t cols) {
    if (maps.empty()) return {};
    std::vector<BitVec> flat;
    for (auto& x : maps) flat.push_back(flatten(x));
    RowReduction rr = row_reduce(BitMatrix::from_rows(rows * cols, flat));
    std::vector<BitMatrix> out;
    for (std::size_t r = 0; r < rr.rank; ++r) out.push_back(unflatten(rr.rref.row(r), rows, cols));
    return out;
}

}  // namespace

std::vector<BitMatrix> hom_space(const GModule& m, const GModule& n) {
    if (m.generator_count() != n.generator_count()) throw ModuleError("hom_space: different generator lists");
    const std::size_t dm = m.dim(), dn = n.dim();
    if (dm == 0 || dn == 0) return {};
    std::vector<BitVec> seeds = generating_seeds(m);
    const std::size_t u = seeds.size() * dn;

    // Spin m from the seeds; the image of every spun vector under an unknown
    // hom is y * L for the unknown seed images y in GF(2)^u.
    EchelonBasis eb(dm);
    EchelonBasis eq(u);
    std::vector<BitMatrix> l;
    BitVec c;
    auto constrain = [&](const BitMatrix& d) {
        BitMatrix dt = d.transpose();
        for (std::size_t r = 0; r < dt.rows() && !eq.full(); ++r) eq.add(dt.row_vec(r));
    };
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        BitVec v = seeds[i];
        if (!eb.reduce(v, c)) throw std::logic_error("hom_space: seed inside the span");
        BitMatrix sel(u, dn);
        for (std::size_t t = 0; t < dn; ++t) sel.set(i * dn + t, t);
        l.push_back(combine(std::move(sel), c, l));
        eb.add_reduced(std::move(v));
        for (std::size_t j = eb.dim() - 1; j < eb.dim(); ++j) {
            for (std::size_t s = 0; s < m.generator_count(); ++s) {
                BitVec w = m.gen(s).apply(eb.row(j));
                bool fresh = eb.reduce(w, c);
                BitMatrix d = combine(mat_mul(l[j], n.gen(s)), c, l);
                if (fresh) {
                    eb.add_reduced(std::move(w));
                    l.push_back(std::move(d));
                } else {
                    constrain(d);
                    if (eq.full()) return {};
                }
            }
        }
    }
    if (eb.dim() != dm) throw std::logic_error("hom_space: seeds do not generate the module");

    BitMatrix y = eq.dim() == 0 ? BitMatrix::identity(u) : nullspace(eq.matrix().transpose());
    if (y.rows() == 0) return {};
    BitMatrix t = inverse(eb.matrix());
    std::vector<BitMatrix> images;
    for (auto& lk : l) images.push_back(mat_mul(y, lk));
    std::vector<BitMatrix> maps;
    for (std::size_t sol = 0; sol < y.rows(); ++sol) {
        BitMatrix xs(dm, dn);
        for (std::size_t k = 0; k < dm; ++k) xs.set_row(k, images[k].row(sol));
        maps.push_back(mat_mul(t, xs));
    }
    return canonical_basis(maps, dm, dn);
}

EndRing end_ring(const GModule& m) {
    if (m.dim() > kEndRingDimLimit)
        throw ModuleError("end_ring: dimension " + std::to_string(m.dim()) + " exceeds " + std::to_string(kEndRingDimLimit));
    EndRing e;
    e.basis = hom_space(m, m);
    EchelonBasis span(m.dim() * m.dim());
    for (auto& b : e.basis) span.add(flatten(b));
    e.closed = true;
    for (auto& a : e.basis)
        for (auto& b : e.basis)
            if (!span.contains(flatten(mat_mul(a, b)))) e.closed = false;
    return e;
}

IsoResult module_iso(const GModule& m, const GModule& n, std::uint64_t seed, std::size_t budget) {
    IsoResult r;
    if (m.dim() != n.dim()) {
        r.status = IsoStatus::NotIsomorphic;
        return r;
    }
    if (m.dim() == 0) {
        r.status = IsoStatus::Isomorphic;
        r.map = BitMatrix(0, 0);
        return r;
    }
    auto h = hom_space(m, n);
    if (h.empty()) {
        r.status = IsoStatus::NotIsomorphic;
        return r;
    }
    auto found = [&](const BitMatrix& x) {
        if (!is_invertible(x)) return false;
        r.status = IsoStatus::Isomorphic;
        r.map = x;
        return true;
    };
    if (h.size() <= 16) {
        BitMatrix x(m.dim(), n.dim());
        for (std::uint32_t g = 1; g < (1U << h.size()); ++g) {
            // Gray code: flip one basis element per step
            x += h[static_cast<std::size_t>(std::countr_zero(g))];
            if (found(x)) return r;
        }
        r.status = IsoStatus::NotIsomorphic;
        return r;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < budget; ++k) {
        BitMatrix x(m.dim(), n.dim());
        for (auto& b : h)
            if (rng() & 1U) x += b;
        if (found(x)) return r;
    }
    return r;
}

bool isomorphic(const GModule& m, const GModule& n) {
    IsoResult r = module_iso(m, n);
    if (r.status == IsoStatus::Undecided) throw ModuleError("isomorphic: search budget exhausted");
    return r.status == IsoStatus::Isomorphic;
}

namespace {

struct Splitter {
    std::mt19937_64 rng;
    std::uint64_t seed;
    std::vector<Summand> out;

    bool try_split(const GModule& x, const BitMatrix& emb, const BitMatrix& theta) {
        auto fs = factor_poly(char_poly(theta));
        if (fs.size() < 2) return false;
        for (auto& f : fs) {
            Poly pw = Poly::constant(gf2(), 1);
            for (unsigned k = 0; k < f.multiplicity; ++k) pw = pw * f.factor;
            EchelonBasis sub = EchelonBasis::from_matrix(nullspace(evaluate(pw, theta)));
            split(submodule(x, sub), mat_mul(sub.matrix(), emb));
        }
        return true;
    }

    void split(const GModule& x, const BitMatrix& emb) {
        EndRing e = end_ring(x);
        const std::size_t d = e.dim();
        auto finish = [&](const char* cert) { out.push_back({x, emb, d, cert, seed}); };
        if (d == 1) return finish("exhaustive");
        for (int attempt = 0; attempt < 32; ++attempt) {
            BitMatrix th(x.dim(), x.dim());
            for (auto& b : e.basis)
                if (rng() & 1U) th += b;
            if (try_split(x, emb, th)) return;
        }
        if (d <= 16) {
            BitMatrix th(x.dim(), x.dim());
            for (std::uint32_t g = 1; g < (1U << d); ++g) {
                th += e.basis[static_cast<std::size_t>(std::countr_zero(g))];
                if (try_split(x, emb, th)) return;
            }
            return finish("exhaustive");
        }
        for (int attempt = 0; attempt < 96; ++attempt) {
            BitMatrix th(x.dim(), x.dim());
            for (auto& b : e.basis)
                if (rng() & 1U) th += b;
            if (try_split(x, emb, th)) return;
        }
        finish("probabilistic");
    }
};

}  // namespace

std::vector<Summand> decompose(const GModule& m, std::uint64_t seed) {
    Splitter sp{std::mt19937_64(seed), seed, {}};
    sp.split(m, BitMatrix::identity(m.dim()));
    std::stable_sort(sp.out.begin(), sp.out.end(),
                     [](const Summand& a, const Summand& b) { return a.module.dim() < b.module.dim(); });
    return sp.out;
}

Summand scott_summand(const GModule& perm) {
    if (!perm.has_perm_basis()) throw ModuleError("scott_summand: not a permutation module");
    GModule k = trivial_module(perm.group_ptr());
    std::vector<Summand> found;
    for (auto& s : decompose(perm)) {
        if (fixed_space(s.module).rows() == 0) continue;
        if (hom_space(s.module, k).empty()) continue;
        found.push_back(std::move(s));
    }
    if (found.size() != 1)
        throw ModuleError("scott_summand: " + std::to_string(found.size()) + " summands with trivial head and socle");
    return found.front();
}

}  // namespace wreath
