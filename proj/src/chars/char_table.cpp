#include "wreath/chars/char_table.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "wreath/kernel/field_matrix.hpp"
#include "wreath/kernel/matpoly.hpp"

namespace wreath {

namespace {

std::uint64_t multiplicative_order_of_2(std::uint64_t n) {
    if (n == 1) return 1;
    std::uint64_t x = 2 % n, k = 1;
    while (x != 1) {
        x = x * 2 % n;
        ++k;
    }
    return k;
}

std::uint64_t least_primitive_root(std::uint64_t p) {
    auto fs = prime_factors(p - 1);
    for (std::uint64_t g = 2;; ++g) {
        bool ok = true;
        for (auto f : fs)
            if (mod_pow(g, (p - 1) / f, p) == 1) ok = false;
        if (ok) return g;
    }
}

std::vector<Elem> to_mod_l(const std::vector<Cyclotomic>& v, const RootConvention& rc) {
    std::vector<Elem> out;
    out.reserve(v.size());
    for (auto& x : v) out.push_back(static_cast<Elem>(x.mod_prime(rc.dixon_prime, rc.dixon_root_of(x.conductor()))));
    return out;
}

BrauerCharacter restrict_to(const std::vector<Cyclotomic>& chi, const std::vector<std::size_t>& classes) {
    BrauerCharacter b;
    for (auto c : classes) b.push_back(chi[c]);
    return b;
}

}  // namespace

unsigned two_valuation(std::uint64_t x) { return x == 0 ? 0 : static_cast<unsigned>(std::countr_zero(x)); }

std::uint64_t RootConvention::dixon_root_of(std::uint64_t n) const {
    if (exponent % n) throw CharTableError("root convention: " + std::to_string(n) + " does not divide the exponent");
    return mod_pow(dixon_root, exponent / n, dixon_prime);
}

Elem RootConvention::gf2_root_of(std::uint64_t n) const {
    if (exponent % n) throw CharTableError("root convention: " + std::to_string(n) + " does not divide the exponent");
    return gf2_field()->pow(gf2_root, exponent / n);
}

RootConvention make_root_convention(std::uint64_t exponent, std::uint64_t group_order) {
    RootConvention rc;
    rc.exponent = exponent;
    std::uint64_t l = exponent + 1;
    while (l * l <= 4 * group_order || !is_prime(l)) l += exponent;
    if (l > kMaxFieldSize) throw CharTableError("make_root_convention: Dixon prime " + std::to_string(l) + " is too large");
    rc.dixon_prime = l;
    rc.dixon_root = mod_pow(least_primitive_root(l), (l - 1) / exponent, l);
    rc.odd_exponent = exponent >> two_valuation(exponent);
    rc.gf2_degree = static_cast<unsigned>(multiplicative_order_of_2(rc.odd_exponent));
    FieldPtr k = rc.gf2_field();
    rc.gf2_modulus = k->modulus();
    rc.gf2_root = k->exp(static_cast<std::int64_t>((k->size() - 1) / rc.odd_exponent));
    return rc;
}

Elem reduce_mod_2(const Cyclotomic& x, const RootConvention& rc) {
    FieldPtr k = rc.gf2_field();
    Elem w = rc.gf2_root_of(x.conductor());
    Elem s = 0, p = 1;
    for (auto c : x.coeffs()) {
        if (c & 1) s = k->add(s, p);
        p = k->mul(p, w);
    }
    return s;
}

ClassMatrices class_matrices(const ElementTable& t, const ClassData& cd) {
    const std::size_t r = cd.count();
    if (cd.element_to_class.size() != t.size()) throw CharTableError("class_matrices: class data does not match the table");
    ClassMatrices a(r, std::vector<std::vector<std::uint64_t>>(r, std::vector<std::uint64_t>(r, 0)));
    std::vector<std::size_t> inv(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) inv[x] = t.inverse(x);
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t z = cd.rep_index[k];
        for (std::size_t x = 0; x < t.size(); ++x) {
            std::size_t y = t.product(inv[x], z);
            ++a[cd.element_to_class[x]][cd.element_to_class[y]][k];
        }
    }
    return a;
}

std::vector<std::uint64_t> CharacterTable::degrees() const {
    std::vector<std::uint64_t> d;
    for (std::size_t i = 0; i < size(); ++i) d.push_back(degree(i));
    return d;
}

CharacterTable dixon_table(const ElementTable& t, const ClassData& cd, std::uint64_t seed) {
    const std::size_t r = cd.count();
    CharacterTable out;
    out.classes = cd;
    out.root = make_root_convention(cd.exponent, cd.group_order);
    const std::uint64_t l = out.root.dixon_prime;
    FieldPtr F = make_field(static_cast<unsigned>(l), 1);

    ClassMatrices a = class_matrices(t, cd);
    std::vector<FieldMatrix> n(r, FieldMatrix(F, r, r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) n[i].at(k, j) = static_cast<Elem>(a[i][j][k] % l);

    // split GF(l)^r into common eigenspaces of the class matrices
    std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ULL);
    std::vector<FieldMatrix> pending{FieldMatrix::identity(F, r)};
    std::vector<std::vector<Elem>> omegas;
    while (!pending.empty()) {
        FieldMatrix w = std::move(pending.back());
        pending.pop_back();
        if (w.rows() == 1) {
            omegas.push_back(w.row(0));
            continue;
        }
        std::vector<std::size_t> piv = rref_in_place(w);
        bool split = false;
        for (int attempt = 0; attempt < 64 && !split; ++attempt) {
            FieldMatrix comb(F, r, r);
            for (std::size_t i = 1; i < r; ++i) comb = comb + n[i].scaled(static_cast<Elem>(rng() % l));
            FieldMatrix img = w * comb;
            FieldMatrix res(F, w.rows(), w.rows());
            for (std::size_t i = 0; i < w.rows(); ++i)
                for (std::size_t j = 0; j < w.rows(); ++j) res.at(i, j) = img.at(i, piv[j]);
            auto factors = factor_poly(char_poly(res));
            for (auto& f : factors)
                if (f.factor.degree() != 1) throw CharTableError("dixon_table: eigenvalue outside GF(l)");
            if (factors.size() < 2) continue;
            split = true;
            for (auto& f : factors) {
                Elem lambda = F->neg(f.factor.coeff(0));
                FieldMatrix shifted = res + FieldMatrix::identity(F, w.rows()).scaled(F->neg(lambda));
                FieldMatrix x = left_nullspace(shifted);
                pending.push_back(x * w);
            }
        }
        if (!split) throw CharTableError("dixon_table: class matrices do not separate a space of dimension " + std::to_string(w.rows()));
    }
    if (omegas.size() != r) throw CharTableError("dixon_table: found " + std::to_string(omegas.size()) + " characters for " + std::to_string(r) + " classes");

    struct Raw {
        std::uint64_t degree;
        std::vector<Elem> chi;
        bool trivial;
    };
    std::vector<Raw> raw;
    for (auto& om : omegas) {
        if (om[0] == 0) throw CharTableError("dixon_table: eigenvector vanishes at the identity class");
        Elem s0 = F->inv(om[0]);
        for (auto& v : om) v = F->mul(v, s0);
        Elem s = 0;
        for (std::size_t c = 0; c < r; ++c)
            s = F->add(s, F->div(F->mul(om[c], om[cd.inverse_class[c]]), F->from_int(static_cast<std::int64_t>(cd.sizes[c] % l))));
        Elem d2 = F->div(F->from_int(static_cast<std::int64_t>(cd.group_order % l)), s);
        std::uint64_t d = 0;
        for (std::uint64_t c = 1; c * c <= cd.group_order; ++c)
            if (c * c % l == d2 && cd.group_order % c == 0) d = c;
        if (d == 0) throw CharTableError("dixon_table: no admissible degree");
        Raw rw{d, {}, true};
        for (std::size_t c = 0; c < r; ++c) {
            rw.chi.push_back(F->div(F->mul(F->from_int(static_cast<std::int64_t>(d)), om[c]),
                                    F->from_int(static_cast<std::int64_t>(cd.sizes[c] % l))));
            if (rw.chi[c] != 1) rw.trivial = false;
        }
        raw.push_back(std::move(rw));
    }
    std::sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
        if (x.trivial != y.trivial) return x.trivial;
        if (x.degree != y.degree) return x.degree < y.degree;
        return x.chi < y.chi;
    });

    // lift each value from its eigenvalue multiplicities
    for (auto& rw : raw) {
        std::vector<Cyclotomic> row;
        for (std::size_t c = 0; c < r; ++c) {
            std::uint64_t o = cd.element_orders[c];
            std::uint64_t zo = out.root.dixon_root_of(o);
            std::uint64_t zinv = mod_inverse(zo, l);
            std::uint64_t oinv = mod_inverse(o % l, l);
            std::vector<std::int64_t> mult(o, 0);
            std::uint64_t total = 0;
            for (std::uint64_t k = 0; k < o; ++k) {
                std::uint64_t s = 0;
                std::uint64_t step = mod_pow(zinv, k, l), w = 1;
                for (std::uint64_t j = 0; j < o; ++j) {
                    s = (s + std::uint64_t{rw.chi[cd.power_table[c][j]]} * w) % l;
                    w = w * step % l;
                }
                s = s * oinv % l;
                if (s > rw.degree) throw CharTableError("dixon_table: eigenvalue multiplicity out of range");
                mult[k] = static_cast<std::int64_t>(s);
                total += s;
            }
            if (total != rw.degree) throw CharTableError("dixon_table: eigenvalue multiplicities do not sum to the degree");
            Cyclotomic v = Cyclotomic::from_powers(o, mult);
            if (v.mod_prime(l, zo) != rw.chi[c]) throw CharTableError("dixon_table: lifted value does not reduce correctly");
            row.push_back(std::move(v));
        }
        out.values.push_back(std::move(row));
    }

    Orthogonality orth = check_orthogonality(out);
    if (!orth.rows || !orth.columns) throw CharTableError("dixon_table: " + orth.detail);
    return out;
}

Orthogonality check_orthogonality(const CharacterTable& t) {
    Orthogonality o{true, true, ""};
    const auto& cd = t.classes;
    const std::size_t r = cd.count();
    const std::uint64_t e = cd.exponent;
    for (std::size_t a = 0; a < t.size() && o.rows; ++a)
        for (std::size_t b = a; b < t.size() && o.rows; ++b) {
            std::vector<std::int64_t> acc(e, 0);
            for (std::size_t c = 0; c < r; ++c) {
                Cyclotomic term = t.values[a][c] * t.values[b][c].conj() * static_cast<std::int64_t>(cd.sizes[c]);
                std::uint64_t s = e / term.conductor();
                for (std::size_t k = 0; k < term.coeffs().size(); ++k) acc[k * s] += term.coeffs()[k];
            }
            Cyclotomic sum = Cyclotomic::from_powers(e, acc);
            if (sum != Cyclotomic::integer(a == b ? static_cast<std::int64_t>(cd.group_order) : 0)) {
                o.rows = false;
                o.detail = "row orthogonality fails for characters " + std::to_string(a) + ", " + std::to_string(b);
            }
        }
    for (std::size_t c = 0; c < r && o.columns; ++c)
        for (std::size_t d = c; d < r && o.columns; ++d) {
            std::uint64_t n = std::lcm(cd.element_orders[c], cd.element_orders[d]);
            Cyclotomic sum(n);
            for (std::size_t x = 0; x < t.size(); ++x) sum += t.values[x][c] * t.values[x][d].conj();
            std::int64_t want = c == d ? static_cast<std::int64_t>(cd.group_order / cd.sizes[c]) : 0;
            if (sum != Cyclotomic::integer(want)) {
                o.columns = false;
                o.detail = "column orthogonality fails for classes " + std::to_string(c) + ", " + std::to_string(d);
            }
        }
    return o;
}

std::vector<std::size_t> principal_block_2(const CharacterTable& t) {
    const auto& cd = t.classes;
    std::vector<std::size_t> block;
    for (std::size_t x = 0; x < t.size(); ++x) {
        bool in = true;
        const std::int64_t deg = static_cast<std::int64_t>(t.degree(x));
        for (std::size_t c = 0; c < cd.count() && in; ++c) {
            Cyclotomic omega;
            try {
                omega = (t.values[x][c] * static_cast<std::int64_t>(cd.sizes[c])).divided_by(deg);
            } catch (const std::domain_error&) {
                throw CharTableError("principal_block_2: central character of character " + std::to_string(x) +
                                     " is not integral at class " + std::to_string(c));
            }
            if (reduce_mod_2(omega, t.root) != (cd.sizes[c] & 1U)) in = false;
        }
        if (in) block.push_back(x);
    }
    return block;
}

std::vector<std::size_t> two_regular_classes(const ClassData& cd) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cd.count(); ++c)
        if (cd.element_orders[c] & 1U) out.push_back(c);
    return out;
}

std::vector<std::size_t> two_element_classes(const ClassData& cd) {
    std::vector<std::size_t> out;
    for (std::size_t c = 1; c < cd.count(); ++c)
        if (std::has_single_bit(cd.element_orders[c])) out.push_back(c);
    return out;
}

BrauerCharacter brauer_character(const GModule& m, const ElementTable& t, const WordMap& words,
                                 const CharacterTable& ct) {
    if (m.group().generators() != t.group().generators())
        throw CharTableError("brauer_character: module and table use different generators");
    FieldPtr k = ct.root.gf2_field();
    BrauerCharacter out;
    for (auto c : two_regular_classes(ct.classes)) {
        std::uint64_t o = ct.classes.element_orders[c];
        BitMatrix a = m.act_word(words.word(ct.classes.rep_index[c]));
        std::vector<std::int64_t> mult(o, 0);
        std::size_t total = 0;
        if (o == 1) {
            mult[0] = static_cast<std::int64_t>(m.dim());
            total = m.dim();
        } else {
            Elem w = ct.root.gf2_root_of(o);
            auto factors = factor_poly(char_poly(a));
            Elem lambda = 1;
            for (std::uint64_t j = 0; j < o; ++j, lambda = k->mul(lambda, w))
                for (auto& f : factors) {
                    Elem acc = 0;
                    for (std::size_t i = f.factor.coeffs().size(); i-- > 0;) acc = k->add(k->mul(acc, lambda), f.factor.coeffs()[i]);
                    if (acc == 0) {
                        mult[j] += f.multiplicity;
                        total += f.multiplicity;
                    }
                }
        }
        if (total != m.dim())
            throw CharTableError("brauer_character: eigenvalues at class " + std::to_string(c) + " are not roots of unity of the class order");
        out.push_back(Cyclotomic::from_powers(o, mult));
    }
    return out;
}

std::size_t rank_mod_l(const CharacterTable& t, const std::vector<BrauerCharacter>& chars) {
    if (chars.empty()) return 0;
    FieldPtr F = make_field(static_cast<unsigned>(t.root.dixon_prime), 1);
    FieldMatrix m(F, chars.size(), chars[0].size());
    for (std::size_t i = 0; i < chars.size(); ++i) {
        auto v = to_mod_l(chars[i], t.root);
        for (std::size_t j = 0; j < v.size(); ++j) m.at(i, j) = v[j];
    }
    return rank(m);
}

DecompositionMatrix decomposition_matrix(const CharacterTable& t, const std::vector<std::size_t>& rows,
                                         const std::vector<BrauerCharacter>& ibr,
                                         const std::vector<std::string>& labels) {
    const std::uint64_t l = t.root.dixon_prime;
    FieldPtr F = make_field(static_cast<unsigned>(l), 1);
    const auto reg = two_regular_classes(t.classes);
    const std::size_t c = ibr.size();
    if (labels.size() != c) throw CharTableError("decomposition_matrix: one label per Brauer character expected");
    if (rank_mod_l(t, ibr) != c) throw CharTableError("decomposition_matrix: Brauer characters are dependent mod l");
    DecompositionMatrix out;
    out.rows = rows;
    out.column_labels = labels;
    for (auto x : rows) {
        BrauerCharacter chi = restrict_to(t.values[x], reg);
        FieldMatrix m(F, c + 1, reg.size());
        for (std::size_t i = 0; i <= c; ++i) {
            auto v = to_mod_l(i < c ? ibr[i] : chi, t.root);
            for (std::size_t j = 0; j < v.size(); ++j) m.at(i, j) = v[j];
        }
        FieldMatrix ns = left_nullspace(m);
        if (ns.rows() != 1 || ns.at(0, c) == 0)
            throw CharTableError("decomposition_matrix: character " + std::to_string(x) + " is not in the span of the Brauer characters");
        Elem scale = F->neg(F->inv(ns.at(0, c)));
        std::vector<std::int64_t> d;
        for (std::size_t i = 0; i < c; ++i) {
            std::uint64_t v = F->mul(ns.at(0, i), scale);
            if (v > l / 2) throw CharTableError("decomposition_matrix: negative entry for character " + std::to_string(x));
            d.push_back(static_cast<std::int64_t>(v));
        }
        for (std::size_t j = 0; j < reg.size(); ++j) {
            Cyclotomic s(t.values[x][reg[j]].conductor());
            for (std::size_t i = 0; i < c; ++i) s += ibr[i][j] * d[i];
            if (s != chi[j]) throw CharTableError("decomposition_matrix: exact check fails for character " + std::to_string(x));
        }
        out.entries.push_back(std::move(d));
    }
    return out;
}

BlockInvariants block_invariants(const CharacterTable& t, const std::vector<std::size_t>& block) {
    BlockInvariants b;
    b.k = block.size();
    b.defect = two_valuation(t.classes.group_order);
    const auto reg = two_regular_classes(t.classes);
    std::vector<BrauerCharacter> rows;
    for (auto x : block) {
        ++b.heights[two_valuation(t.degree(x))];
        rows.push_back(restrict_to(t.values[x], reg));
    }
    b.l = rank_mod_l(t, rows);
    return b;
}

}  // namespace wreath
