#include "wreath/families/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wreath/groups/classes.hpp"
#include "wreath/groups/small_group.hpp"

namespace wreath {

namespace {

bool is_odd_prime_power(std::uint64_t q) {
    if (q < 3 || q % 2 == 0) return false;
    return prime_factors(q).size() == 1;
}

void require_q(unsigned q) {
    if (!is_odd_prime_power(q)) throw FamilyError("q = " + std::to_string(q) + " is not an odd prime power");
}

std::string fmt(const char* base, unsigned q) { return std::string(base) + "(" + std::to_string(q) + ")"; }

/// f elements of F spanning the subfield GF(q) over the prime field, where F
/// is GF(q) or GF(q^2).
std::vector<Elem> subfield_basis(const ExtField& f, unsigned q) {
    std::uint64_t k = (f.size() - 1) / (q - 1);
    Elem g = f.exp(static_cast<std::int64_t>(k));
    unsigned deg = 0;
    for (unsigned x = q; x > 1; x /= f.characteristic()) ++deg;
    std::vector<Elem> out;
    Elem cur = 1;
    for (unsigned i = 0; i < deg; ++i) {
        out.push_back(cur);
        cur = f.mul(cur, g);
    }
    return out;
}

/// A basis of GF(q^2) over the prime field.
std::vector<Elem> full_basis(const ExtField& f) {
    std::vector<Elem> out;
    Elem cur = 1;
    for (unsigned i = 0; i < f.degree(); ++i) {
        out.push_back(cur);
        cur = f.mul(cur, f.primitive());
    }
    return out;
}

/// Trace-zero element c of GF(q^2), c^q = -c, generating the kernel of the
/// trace together with GF(q) scalars.
Elem trace_zero_unit(const ExtField& f, unsigned q) { return f.exp((q + 1) / 2); }

FqMatrix unitary_unipotent(const FieldPtr& f, unsigned q, Elem alpha, Elem beta) {
    FqMatrix m = FqMatrix::identity(f, 3);
    m.at(1, 0) = alpha;
    m.at(2, 0) = beta;
    m.at(2, 1) = f->neg(f->pow(alpha, q));
    return m;
}

/// Generators of U(q): lifts of a basis of the alpha-coordinate plus the
/// centre {alpha = 0}.
std::vector<FqMatrix> unipotent_generators(const FieldPtr& f, unsigned q) {
    std::vector<FqMatrix> gens;
    for (Elem alpha : full_basis(*f)) {
        Elem target = f->neg(f->pow(alpha, q + 1));
        for (Elem beta = 0; beta < f->size(); ++beta)
            if (f->add(beta, f->pow(beta, q)) == target) {
                gens.push_back(unitary_unipotent(f, q, alpha, beta));
                break;
            }
    }
    Elem c = trace_zero_unit(*f, q);
    for (Elem b : subfield_basis(*f, q)) gens.push_back(unitary_unipotent(f, q, 0, f->mul(c, b)));
    return gens;
}

std::vector<FqMatrix> transposed_by_w0(const std::vector<FqMatrix>& gens) {
    std::vector<FqMatrix> out;
    for (auto& g : gens) {
        FqMatrix w = FqMatrix::antidiagonal(g.field(), g.size());
        out.push_back(w * g * w);
    }
    return out;
}

struct Generated {
    FieldPtr field;
    unsigned dim;
    bool unitary;
    std::vector<FqMatrix> gens;
};

Generated matrix_generators(Classical kind, unsigned q, unsigned t) {
    require_q(q);
    bool unitary = kind == Classical::GU2 || kind == Classical::SU2t || kind == Classical::GU3 || kind == Classical::SU3;
    unsigned dim = (kind == Classical::GL2 || kind == Classical::GU2 || kind == Classical::SL2t || kind == Classical::SU2t) ? 2 : 3;
    FieldPtr f = make_field_of_size(unitary ? std::uint64_t{q} * q : q);
    Generated out{f, dim, unitary, {}};
    auto& g = out.gens;
    if (!unitary) {
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned j = 0; j < dim; ++j)
                if (i != j)
                    for (Elem b : subfield_basis(*f, q)) g.push_back(FqMatrix::elementary(f, dim, i, j, b));
        std::vector<Elem> d(dim, 1);
        if (kind == Classical::GL2 || kind == Classical::GL3) {
            d[0] = f->primitive();
            g.push_back(FqMatrix::diagonal(f, d));
        } else if (kind == Classical::SL2t) {
            std::uint64_t gq = std::gcd(std::uint64_t{1} << t, std::uint64_t{q - 1});
            d[0] = f->exp(static_cast<std::int64_t>((q - 1) / gq));
            if (gq > 1) g.push_back(FqMatrix::diagonal(f, d));
        }
        return out;
    }
    Elem a = f->primitive();
    if (dim == 2) {
        Elem c = trace_zero_unit(*f, q);
        for (Elem b : subfield_basis(*f, q)) {
            FqMatrix lo = FqMatrix::elementary(f, 2, 1, 0, f->mul(c, b));
            g.push_back(lo);
            if (kind == Classical::SU2t) g.push_back(lo.transpose());
        }
        if (kind == Classical::GU2) {
            g.push_back(FqMatrix::diagonal(f, {a, f->inv(f->pow(a, q))}));
            g.push_back(FqMatrix::antidiagonal(f, 2));
            g.push_back(FqMatrix::diagonal(f, {f->pow(a, q - 1), f->pow(a, q - 1)}));
        } else {
            std::uint64_t gq = std::gcd(std::uint64_t{1} << t, std::uint64_t{q + 1});
            Elem s = f->pow(a, (q + 1) / gq);
            if (gq > 1) g.push_back(FqMatrix::diagonal(f, {s, f->inv(f->pow(s, q))}));
        }
        return out;
    }
    auto u = unipotent_generators(f, q);
    g.insert(g.end(), u.begin(), u.end());
    if (kind == Classical::GU3) {
        g.push_back(FqMatrix::diagonal(f, {f->inv(a), 1, f->pow(a, q)}));
        g.push_back(FqMatrix::antidiagonal(f, 3));
        g.push_back(FqMatrix::diagonal(f, {1, f->pow(a, q - 1), 1}));
    } else {
        auto up = transposed_by_w0(u);
        g.insert(g.end(), up.begin(), up.end());
        g.push_back(FqMatrix::diagonal(f, {a, f->pow(a, q - 1), f->inv(f->pow(a, q))}));
    }
    return out;
}

PermGroup act(const VectorDomain& dom, const std::vector<FqMatrix>& mats) {
    std::vector<Permutation> perms;
    for (auto& m : mats) perms.push_back(dom.permutation_of(m));
    return PermGroup(dom.size(), perms);
}

bool unitary_isotropic(const ExtField& f, unsigned q, const std::vector<Elem>& v) {
    // v w0 conj(v)^T for w0 antidiagonal
    Elem s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s = f.add(s, f.mul(v[i], f.pow(v[v.size() - 1 - i], q)));
    return s == 0;
}

}  // namespace

std::uint64_t two_part(std::uint64_t x) { return x == 0 ? 0 : (x & (~x + 1)); }

void FamilySpec::validate() const {
    if (n < 2) throw FamilyError("n must be at least 2, got " + std::to_string(n));
    if (n > 12) throw FamilyError("n = " + std::to_string(n) + " is out of range");
    if (family == Family::W1 || family == Family::W2) return;
    require_q(q);
    bool minus = family == Family::W3 || family == Family::W5;
    std::uint64_t part = two_part(minus ? q - 1 : q + 1);
    if (part != (std::uint64_t{1} << n))
        throw FamilyError(tag() + " needs (q" + (minus ? "-" : "+") + "1)_2 = 2^" + std::to_string(n) + ", but q = " +
                          std::to_string(q) + " gives " + std::to_string(part));
}

std::string FamilySpec::tag() const { return "W" + std::to_string(static_cast<int>(family)); }

std::string FamilySpec::group_name() const {
    std::string m = std::to_string(1U << n);
    switch (family) {
        case Family::W1: return "C" + m + " wr C2";
        case Family::W2: return "(C" + m + " x C" + m + "):S3";
        case Family::W3: return "SL2^" + std::to_string(n) + fmt("", q);
        case Family::W4: return "SU2^" + std::to_string(n) + fmt("", q);
        case Family::W5: return fmt("PSL3", q);
        case Family::W6: return fmt("PSU3", q);
    }
    return "?";
}

Family FamilySpec::parse_family(const std::string& s) {
    std::string l = s;
    std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (l.size() == 2 && l[0] == 'w' && l[1] >= '1' && l[1] <= '6') return static_cast<Family>(l[1] - '0');
    throw FamilyError("unknown family '" + s + "' (expected w1 ... w6)");
}

PermGroup wreathed(unsigned n) {
    if (n < 2) throw FamilyError("wreathed: n must be at least 2");
    return wreath_cyclic_c2(n);
}

PermGroup w2_group(unsigned n) {
    if (n < 2) throw FamilyError("w2_group: n must be at least 2");
    const unsigned m = 1U << n;
    auto idx = [m](unsigned x, unsigned y) { return static_cast<Point>((x % m) + m * (y % m)); };
    std::vector<Point> tr(m * m), rho(m * m), swap(m * m);
    for (unsigned y = 0; y < m; ++y)
        for (unsigned x = 0; x < m; ++x) {
            tr[idx(x, y)] = idx(x + 1, y);
            // (1,0) -> (0,1) and (0,1) -> (-1,-1)
            rho[idx(x, y)] = idx(m - y, x + m - y);
            swap[idx(x, y)] = idx(y, x);
        }
    return PermGroup(m * m, {Permutation(tr), Permutation(rho), Permutation(swap)});
}

std::uint64_t classical_order(Classical kind, std::uint64_t q, unsigned t) {
    std::uint64_t sl2 = q * (q * q - 1);
    std::uint64_t sl3 = q * q * q * (q * q - 1) * (q * q * q - 1);
    std::uint64_t su3 = q * q * q * (q * q - 1) * (q * q * q + 1);
    std::uint64_t pt = std::uint64_t{1} << t;
    switch (kind) {
        case Classical::GL2: return sl2 * (q - 1);
        case Classical::GU2: return sl2 * (q + 1);
        case Classical::SL2t: return sl2 * std::gcd(pt, q - 1);
        case Classical::SU2t: return sl2 * std::gcd(pt, q + 1);
        case Classical::GL3: return sl3 * (q - 1);
        case Classical::GU3: return su3 * (q + 1);
        case Classical::SL3: return sl3;
        case Classical::SU3: return su3;
    }
    return 0;
}

MatrixGroup classical_group(Classical kind, unsigned q, unsigned t) {
    if (t > 20) throw FamilyError("classical_group: t out of range");
    Generated gen = matrix_generators(kind, q, t);
    auto dom = std::make_shared<const VectorDomain>(gen.field, gen.dim, false);
    if (gen.unitary) {
        FqMatrix w = FqMatrix::antidiagonal(gen.field, gen.dim);
        for (auto& m : gen.gens)
            if (!preserves_hermitian_form(m, w, q)) throw std::logic_error("classical_group: generator is not unitary");
    }
    MatrixGroup out{act(*dom, gen.gens), dom, gen.field, q};
    std::uint64_t want = classical_order(kind, q, t);
    if (out.group.order() != want)
        throw std::logic_error("classical_group: generated order " + std::to_string(out.group.order()) +
                               " differs from " + std::to_string(want));
    return out;
}

std::uint64_t projective_order(Projective kind, std::uint64_t q) {
    switch (kind) {
        case Projective::PSL3: return classical_order(Classical::SL3, q) / std::gcd(std::uint64_t{3}, q - 1);
        case Projective::PGU3: return classical_order(Classical::SU3, q);
        case Projective::PSU3: return classical_order(Classical::SU3, q) / std::gcd(std::uint64_t{3}, q + 1);
    }
    return 0;
}

ProjectiveGroup projective_group(Projective kind, unsigned q) {
    Classical base = kind == Projective::PSL3 ? Classical::SL3 : kind == Projective::PGU3 ? Classical::GU3 : Classical::SU3;
    Generated gen = matrix_generators(base, q, 0);
    std::shared_ptr<const VectorDomain> dom;
    if (kind == Projective::PSL3) {
        dom = std::make_shared<const VectorDomain>(gen.field, 3, true);
    } else {
        FieldPtr f = gen.field;
        dom = std::make_shared<const VectorDomain>(
            f, 3, true, [f, q](const std::vector<Elem>& v) { return unitary_isotropic(*f, q, v); });
    }
    ProjectiveGroup out{act(*dom, gen.gens), dom, gen.field, q, kind};
    std::uint64_t want = projective_order(kind, q);
    if (out.group.order() != want)
        throw std::logic_error("projective_group: generated order " + std::to_string(out.group.order()) +
                               " differs from " + std::to_string(want));
    return out;
}

BorelSubgroup borel_pgu3(const ProjectiveGroup& pgu3) {
    if (pgu3.kind == Projective::PSL3) throw FamilyError("borel_pgu3: needs a unitary projective group");
    const FieldPtr& f = pgu3.field;
    const unsigned q = pgu3.q;
    FqMatrix w = FqMatrix::antidiagonal(f, 3);
    BorelSubgroup out;

    auto unipotent_set = [&](Elem constant) {
        std::vector<FqMatrix> set;
        for (Elem alpha = 0; alpha < f->size(); ++alpha)
            for (Elem beta = 0; beta < f->size(); ++beta)
                if (f->add(f->add(f->pow(alpha, q + 1), f->pow(beta, q)), beta) == constant)
                    set.push_back(unitary_unipotent(f, q, alpha, beta));
        return set;
    };
    auto is_unitary_group = [&](const std::vector<FqMatrix>& set) {
        if (std::none_of(set.begin(), set.end(), [](const FqMatrix& m) { return m.is_identity(); })) return false;
        for (auto& m : set)
            if (!preserves_hermitian_form(m, w, q)) return false;
        std::set<std::vector<Elem>> keys;
        for (auto& m : set) keys.insert(m.entries());
        for (auto& a : set)
            for (auto& b : set)
                if (!keys.count((a * b).entries())) return false;
        return true;
    };

    std::vector<FqMatrix> with_one = unipotent_set(1);
    out.one_set_valid = is_unitary_group(with_one);
    std::vector<FqMatrix> u = out.one_set_valid ? with_one : unipotent_set(0);
    out.variant = out.one_set_valid ? "one" : "zero";
    if (!out.one_set_valid && !is_unitary_group(u))
        throw FamilyError("borel_pgu3: neither unipotent variant is a unitary group");
    out.unipotent_order = u.size();

    std::vector<FqMatrix> torus;
    for (std::uint64_t k = 0; k < f->size() - 1; ++k) {
        Elem z = f->exp(static_cast<std::int64_t>(k));
        torus.push_back(FqMatrix::diagonal(f, {f->inv(z), 1, f->pow(z, q)}));
    }
    out.torus_order = torus.size();
    out.meets_center_trivially = true;
    for (auto& t : torus)
        for (auto& x : u) {
            FqMatrix p = t * x;
            if (p.is_scalar() && !p.is_identity()) out.meets_center_trivially = false;
        }

    std::vector<Permutation> elems;
    elems.push_back(pgu3.domain->permutation_of(torus[1 % torus.size()]));
    for (auto& x : u) elems.push_back(pgu3.domain->permutation_of(x));
    out.group = subgroup_from_elements(pgu3.domain->size(), elems);
    if (out.group.order() != out.torus_order * out.unipotent_order)
        throw std::logic_error("borel_pgu3: image has order " + std::to_string(out.group.order()));
    if (!out.group.is_subgroup_of(pgu3.group)) throw std::logic_error("borel_pgu3: not inside the ambient group");
    return out;
}

PermGroup parabolic_psl3(const ProjectiveGroup& psl3) {
    if (psl3.kind != Projective::PSL3) throw FamilyError("parabolic_psl3: needs PSL3");
    return psl3.group.stabilizer(0);
}

PermGroup borel_psl3(const ProjectiveGroup& psl3) {
    if (psl3.kind != Projective::PSL3) throw FamilyError("borel_psl3: needs PSL3");
    const FieldPtr& f = psl3.field;
    Elem w = f->primitive(), wi = f->inv(w);
    std::vector<FqMatrix> gens{FqMatrix::diagonal(f, {w, wi, 1}), FqMatrix::diagonal(f, {1, w, wi})};
    for (Elem b : subfield_basis(*f, psl3.q))
        for (auto [i, j] : {std::pair{1U, 0U}, {2U, 0U}, {2U, 1U}}) gens.push_back(FqMatrix::elementary(f, 3, i, j, b));
    PermGroup b = act(*psl3.domain, gens);
    std::uint64_t q = psl3.q;
    std::uint64_t want = q * q * q * (q - 1) * (q - 1) / std::gcd(std::uint64_t{3}, q - 1);
    if (b.order() != want) throw std::logic_error("borel_psl3: order " + std::to_string(b.order()));
    return b;
}

FamilyMember build_family(const FamilySpec& spec) {
    spec.validate();
    FamilyMember m{spec, spec.group_name(), {}};
    switch (spec.family) {
        case Family::W1: m.group = wreathed(spec.n); break;
        case Family::W2: m.group = w2_group(spec.n); break;
        case Family::W3: m.group = classical_group(Classical::SL2t, spec.q, spec.n).group; break;
        case Family::W4: m.group = classical_group(Classical::SU2t, spec.q, spec.n).group; break;
        case Family::W5: m.group = projective_group(Projective::PSL3, spec.q).group; break;
        case Family::W6: m.group = projective_group(Projective::PSU3, spec.q).group; break;
    }
    return m;
}

SylowEmbedding sylow_embedding(const PermGroup& g, unsigned n) { return sylow_embedding(ElementTable(g), n); }

SylowEmbedding sylow_embedding(const ElementTable& t, unsigned n) {
    SylowEmbedding out;
    out.sylow = sylow_2(t);
    if (out.sylow.order() != (std::uint64_t{1} << (2 * n + 1)))
        throw FamilyError("sylow_embedding: Sylow 2-subgroup has order " + std::to_string(out.sylow.order()));
    auto cert = iso_to_model(out.sylow, GroupModel::wreathed(n));
    if (!cert) throw FamilyError("sylow_embedding: Sylow 2-subgroup is not wreathed");
    out.certificate = *cert;
    ElementTable pt(out.sylow);
    PermGroup z = center(pt);
    out.center_order = z.order();
    ElementTable zt(z);
    std::size_t involutions = 0;
    for (std::size_t i = 0; i < zt.size(); ++i)
        if (zt.element_order(i) == 2) {
            ++involutions;
            out.central_involution = zt.element(i);
        }
    if (involutions != 1) throw FamilyError("sylow_embedding: Z(P) does not have a unique involution");
    return out;
}

}  // namespace wreath
