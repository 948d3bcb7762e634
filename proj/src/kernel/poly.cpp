#include "wreath/kernel/poly.hpp"

#include <algorithm>
#include <sstream>

namespace wreath {

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(FieldPtr f, Elem c) { return Poly(std::move(f), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr f, std::size_t deg, Elem c) {
    std::vector<Elem> v(deg + 1, 0);
    v[deg] = c;
    return Poly(std::move(f), std::move(v));
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(f_->inv(c_.back()));
}

Poly Poly::scaled(Elem s) const {
    std::vector<Elem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_->mul(c_[i], s);
    return Poly(f_, std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(f_);
    std::vector<Elem> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<std::int64_t>(i)));
    return Poly(f_, std::move(v));
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(f_ ? f_ : o.f_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    const FieldPtr& f = f_ ? f_ : o.f_;
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->sub(coeff(i), o.coeff(i));
    return Poly(f, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_ ? f_ : o.f_);
    std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = f_->add(v[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw FieldError("polynomial division by zero");
    if (degree() < d.degree()) return {Poly(d.f_), *this};
    const FieldPtr& f = d.f_;
    std::vector<Elem> r = c_;
    std::vector<Elem> q(c_.size() - d.c_.size() + 1, 0);
    Elem li = f->inv(d.lead());
    std::size_t dd = d.c_.size() - 1;
    for (std::size_t k = r.size(); k-- > dd;) {
        Elem c = r[k];
        if (c == 0) continue;
        Elem t = f->mul(c, li);
        q[k - dd] = t;
        for (std::size_t i = 0; i <= dd; ++i) r[k - dd + i] = f->sub(r[k - dd + i], f->mul(t, d.c_[i]));
    }
    r.resize(dd);
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

bool Poly::operator<(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c_[i] != 1 || i == 0) os << c_[i];
        if (i >= 1) os << (c_[i] != 1 ? "*" : "") << "x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = Poly::constant(m.field(), 1) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1U) result = mulmod(result, b, m);
        e >>= 1;
        if (e) b = mulmod(b, b, m);
    }
    return result;
}

namespace {

// p-th root of a polynomial whose exponents are all multiples of p.
Poly pth_root(const Poly& f) {
    const FieldPtr& F = f.field();
    unsigned p = F->characteristic();
    std::uint64_t inv_frob = ipow(p, F->degree() - 1);
    std::vector<Elem> v(static_cast<std::size_t>(f.degree()) / p + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F->pow(f.coeff(i * p), inv_frob);
    return Poly(F, std::move(v));
}

void squarefree(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
    if (f.degree() < 1) return;
    const FieldPtr& F = f.field();
    Poly c = gcd(f, f.derivative());
    Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one() && c.degree() > 0) squarefree(pth_root(c.monic()), mult * F->characteristic(), out);
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const FieldPtr& F = f.field();
    Poly xx = Poly::x(F);
    Poly h = xx % f;
    unsigned i = 1;
    while (f.degree() >= 2 * static_cast<int>(i)) {
        h = powmod(h, F->size(), f);
        Poly g = gcd(f, h - xx);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
        ++i;
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<unsigned>(f.degree()));
    return out;
}

Poly random_poly(const FieldPtr& F, int below, std::mt19937_64& rng) {
    std::vector<Elem> v(static_cast<std::size_t>(below));
    for (auto& c : v) c = static_cast<Elem>(rng() % F->size());
    return Poly(F, std::move(v));
}

// Splits a squarefree product of irreducibles of degree d.
void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    const FieldPtr& F = f.field();
    std::uint64_t q = F->size();
    for (;;) {
        Poly a = random_poly(F, f.degree(), rng);
        if (a.degree() < 1) continue;
        Poly b(F);
        if (F->characteristic() == 2) {
            Poly t = a % f;
            b = t;
            unsigned steps = F->degree() * d;
            for (unsigned k = 1; k < steps; ++k) {
                t = mulmod(t, t, f);
                b = b + t;
            }
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
            Poly t = a % f;
            Poly n = t;
            for (unsigned k = 1; k < d; ++k) {
                t = powmod(t, q, f);
                n = mulmod(n, t, f);
            }
            b = powmod(n, (q - 1) / 2, f) - Poly::constant(F, 1);
        }
        Poly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<PolyFactor> factor_poly(const Poly& f) {
    if (f.is_zero()) throw FieldError("factor_poly: zero polynomial");
    std::vector<PolyFactor> out;
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(f.degree()));
    std::vector<std::pair<Poly, unsigned>> sqf;
    squarefree(f.monic(), 1, sqf);
    for (auto& [g, mult] : sqf) {
        for (auto& [h, d] : distinct_degree(g)) {
            std::vector<Poly> irr;
            equal_degree(h, d, rng, irr);
            for (auto& p : irr) out.push_back({p, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
        return a.factor < b.factor;
    });
    // merge equal factors (can arise from the p-th root recursion)
    std::vector<PolyFactor> merged;
    for (auto& pf : out) {
        if (!merged.empty() && merged.back().factor == pf.factor) merged.back().multiplicity += pf.multiplicity;
        else merged.push_back(pf);
    }
    return merged;
}

Poly product(const std::vector<PolyFactor>& factors) {
    if (factors.empty()) throw FieldError("product: empty factor list has no field");
    Poly r = Poly::constant(factors.front().factor.field(), 1);
    for (auto& pf : factors)
        for (unsigned i = 0; i < pf.multiplicity; ++i) r = r * pf.factor;
    return r;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_poly(f);
    return fac.size() == 1 && fac[0].multiplicity == 1;
}

}  // namespace wreath
