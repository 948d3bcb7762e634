#pragma once

#include <random>
#include <utility>
#include <vector>

#include "wreath/kernel/field.hpp"

namespace wreath {

/// Dense univariate polynomial over an ExtField, lowest degree first.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr f, Elem c);
    static Poly monomial(FieldPtr f, std::size_t deg, Elem c = 1);
    static Poly x(FieldPtr f) { return monomial(std::move(f), 1); }

    const FieldPtr& field() const { return f_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }

    Poly monic() const;
    Poly derivative() const;
    Elem eval(Elem x) const;
    Poly scaled(Elem s) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator/(const Poly& o) const { return divmod(o).first; }
    Poly operator%(const Poly& o) const { return divmod(o).second; }
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator<(const Poly& o) const;

    std::string to_string() const;

private:
    void trim();
    FieldPtr f_;
    std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

struct PolyFactor {
    Poly factor;
    unsigned multiplicity = 0;
};

/// Complete factorization into monic irreducibles, sorted by degree then
/// coefficients. The leading coefficient of f is dropped.
std::vector<PolyFactor> factor_poly(const Poly& f);
Poly product(const std::vector<PolyFactor>& factors);
bool is_irreducible(const Poly& f);

}  // namespace wreath
