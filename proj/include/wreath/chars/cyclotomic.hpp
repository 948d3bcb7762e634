#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace wreath {

/// Cyclotomic polynomial Phi_n with integer coefficients, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// An element of Z[zeta_n], zeta_n = exp(2 pi i / n), stored in the power
/// basis 1, zeta_n, ..., zeta_n^(phi(n)-1). The representation is canonical,
/// so equal values in the same field compare equal.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(std::uint64_t n);
    static Cyclotomic integer(std::int64_t v, std::uint64_t n = 1);
    /// zeta_n^k.
    static Cyclotomic root(std::uint64_t n, std::int64_t k);
    /// sum_k a[k] zeta_n^k for any length of a.
    static Cyclotomic from_powers(std::uint64_t n, const std::vector<std::int64_t>& a);

    std::uint64_t conductor() const { return n_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    /// The same value in Q(zeta_m); n must divide m.
    Cyclotomic lift(std::uint64_t m) const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(std::int64_t s) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Complex conjugate, zeta -> zeta^-1.
    Cyclotomic conj() const;
    /// Galois action zeta -> zeta^r, gcd(r, n) = 1.
    Cyclotomic galois(std::int64_t r) const;
    bool is_zero() const;
    bool is_integer() const;
    /// Requires is_integer().
    std::int64_t integer_value() const;
    /// Exact division of every coefficient; throws std::domain_error if some
    /// coefficient is not divisible.
    Cyclotomic divided_by(std::int64_t d) const;

    std::complex<double> to_complex() const;
    /// Image under zeta_n -> w in Z/pZ, where w has order dividing n.
    std::uint64_t mod_prime(std::uint64_t p, std::uint64_t w) const;

    /// e.g. "-1", "2+z3^1", with zN standing for zeta_N.
    std::string to_string() const;

private:
    void reduce(std::vector<std::int64_t> dense);
    std::uint64_t n_;
    std::vector<std::int64_t> c_;
};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace wreath
