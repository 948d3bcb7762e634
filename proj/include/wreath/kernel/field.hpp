#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

/// Element of a finite field, encoded as sum d_i p^i where d_i is the
/// coefficient of x^i in the reduced polynomial representative.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t ipow(std::uint64_t b, unsigned e);

/// GF(p^m) with table-based arithmetic. The modulus is the monic
/// irreducible polynomial whose integer code is least, and the primitive
/// element is the least code of multiplicative order p^m - 1.
class ExtField {
public:
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }
    std::uint32_t size() const { return q_; }
    /// Monic modulus, coefficients over GF(p) from x^0 up to x^m.
    const std::vector<Elem>& modulus() const { return modulus_; }
    Elem primitive() const { return exp_[1]; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem frobenius(Elem a) const { return pow(a, p_); }
    /// Discrete log base the primitive element; a must be nonzero.
    std::uint32_t log(Elem a) const;
    Elem exp(std::int64_t k) const;
    Elem from_int(std::int64_t v) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const;

    std::string name() const;

private:
    friend std::shared_ptr<const ExtField> make_field(unsigned p, unsigned m);
    ExtField(unsigned p, unsigned m, std::vector<Elem> modulus);
    Elem raw_mul(Elem a, Elem b) const;
    void build_tables();

    unsigned p_;
    unsigned m_;
    std::uint32_t q_;
    std::vector<Elem> modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> add_table_;
};

using FieldPtr = std::shared_ptr<const ExtField>;

/// Deterministic construction; repeated calls return the same object.
FieldPtr make_field(unsigned p, unsigned m);
FieldPtr make_field_of_size(std::uint64_t q);

}  // namespace wreath
