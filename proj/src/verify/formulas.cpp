#include "wreath/verify/formulas.hpp"

#include <numeric>
#include <stdexcept>

namespace wreath::formula {

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

namespace {

std::uint64_t third(std::uint64_t x) {
    if (x % 3) throw std::logic_error("formula: expected a multiple of 3, got " + std::to_string(x));
    return x / 3;
}

}  // namespace

BlockCounts principal_block(Family f, unsigned n) {
    if (n < 2) throw std::invalid_argument("formula: n must be at least 2");
    const std::uint64_t a = pow2(2 * n - 1), b = pow2(n - 1);
    BlockCounts c;
    c.heights[0] = pow2(n + 1);
    switch (f) {
        case Family::W1:
            c.l = 1;
            c.k = a + 3 * b;
            c.heights[1] = a - b;
            break;
        case Family::W2:
            c.l = 2;
            c.k = third(a + 9 * b + 4);
            c.heights[1] = third(a - 3 * b + 4);
            break;
        case Family::W3:
        case Family::W4:
            c.l = 2;
            c.k = a + pow2(n + 1);
            c.heights[1] = a - b;
            c.heights[n] += b;
            break;
        case Family::W5:
        case Family::W6:
            c.l = 3;
            c.k = third(a + 3 * pow2(n + 1) + 4);
            c.heights[1] = third(a - 3 * b + 4);
            c.heights[n] += b;
            break;
    }
    return c;
}

std::vector<CharacterFamily> unitary_decomposition(std::uint64_t q, unsigned n) {
    const std::uint64_t m = pow2(n) - 1;
    return {
        {"1", 1, {1, 0, 0}, 1},
        {"q(q-1)", q * (q - 1), {0, 1, 0}, 1},
        {"q^3", q * q * q, {1, 2, 1}, 1},
        {"q^2-q+1", q * q - q + 1, {1, 1, 0}, m},
        {"q(q^2-q+1)", q * (q * q - q + 1), {1, 1, 1}, m},
        {"(q-1)(q^2-q+1)", (q - 1) * (q * q - q + 1), {0, 0, 1}, third(m * (pow2(n - 1) - 1))},
        {"q^3+1", q * q * q + 1, {2, 2, 1}, pow2(n - 1)},
    };
}

std::vector<CharacterFamily> linear_unipotent_rows(std::uint64_t q) {
    return {
        {"1", 1, {1, 0, 0}, 1},
        {"q(q+1)", q * (q + 1), {0, 1, 0}, 1},
        {"q^3", q * q * q, {1, 0, 1}, 1},
    };
}

std::vector<std::uint64_t> unitary_simple_dims(std::uint64_t q) { return {1, q * (q - 1), (q - 1) * (q * q - q + 1)}; }

std::vector<std::uint64_t> unitary_borel_layers(std::uint64_t q) {
    auto d = unitary_simple_dims(q);
    return {d[0], d[1], d[2], d[1], d[0]};
}

std::uint64_t linear_point_simple_dim(std::uint64_t q) { return q * q + q; }
std::uint64_t linear_flag_simple_dim(std::uint64_t q) { return q * q * q - 1; }
std::vector<std::uint64_t> linear_flag_uniserial_layers(std::uint64_t q) { return {1, linear_flag_simple_dim(q), 1}; }

std::uint64_t unitary_involution_centralizer(std::uint64_t q) {
    return q * (q * q - 1) * (q + 1) / std::gcd<std::uint64_t>(3, q + 1);
}

std::uint64_t linear_involution_centralizer(std::uint64_t q) {
    return q * (q * q - 1) * (q - 1) / std::gcd<std::uint64_t>(3, q - 1);
}

IndexChain index_chain(std::uint64_t q) {
    IndexChain c;
    c.unitary = (q + 1) % 4 == 0;
    std::uint64_t side = c.unitary ? q + 1 : q - 1;
    std::uint64_t part = side & (~side + 1);
    while (pow2(c.n) < part) ++c.n;
    c.top = side / part;
    c.bottom = part;
    return c;
}

WreathedFacts wreathed_facts(unsigned n) {
    if (n < 2) throw std::invalid_argument("formula: n must be at least 2");
    return {pow2(2 * n + 1), 2, pow2(n), pow2(n + 1)};
}

}  // namespace wreath::formula
