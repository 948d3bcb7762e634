#pragma once

// Closed forms for the expected values. Every claim takes its expected
// numbers from here.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wreath/families/families.hpp"

namespace wreath::formula {

struct BlockCounts {
    std::uint64_t k = 0;
    std::uint64_t l = 0;
    /// height -> number of characters; heights with no characters are absent
    std::map<unsigned, std::uint64_t> heights;
};

/// Invariants of the principal 2-block for a family with wreathed Sylow
/// C_{2^n} wr C_2. W3/W4 and W5/W6 share their counts.
BlockCounts principal_block(Family f, unsigned n);

/// A family of ordinary characters with equal decomposition row.
struct CharacterFamily {
    std::string label;
    std::uint64_t degree = 0;
    std::vector<std::int64_t> row;
    std::uint64_t count = 0;
};

/// Principal block of PGU3(q) with n = v2(q+1), columns (k, phi, theta).
std::vector<CharacterFamily> unitary_decomposition(std::uint64_t q, unsigned n);
/// Unipotent rows of the principal block of PSL3(q), columns (k, S, T).
std::vector<CharacterFamily> linear_unipotent_rows(std::uint64_t q);

/// Column dimensions k, phi, theta for PGU3(q).
std::vector<std::uint64_t> unitary_simple_dims(std::uint64_t q);
/// Layer dimensions of the permutation module on the cosets of the Borel
/// subgroup of PGU3(q).
std::vector<std::uint64_t> unitary_borel_layers(std::uint64_t q);
/// dim S and dim T for PSL3(q).
std::uint64_t linear_point_simple_dim(std::uint64_t q);
std::uint64_t linear_flag_simple_dim(std::uint64_t q);
std::vector<std::uint64_t> linear_flag_uniserial_layers(std::uint64_t q);

/// Orders of the centralizer of an involution: GU2(q) / gcd(3, q+1) in
/// PSU3(q) and GL2(q) / gcd(3, q-1) in PSL3(q).
std::uint64_t unitary_involution_centralizer(std::uint64_t q);
std::uint64_t linear_involution_centralizer(std::uint64_t q);

/// The side of the 2x2 classical groups where the 2-part is 2^n.
struct IndexChain {
    bool unitary = false;
    unsigned n = 0;
    /// |GL2 : SL2^n| (or GU2 : SU2^n) and |SL2^n : SL2| (or SU2^n : SU2)
    std::uint64_t top = 0;
    std::uint64_t bottom = 0;
};
IndexChain index_chain(std::uint64_t q);

/// Wreathed 2-group facts for C_{2^n} wr C_2.
struct WreathedFacts {
    std::uint64_t order = 0;
    unsigned two_rank = 2;
    std::uint64_t center_order = 0;
    /// order of the dihedral quotient P / Z(P)
    std::uint64_t dihedral_quotient = 0;
};
WreathedFacts wreathed_facts(unsigned n);

std::uint64_t pow2(unsigned e);

}  // namespace wreath::formula
