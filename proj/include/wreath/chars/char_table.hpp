#pragma once

#include <map>
#include <stdexcept>

#include "wreath/chars/cyclotomic.hpp"
#include "wreath/groups/classes.hpp"
#include "wreath/kernel/field.hpp"
#include "wreath/rep/module.hpp"

namespace wreath {

class CharTableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The fixed choice of roots that ties exact values to both reductions.
/// zeta_e = exp(2 pi i / e) corresponds to dixon_root in GF(l) and is sent to
/// gf2_root, of order odd_exponent, in GF(2^gf2_degree).
struct RootConvention {
    std::uint64_t exponent = 1;
    std::uint64_t dixon_prime = 0;
    std::uint64_t dixon_root = 0;
    std::uint64_t odd_exponent = 1;
    unsigned gf2_degree = 1;
    Elem gf2_root = 1;
    /// Coefficients of the GF(2^m) modulus from x^0 up.
    std::vector<Elem> gf2_modulus;

    FieldPtr gf2_field() const { return make_field(2, gf2_degree); }
    /// Image of zeta_n for n dividing the exponent.
    std::uint64_t dixon_root_of(std::uint64_t n) const;
    Elem gf2_root_of(std::uint64_t n) const;
};

/// Least prime l = 1 mod e with l > 2 sqrt(order); the root is g^((l-1)/e)
/// for the least primitive root g.
RootConvention make_root_convention(std::uint64_t exponent, std::uint64_t group_order);

/// Image of an algebraic integer under the reduction zeta_e -> gf2_root.
Elem reduce_mod_2(const Cyclotomic& x, const RootConvention& rc);

/// a[i][j][k] = #{x in C_i : x^-1 z in C_j} for a fixed z in C_k.
using ClassMatrices = std::vector<std::vector<std::vector<std::uint64_t>>>;
ClassMatrices class_matrices(const ElementTable& t, const ClassData& cd);

struct CharacterTable {
    ClassData classes;
    RootConvention root;
    /// values[chi][class]; character 0 is trivial, the rest sorted by degree.
    std::vector<std::vector<Cyclotomic>> values;

    std::size_t size() const { return values.size(); }
    std::uint64_t degree(std::size_t chi) const { return static_cast<std::uint64_t>(values[chi][0].integer_value()); }
    std::vector<std::uint64_t> degrees() const;
};

struct Orthogonality {
    bool rows = false;
    bool columns = false;
    std::string detail;
};

/// Both orthogonality relations, in exact arithmetic.
Orthogonality check_orthogonality(const CharacterTable& t);

/// Burnside-Dixon. Throws CharTableError on failure, including a failed
/// exact orthogonality check.
CharacterTable dixon_table(const ElementTable& t, const ClassData& cd, std::uint64_t seed = 0);

/// Characters whose central characters agree with the trivial one after
/// reduction mod 2.
std::vector<std::size_t> principal_block_2(const CharacterTable& t);

std::vector<std::size_t> two_regular_classes(const ClassData& cd);
std::vector<std::size_t> two_element_classes(const ClassData& cd);

/// Values on the classes of two_regular_classes(), in that order.
using BrauerCharacter = std::vector<Cyclotomic>;

/// Brauer character of a module for the group of t, whose generators must
/// match the generators of the table's group.
BrauerCharacter brauer_character(const GModule& m, const ElementTable& t, const WordMap& words,
                                 const CharacterTable& ct);

struct DecompositionMatrix {
    std::vector<std::size_t> rows;
    std::vector<std::string> column_labels;
    /// entries[row][column]
    std::vector<std::vector<std::int64_t>> entries;
};

/// Solves chi = sum d_phi phi on 2-regular classes mod l, then checks the
/// result exactly. Throws CharTableError when some entry is negative or the
/// exact check fails.
DecompositionMatrix decomposition_matrix(const CharacterTable& t, const std::vector<std::size_t>& rows,
                                         const std::vector<BrauerCharacter>& ibr,
                                         const std::vector<std::string>& labels);

struct BlockInvariants {
    std::size_t k = 0;
    /// rank of the block's characters on 2-regular classes
    std::size_t l = 0;
    std::map<unsigned, std::size_t> heights;
    unsigned defect = 0;

    std::size_t height_count(unsigned h) const {
        auto it = heights.find(h);
        return it == heights.end() ? 0 : it->second;
    }
};

/// Heights are v_2(chi(1)), which is right for the principal block.
BlockInvariants block_invariants(const CharacterTable& t, const std::vector<std::size_t>& block);

/// Rank mod l of class functions on the 2-regular classes.
std::size_t rank_mod_l(const CharacterTable& t, const std::vector<BrauerCharacter>& chars);

unsigned two_valuation(std::uint64_t x);

}  // namespace wreath
