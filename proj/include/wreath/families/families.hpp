#pragma once

#include <memory>
#include <optional>
#include <string>

#include "wreath/families/fq_matrix.hpp"
#include "wreath/groups/element_table.hpp"
#include "wreath/groups/perm_group.hpp"

namespace wreath {

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Family { W1 = 1, W2, W3, W4, W5, W6 };

/// A family tag with its parameters. q is unused for W1 and W2.
struct FamilySpec {
    Family family = Family::W1;
    unsigned n = 2;
    unsigned q = 0;

    /// Throws FamilyError unless n >= 2 and q satisfies the family congruence.
    void validate() const;
    std::string tag() const;
    /// Human name of the group, e.g. "PSU3(3)".
    std::string group_name() const;
    static Family parse_family(const std::string& s);
};

/// Largest power of 2 dividing x.
std::uint64_t two_part(std::uint64_t x);

/// C_{2^n} wr C_2 on 2^{n+1} points.
PermGroup wreathed(unsigned n);
/// (C_{2^n} x C_{2^n}) : S_3 acting affinely on (Z/2^n)^2. The 3-cycle sends
/// a -> b -> (ab)^-1 and the involution swaps a and b.
PermGroup w2_group(unsigned n);

enum class Classical { GL2, GU2, SL2t, SU2t, GL3, GU3, SL3, SU3 };

/// A matrix group acting on the nonzero row vectors of its natural module.
struct MatrixGroup {
    PermGroup group;
    std::shared_ptr<const VectorDomain> domain;
    FieldPtr field;
    unsigned q = 0;
};

/// Natural action on nonzero vectors. Unitary groups live over GF(q^2) and
/// preserve the antidiagonal form. t is only used by SL2t and SU2t, which are
/// the elements with det^(2^t) = 1.
MatrixGroup classical_group(Classical kind, unsigned q, unsigned t = 0);
std::uint64_t classical_order(Classical kind, std::uint64_t q, unsigned t = 0);

enum class Projective { PSL3, PGU3, PSU3 };

struct ProjectiveGroup {
    PermGroup group;
    std::shared_ptr<const VectorDomain> domain;
    FieldPtr field;
    unsigned q = 0;
    Projective kind = Projective::PSL3;
};

/// PSL3(q) on projective points, PGU3(q) and PSU3(q) on isotropic points.
ProjectiveGroup projective_group(Projective kind, unsigned q);
std::uint64_t projective_order(Projective kind, std::uint64_t q);

struct BorelSubgroup {
    PermGroup group;
    /// "one" when the unipotent set with constant 1 is closed and unitary,
    /// otherwise "zero".
    std::string variant;
    bool one_set_valid = false;
    /// No nonidentity element of T(q)U(q) is scalar.
    bool meets_center_trivially = false;
    std::uint64_t torus_order = 0;
    std::uint64_t unipotent_order = 0;
};

/// The Borel subgroup T(q)U(q) of PGU3(q), with T = {diag(z^-1, 1, z^q)} and
/// U lower unitriangular.
BorelSubgroup borel_pgu3(const ProjectiveGroup& pgu3);
/// Stabilizer of the first projective point of PSL3(q).
PermGroup parabolic_psl3(const ProjectiveGroup& psl3);
/// Image of the lower triangular matrices of SL3(q) in PSL3(q).
PermGroup borel_psl3(const ProjectiveGroup& psl3);

struct FamilyMember {
    FamilySpec spec;
    std::string name;
    PermGroup group;
};

FamilyMember build_family(const FamilySpec& spec);

struct SylowEmbedding {
    PermGroup sylow;
    /// Images of the wreath model generators x, t in the Sylow subgroup.
    std::vector<Permutation> certificate;
    /// The unique involution of Z(P).
    Permutation central_involution;
    std::uint64_t center_order = 0;
};

/// Sylow 2-subgroup of g with a verified isomorphism to wreathed(n).
/// Throws FamilyError if the isomorphism test fails.
SylowEmbedding sylow_embedding(const PermGroup& g, unsigned n);
SylowEmbedding sylow_embedding(const ElementTable& t, unsigned n);

}  // namespace wreath
