#pragma once

#include <memory>
#include <optional>
#include <random>

#include "wreath/groups/classes.hpp"
#include "wreath/kernel/echelon.hpp"

namespace wreath {

class ModuleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The G-set underlying a permutation module.
struct PermBasis {
    PermGroup action;
};

/// A right kG-module over GF(2): vectors are rows, g acts as v -> v * action(g).
/// Generator i of group() acts by action()[i].
class GModule {
public:
    GModule() = default;
    GModule(std::shared_ptr<const PermGroup> group, std::vector<BitMatrix> action,
            std::optional<PermBasis> perm = std::nullopt, bool check = true);
    /// Explicit dimension, needed when the group has no generators.
    GModule(std::shared_ptr<const PermGroup> group, std::size_t dim, std::vector<BitMatrix> action,
            std::optional<PermBasis> perm = std::nullopt, bool check = true);

    std::size_t dim() const { return dim_; }
    const PermGroup& group() const { return *group_; }
    const std::shared_ptr<const PermGroup>& group_ptr() const { return group_; }
    std::size_t generator_count() const { return action_.size(); }
    const std::vector<BitMatrix>& action() const { return action_; }
    const BitMatrix& gen(std::size_t i) const { return action_[i]; }
    bool has_perm_basis() const { return perm_.has_value(); }
    const PermBasis& perm_basis() const { return *perm_; }

    /// Matrix of the product of generators, left to right.
    BitMatrix act_word(const std::vector<std::uint8_t>& word) const;

private:
    void validate(bool check) const;
    std::shared_ptr<const PermGroup> group_;
    std::vector<BitMatrix> action_;
    std::optional<PermBasis> perm_;
    std::size_t dim_ = 0;
};

/// Permutation matrix of g: e_x -> e_{x^g}.
BitMatrix permutation_matrix(const Permutation& g);

/// Module on the points of `action`, whose generators are indexed like g's.
GModule perm_module(std::shared_ptr<const PermGroup> g, const PermGroup& action);
/// Permutation module of a group on its own points.
GModule perm_module(std::shared_ptr<const PermGroup> g);
GModule trivial_module(std::shared_ptr<const PermGroup> g);

/// Smallest submodule containing the seeds.
EchelonBasis spin(const GModule& m, const std::vector<BitVec>& seeds);
/// Same, acting with the transposed matrices (the module dual to m under the
/// standard pairing).
EchelonBasis spin_transposed(const GModule& m, const std::vector<BitVec>& seeds);

bool is_submodule(const GModule& m, const BitMatrix& basis);
/// Action on a submodule given by an invariant subspace, in the basis rows.
GModule submodule(const GModule& m, const EchelonBasis& sub);
/// Action on m / sub in the basis of unit vectors at sub.non_pivots().
GModule quotient(const GModule& m, const EchelonBasis& sub);
/// Image of v in the quotient coordinates of m / sub.
BitVec project_to_quotient(const EchelonBasis& sub, BitVec v);
/// Vector of m representing quotient coordinate vector c.
BitVec lift_from_quotient(const EchelonBasis& sub, const BitVec& c);

GModule dual(const GModule& m);
GModule direct_sum(const GModule& a, const GModule& b);

/// Restriction to a subgroup h, using words for h's generators.
GModule restrict_module(const GModule& m, std::shared_ptr<const PermGroup> h, const ElementTable& g_table,
                        const WordMap& g_words);

/// Checks rho(a) rho(b) = rho(ab) on `budget` random pairs of elements.
bool verify_relations(const GModule& m, const ElementTable& t, const WordMap& words, std::mt19937_64& rng,
                      std::size_t budget = 64);

/// Fixed points of the group, as a row basis.
BitMatrix fixed_space(const GModule& m);

}  // namespace wreath
