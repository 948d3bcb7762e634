#pragma once

#include <optional>
#include <string>

#include "wreath/groups/element_table.hpp"
#include "wreath/kernel/bitmatrix.hpp"

namespace wreath {

inline constexpr std::size_t kSmallGroupBound = 512;

/// A group of order at most 512 with a full Cayley table, for exhaustive
/// searches (isomorphisms, automorphisms, subgroup lattices).
class SmallGroup {
public:
    /// Bitset over element indices.
    using Subset = std::vector<Word>;

    explicit SmallGroup(const PermGroup& g);

    std::size_t order() const { return n_; }
    const ElementTable& table() const { return table_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
    std::size_t inv(std::size_t a) const { return inv_[a]; }
    std::uint64_t element_order(std::size_t a) const { return orders_[a]; }
    Permutation element(std::size_t i) const { return table_.element(i); }
    std::size_t index_of(const Permutation& g) const { return table_.index_of(g); }
    const std::vector<std::size_t>& generator_indices() const { return gens_; }

    Subset empty_subset() const { return Subset(words_for(n_), 0); }
    Subset closure(const std::vector<std::size_t>& gens) const;
    Subset conjugate(const Subset& s, std::size_t g) const;
    Subset from_group(const PermGroup& h) const;
    std::vector<std::size_t> members(const Subset& s) const;
    PermGroup to_group(const Subset& s) const;
    Subset center() const;
    bool commute(std::size_t a, std::size_t b) const { return mul(a, b) == mul(b, a); }

private:
    ElementTable table_;
    std::size_t n_;
    std::vector<std::uint16_t> mul_;
    std::vector<std::uint16_t> inv_;
    std::vector<std::uint64_t> orders_;
    std::vector<std::size_t> gens_;
};

/// Concrete reference groups used as isomorphism targets.
struct GroupModel {
    enum class Kind { Wreathed, Dihedral, Cyclic, ElementaryAbelian, DirectCyclic, SemidirectCyclic };
    Kind kind = Kind::Cyclic;
    unsigned a = 1;
    unsigned b = 1;
    unsigned r = 1;

    /// C_{2^n} wr C_2, presented by x^{2^n} = t^2 = [x, x^t] = 1.
    static GroupModel wreathed(unsigned n) { return {Kind::Wreathed, n, 0, 0}; }
    static GroupModel dihedral(unsigned order) { return {Kind::Dihedral, order, 0, 0}; }
    static GroupModel cyclic(unsigned order) { return {Kind::Cyclic, order, 0, 0}; }
    static GroupModel elementary_abelian(unsigned rank) { return {Kind::ElementaryAbelian, rank, 0, 0}; }
    static GroupModel direct(unsigned m, unsigned n) { return {Kind::DirectCyclic, m, n, 0}; }
    /// C_m semidirect C_n, generator of C_n acting by a -> a^r.
    static GroupModel semidirect(unsigned m, unsigned n, unsigned r) { return {Kind::SemidirectCyclic, m, n, r}; }

    std::string name() const;
    std::uint64_t order() const;
    PermGroup build() const;
};

/// C_{2^n} wr C_2 on 2^{n+1} points: x cycles the first block, t swaps blocks.
PermGroup wreath_cyclic_c2(unsigned n);

/// Images of the model's generators in p defining an isomorphism, if any.
std::optional<std::vector<Permutation>> iso_to_model(const PermGroup& p, const GroupModel& model);
/// Largest rank of an elementary abelian 2-subgroup.
unsigned two_rank(const PermGroup& p);
/// |Aut(p)| for a 2-generated group, by counting generator images.
std::uint64_t automorphism_order(const PermGroup& p);
/// One subgroup per conjugacy class, ordered by order then canonical bitset.
std::vector<PermGroup> subgroups_up_to_conjugacy(const PermGroup& p);
/// Regular representation of p / n for a normal subgroup n.
PermGroup quotient_group(const PermGroup& p, const PermGroup& n);
bool is_abelian(const PermGroup& g);
bool is_cyclic(const PermGroup& g);

}  // namespace wreath
