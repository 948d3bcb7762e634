#pragma once

#include <map>
#include <memory>
#include <optional>

#include "wreath/groups/element_table.hpp"

namespace wreath {

/// Conjugacy classes of an enumerated group. Class i is represented by the
/// least element of the class in the table order, so class 0 is {1}.
struct ClassData {
    std::uint64_t group_order = 0;
    std::uint64_t exponent = 1;
    std::vector<Permutation> representatives;
    std::vector<std::uint32_t> rep_index;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint64_t> element_orders;
    /// prime r -> class of rep^r, for every prime dividing the exponent
    std::map<std::uint64_t, std::vector<std::size_t>> power_maps;
    std::vector<std::size_t> inverse_class;
    /// power_table[c][j] = class of rep_c^j for 0 <= j < element_orders[c]
    std::vector<std::vector<std::size_t>> power_table;
    /// indexed by ElementTable index
    std::vector<std::uint32_t> element_to_class;

    std::size_t count() const { return representatives.size(); }
    /// Class of rep_cls^e for any integer e.
    std::size_t power_class(std::size_t cls, std::int64_t e) const;
};

ClassData conjugacy_classes(const ElementTable& t);

/// Subgroup generated greedily by a list of elements.
PermGroup subgroup_from_elements(std::size_t degree, const std::vector<Permutation>& elements);

PermGroup centralizer(const ElementTable& t, const Permutation& x);
std::optional<Permutation> is_conjugate(const ElementTable& t, const Permutation& x, const Permutation& y);
PermGroup sylow_2(const ElementTable& t);
PermGroup center(const ElementTable& t);
/// The subgroup generated by all elements of odd order.
PermGroup odd_order_core(const ElementTable& t);

struct CosetAction {
    PermGroup action;
    /// representative of each right coset Hx, by point
    std::vector<Permutation> coset_reps;
};

/// Action of g on the right cosets of h, by enumeration.
CosetAction coset_action(const ElementTable& g, const PermGroup& h);

/// Shortest words in the generators for every element, by breadth-first
/// search over the Cayley graph.
class WordMap {
public:
    explicit WordMap(const ElementTable& t);
    /// Generator indices whose product, left to right, is element i.
    std::vector<std::uint8_t> word(std::size_t i) const;
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> gen_;
};

}  // namespace wreath
