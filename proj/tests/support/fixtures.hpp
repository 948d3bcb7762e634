#pragma once

// Shared module fixtures, built once per process.

#include <memory>

#include "wreath/families/families.hpp"
#include "wreath/rep/module.hpp"

namespace fixture {

struct Psu33 {
    wreath::ProjectiveGroup g;
    std::shared_ptr<const wreath::PermGroup> group;
    std::shared_ptr<const wreath::ElementTable> table;
    std::shared_ptr<const wreath::WordMap> words;
    wreath::BorelSubgroup borel;
    /// permutation module on the cosets of the Borel subgroup
    wreath::GModule borel_module;
};

struct Psl35 {
    wreath::ProjectiveGroup g;
    std::shared_ptr<const wreath::PermGroup> group;
    std::shared_ptr<const wreath::ElementTable> table;
    std::shared_ptr<const wreath::WordMap> words;
    wreath::PermGroup borel;
    wreath::GModule point_module;
    wreath::GModule flag_module;
};

const Psu33& psu33();
const Psl35& psl35();

/// A small permutation group with its permutation module, shared pointer
/// and tables.
struct Small {
    std::shared_ptr<const wreath::PermGroup> group;
    std::shared_ptr<const wreath::ElementTable> table;
    std::shared_ptr<const wreath::WordMap> words;
    wreath::GModule perm;
};
Small small(const wreath::PermGroup& g);

}  // namespace fixture
