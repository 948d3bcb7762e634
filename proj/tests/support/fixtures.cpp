#include "fixtures.hpp"

namespace fixture {

using namespace wreath;

const Psu33& psu33() {
    static const Psu33 f = [] {
        Psu33 r;
        r.g = projective_group(Projective::PSU3, 3);
        r.group = std::make_shared<const PermGroup>(r.g.group);
        r.table = std::make_shared<const ElementTable>(*r.group);
        r.words = std::make_shared<const WordMap>(*r.table);
        r.borel = borel_pgu3(r.g);
        r.borel_module = perm_module(r.group, coset_action(*r.table, r.borel.group).action);
        return r;
    }();
    return f;
}

const Psl35& psl35() {
    static const Psl35 f = [] {
        Psl35 r;
        r.g = projective_group(Projective::PSL3, 5);
        r.group = std::make_shared<const PermGroup>(r.g.group);
        r.table = std::make_shared<const ElementTable>(*r.group);
        r.words = std::make_shared<const WordMap>(*r.table);
        r.borel = borel_psl3(r.g);
        r.point_module = perm_module(r.group);
        r.flag_module = perm_module(r.group, coset_action(*r.table, r.borel).action);
        return r;
    }();
    return f;
}

Small small(const PermGroup& g) {
    Small s;
    s.group = std::make_shared<const PermGroup>(g);
    s.table = std::make_shared<const ElementTable>(g);
    s.words = std::make_shared<const WordMap>(*s.table);
    s.perm = perm_module(s.group);
    return s;
}

}  // namespace fixture
