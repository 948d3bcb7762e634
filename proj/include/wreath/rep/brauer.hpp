#pragma once

#include "wreath/rep/module.hpp"

namespace wreath {

/// A module restricted to a 2-group P, with words for every element of P.
class LocalModule {
public:
    /// m must already be a module for p's generators.
    LocalModule(GModule m);
    /// Restrict a G-module to p <= G.
    LocalModule(const GModule& m, std::shared_ptr<const PermGroup> p, const ElementTable& g_table, const WordMap& g_words);

    const GModule& module() const { return m_; }
    const PermGroup& group() const { return m_.group(); }
    const ElementTable& table() const { return *table_; }
    BitMatrix element_matrix(const Permutation& x) const;

private:
    void init();
    GModule m_;
    std::shared_ptr<const ElementTable> table_;
    std::shared_ptr<const WordMap> words_;
};

/// Points fixed by every generator of q.
std::size_t fixed_point_count(const PermGroup& action, const std::vector<Permutation>& q_gens);

/// Index-2 subgroups of a 2-group q with, for each, an element of q outside it.
std::vector<std::pair<PermGroup, Permutation>> maximal_subgroups_2group(const PermGroup& q);

/// dim M(Q) = dim M^Q - dim sum_R tr_R^Q(M^R), R over the maximal subgroups.
std::size_t brauer_construction(const LocalModule& m, const PermGroup& q);

struct VertexResult {
    PermGroup vertex;
    /// (order of Q, dim M(Q)) for every class of subgroups of P.
    std::vector<std::pair<std::uint64_t, std::size_t>> profile;
    std::size_t classes_tested = 0;
};

/// Vertex of an indecomposable trivial source module: the largest Q <= P,
/// up to conjugacy, with M(Q) != 0. Throws ModuleError when the largest such
/// classes are not all of one isomorphism type.
VertexResult vertex_of_trivial_source(const LocalModule& m);

/// Order, exponent, centre order and element-order counts; equal for
/// isomorphic groups.
std::string group_signature(const PermGroup& g);

}  // namespace wreath
