#include "wreath/rep/brauer.hpp"

#include <bit>
#include <map>

#include "wreath/groups/small_group.hpp"

namespace wreath {

namespace {

bool is_two_group(const PermGroup& q) {
    std::uint64_t n = q.order();
    return (n & (n - 1)) == 0;
}

BitMatrix fixed_space_of(const std::vector<BitMatrix>& mats, std::size_t dim) {
    if (mats.empty()) return BitMatrix::identity(dim);
    BitMatrix big(dim, 0);
    for (auto& a : mats) big = hstack(big, a + BitMatrix::identity(dim));
    return nullspace(big);
}

}  // namespace

LocalModule::LocalModule(GModule m) : m_(std::move(m)) { init(); }

LocalModule::LocalModule(const GModule& m, std::shared_ptr<const PermGroup> p, const ElementTable& g_table,
                         const WordMap& g_words)
    : m_(restrict_module(m, std::move(p), g_table, g_words)) {
    init();
}

void LocalModule::init() {
    if (!is_two_group(m_.group())) throw ModuleError("LocalModule: group is not a 2-group");
    table_ = std::make_shared<const ElementTable>(m_.group());
    words_ = std::make_shared<const WordMap>(*table_);
}

BitMatrix LocalModule::element_matrix(const Permutation& x) const { return m_.act_word(words_->word(table_->index_of(x))); }

std::size_t fixed_point_count(const PermGroup& action, const std::vector<Permutation>& q_gens) {
    std::size_t n = 0;
    for (std::size_t x = 0; x < action.degree(); ++x) {
        bool fixed = true;
        for (auto& g : q_gens)
            if (g[x] != x) fixed = false;
        if (fixed) ++n;
    }
    return n;
}

std::vector<std::pair<PermGroup, Permutation>> maximal_subgroups_2group(const PermGroup& q) {
    if (!is_two_group(q)) throw ModuleError("maximal_subgroups_2group: not a 2-group");
    std::vector<std::pair<PermGroup, Permutation>> out;
    if (q.order() == 1) return out;
    ElementTable t(q);
    std::vector<Permutation> squares;
    for (std::size_t i = 0; i < t.size(); ++i) squares.push_back(t.element(t.product(i, i)));
    PermGroup phi = subgroup_from_elements(q.degree(), squares);
    // representatives of a basis of q / phi
    std::vector<Permutation> basis;
    std::vector<Permutation> gens = phi.generators();
    PermGroup h = phi;
    for (std::size_t i = 0; i < t.size() && h.order() < q.order(); ++i) {
        Permutation x = t.element(i);
        if (h.contains(x)) continue;
        basis.push_back(x);
        gens.push_back(x);
        h = PermGroup(q.degree(), gens);
    }
    const std::size_t r = basis.size();
    for (std::uint64_t c = 1; c < (std::uint64_t{1} << r); ++c) {
        std::size_t i0 = static_cast<std::size_t>(std::countr_zero(c));
        std::vector<Permutation> rg = phi.generators();
        for (std::size_t i = 0; i < r; ++i) {
            if (!((c >> i) & 1U)) rg.push_back(basis[i]);
            else if (i != i0) rg.push_back(basis[i0] * basis[i]);
        }
        PermGroup sub(q.degree(), rg);
        if (sub.order() * 2 != q.order()) throw std::logic_error("maximal_subgroups_2group: wrong index");
        out.emplace_back(std::move(sub), basis[i0]);
    }
    return out;
}

std::size_t brauer_construction(const LocalModule& m, const PermGroup& q) {
    if (!is_two_group(q)) throw ModuleError("brauer_construction: Q is not a 2-group");
    if (!q.is_subgroup_of(m.group())) throw ModuleError("brauer_construction: Q is not inside the local group");
    const std::size_t d = m.module().dim();
    if (q.order() == 1) return d;
    auto mats_of = [&](const PermGroup& g) {
        std::vector<BitMatrix> r;
        for (auto& x : g.generators()) r.push_back(m.element_matrix(x));
        return r;
    };
    BitMatrix fixed = fixed_space_of(mats_of(q), d);
    if (fixed.rows() == 0) return 0;
    EchelonBasis traces(d);
    for (auto& [r, t] : maximal_subgroups_2group(q)) {
        BitMatrix fr = fixed_space_of(mats_of(r), d);
        if (fr.rows() == 0) continue;
        BitMatrix img = mat_mul(fr, m.element_matrix(t) + BitMatrix::identity(d));
        for (std::size_t i = 0; i < img.rows(); ++i) traces.add(img.row_vec(i));
    }
    return fixed.rows() - traces.dim();
}

VertexResult vertex_of_trivial_source(const LocalModule& m) {
    VertexResult res;
    std::vector<PermGroup> classes = subgroups_up_to_conjugacy(m.group());
    res.classes_tested = classes.size();
    std::uint64_t best = 0;
    std::vector<std::size_t> top;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::size_t dq = brauer_construction(m, classes[i]);
        res.profile.emplace_back(classes[i].order(), dq);
        if (dq == 0) continue;
        if (classes[i].order() > best) {
            best = classes[i].order();
            top.clear();
        }
        if (classes[i].order() == best) top.push_back(i);
    }
    if (top.empty()) throw ModuleError("vertex_of_trivial_source: M(1) = 0");
    std::string sig = group_signature(classes[top[0]]);
    for (auto i : top)
        if (group_signature(classes[i]) != sig)
            throw ModuleError("vertex_of_trivial_source: largest subgroups with M(Q) != 0 are not isomorphic");
    res.vertex = classes[top[0]];
    return res;
}

std::string group_signature(const PermGroup& g) {
    ElementTable t(g);
    std::map<std::uint64_t, std::size_t> counts;
    for (std::size_t i = 0; i < t.size(); ++i) ++counts[t.element_order(i)];
    std::string s = "order " + std::to_string(g.order()) + ", centre " + std::to_string(center(t).order()) + ", orders";
    for (auto& [o, c] : counts) s += " " + std::to_string(o) + ":" + std::to_string(c);
    return s;
}

}  // namespace wreath
