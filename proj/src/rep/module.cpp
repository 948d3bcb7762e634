#include "wreath/rep/module.hpp"

namespace wreath {

GModule::GModule(std::shared_ptr<const PermGroup> group, std::vector<BitMatrix> action, std::optional<PermBasis> perm,
                 bool check)
    : group_(std::move(group)), action_(std::move(action)), perm_(std::move(perm)) {
    dim_ = !action_.empty() ? action_[0].rows() : perm_ ? perm_->action.degree() : 0;
    validate(check);
}

GModule::GModule(std::shared_ptr<const PermGroup> group, std::size_t dim, std::vector<BitMatrix> action,
                 std::optional<PermBasis> perm, bool check)
    : group_(std::move(group)), action_(std::move(action)), perm_(std::move(perm)), dim_(dim) {
    validate(check);
}

void GModule::validate(bool check) const {
    if (!group_) throw ModuleError("GModule: no group");
    if (action_.size() != group_->generators().size())
        throw ModuleError("GModule: " + std::to_string(action_.size()) + " matrices for " +
                          std::to_string(group_->generators().size()) + " generators");
    for (auto& a : action_) {
        if (a.rows() != dim_ || a.cols() != dim_) throw ModuleError("GModule: action matrices must be square of equal size");
        if (check && !is_invertible(a)) throw ModuleError("GModule: singular action matrix");
    }
}

BitMatrix GModule::act_word(const std::vector<std::uint8_t>& word) const {
    BitMatrix r = BitMatrix::identity(dim_);
    for (auto s : word) r = mat_mul(r, action_.at(s));
    return r;
}

BitMatrix permutation_matrix(const Permutation& g) {
    BitMatrix m(g.degree(), g.degree());
    for (std::size_t x = 0; x < g.degree(); ++x) m.set(x, g[x]);
    return m;
}

GModule perm_module(std::shared_ptr<const PermGroup> g, const PermGroup& action) {
    if (action.degree() < 1) throw ModuleError("perm_module: empty G-set");
    if (action.generators().size() != g->generators().size())
        throw ModuleError("perm_module: action and group have different generator lists");
    std::vector<BitMatrix> mats;
    for (auto& p : action.generators()) mats.push_back(permutation_matrix(p));
    return GModule(std::move(g), action.degree(), std::move(mats), PermBasis{action}, false);
}

GModule perm_module(std::shared_ptr<const PermGroup> g) {
    PermGroup a = *g;
    return perm_module(std::move(g), a);
}

GModule trivial_module(std::shared_ptr<const PermGroup> g) {
    std::vector<BitMatrix> mats(g->generators().size(), BitMatrix::identity(1));
    return GModule(std::move(g), 1, std::move(mats), std::nullopt, false);
}

namespace {
EchelonBasis spin_with(const std::vector<BitMatrix>& mats, std::size_t dim, const std::vector<BitVec>& seeds) {
    EchelonBasis e(dim);
    for (auto& s : seeds) {
        std::size_t from = e.dim();
        if (!e.add(s)) continue;
        for (std::size_t j = from; j < e.dim() && !e.full(); ++j)
            for (auto& a : mats) {
                e.add(a.apply(e.row(j)));
                if (e.full()) break;
            }
    }
    return e;
}
}  // namespace

EchelonBasis spin(const GModule& m, const std::vector<BitVec>& seeds) { return spin_with(m.action(), m.dim(), seeds); }

EchelonBasis spin_transposed(const GModule& m, const std::vector<BitVec>& seeds) {
    std::vector<BitMatrix> t;
    for (auto& a : m.action()) t.push_back(a.transpose());
    return spin_with(t, m.dim(), seeds);
}

bool is_submodule(const GModule& m, const BitMatrix& basis) {
    EchelonBasis e = EchelonBasis::from_matrix(basis);
    for (std::size_t i = 0; i < e.dim(); ++i)
        for (auto& a : m.action())
            if (!e.contains(a.apply(e.row(i)))) return false;
    return true;
}

GModule submodule(const GModule& m, const EchelonBasis& sub) {
    std::vector<BitMatrix> mats;
    for (auto& a : m.action()) {
        BitMatrix r(sub.dim(), sub.dim());
        for (std::size_t i = 0; i < sub.dim(); ++i) r.set_row(i, sub.coordinates(a.apply(sub.row(i))));
        mats.push_back(std::move(r));
    }
    return GModule(m.group_ptr(), sub.dim(), std::move(mats), std::nullopt, false);
}

BitVec project_to_quotient(const EchelonBasis& sub, BitVec v) {
    sub.reduce(v);
    auto cols = sub.non_pivots();
    BitVec out(words_for(cols.size()), 0);
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (bits::get(v, cols[k])) bits::set(out, k);
    return out;
}

BitVec lift_from_quotient(const EchelonBasis& sub, const BitVec& c) {
    auto cols = sub.non_pivots();
    BitVec v(words_for(sub.cols()), 0);
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (bits::get(c, k)) bits::set(v, cols[k]);
    return v;
}

GModule quotient(const GModule& m, const EchelonBasis& sub) {
    auto cols = sub.non_pivots();
    std::vector<BitMatrix> mats;
    for (auto& a : m.action()) {
        BitMatrix r(cols.size(), cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            BitVec v = a.row_vec(cols[k]);
            sub.reduce(v);
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (bits::get(v, cols[j])) r.set(k, j);
        }
        mats.push_back(std::move(r));
    }
    return GModule(m.group_ptr(), m.dim() - sub.dim(), std::move(mats), std::nullopt, false);
}

GModule dual(const GModule& m) {
    std::vector<BitMatrix> mats;
    for (auto& a : m.action()) mats.push_back(inverse(a).transpose());
    return GModule(m.group_ptr(), m.dim(), std::move(mats), std::nullopt, false);
}

GModule direct_sum(const GModule& a, const GModule& b) {
    if (a.group_ptr() != b.group_ptr() && a.generator_count() != b.generator_count())
        throw ModuleError("direct_sum: modules over different generator lists");
    std::vector<BitMatrix> mats;
    const std::size_t n = a.dim() + b.dim();
    for (std::size_t s = 0; s < a.generator_count(); ++s) {
        BitMatrix r(n, n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                if (a.gen(s).get(i, j)) r.set(i, j);
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                if (b.gen(s).get(i, j)) r.set(a.dim() + i, a.dim() + j);
        mats.push_back(std::move(r));
    }
    return GModule(a.group_ptr(), n, std::move(mats), std::nullopt, false);
}

GModule restrict_module(const GModule& m, std::shared_ptr<const PermGroup> h, const ElementTable& g_table,
                        const WordMap& g_words) {
    std::vector<BitMatrix> mats;
    for (auto& x : h->generators()) mats.push_back(m.act_word(g_words.word(g_table.index_of(x))));
    std::optional<PermBasis> pb;
    if (m.has_perm_basis()) {
        std::vector<Permutation> imgs;
        const PermGroup& act = m.perm_basis().action;
        for (auto& x : h->generators()) {
            Permutation p = act.identity();
            for (auto s : g_words.word(g_table.index_of(x))) p = p * act.generators()[s];
            imgs.push_back(p);
        }
        pb = PermBasis{PermGroup(act.degree(), imgs)};
    }
    return GModule(std::move(h), m.dim(), std::move(mats), std::move(pb), false);
}

bool verify_relations(const GModule& m, const ElementTable& t, const WordMap& words, std::mt19937_64& rng,
                      std::size_t budget) {
    std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
    for (std::size_t k = 0; k < budget; ++k) {
        std::size_t a = pick(rng), b = pick(rng);
        BitMatrix lhs = mat_mul(m.act_word(words.word(a)), m.act_word(words.word(b)));
        if (!(lhs == m.act_word(words.word(t.product(a, b))))) return false;
    }
    return true;
}

BitMatrix fixed_space(const GModule& m) {
    if (m.generator_count() == 0) return BitMatrix::identity(m.dim());
    BitMatrix big(m.dim(), 0);
    for (auto& a : m.action()) big = hstack(big, a + BitMatrix::identity(m.dim()));
    return nullspace(big);
}

}  // namespace wreath
