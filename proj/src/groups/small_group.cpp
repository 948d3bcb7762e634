#include "wreath/groups/small_group.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wreath/groups/classes.hpp"

namespace wreath {

namespace {

PermGroup checked(const PermGroup& g) {
    if (g.order() > kSmallGroupBound)
        throw EnumerationBoundError("group of order " + std::to_string(g.order()) + " exceeds the small-group bound 512");
    return g;
}

// Homomorphism test against a concrete source group: assigns images along a
// spanning tree of the Cayley graph and checks every remaining edge.
class HomSearch {
public:
    explicit HomSearch(const SmallGroup& src) : src_(src) {
        const std::size_t n = src.order();
        parent_.assign(n, static_cast<std::size_t>(-1));
        via_.assign(n, 0);
        parent_[0] = 0;
        bfs_.push_back(0);
        auto& gi = src.generator_indices();
        for (std::size_t q = 0; q < bfs_.size(); ++q)
            for (std::size_t s = 0; s < gi.size(); ++s) {
                std::size_t z = src.mul(bfs_[q], gi[s]);
                if (parent_[z] != static_cast<std::size_t>(-1)) continue;
                parent_[z] = bfs_[q];
                via_[z] = s;
                bfs_.push_back(z);
            }
    }

    // images[s] is the target of source generator s; returns the element map on success.
    std::optional<std::vector<std::size_t>> extend(const SmallGroup& dst, const std::vector<std::size_t>& images) const {
        const std::size_t n = src_.order();
        std::vector<std::size_t> phi(n, 0);
        for (std::size_t k = 1; k < bfs_.size(); ++k) {
            std::size_t x = bfs_[k];
            phi[x] = dst.mul(phi[parent_[x]], images[via_[x]]);
        }
        auto& gi = src_.generator_indices();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t s = 0; s < gi.size(); ++s)
                if (phi[src_.mul(x, gi[s])] != dst.mul(phi[x], images[s])) return std::nullopt;
        return phi;
    }

private:
    const SmallGroup& src_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> via_;
    std::vector<std::size_t> bfs_;
};

bool injective(const std::vector<std::size_t>& phi, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (auto v : phi) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// Calls f on each tuple of target elements whose orders match the source generators.
void for_each_image_tuple(const SmallGroup& src, const SmallGroup& dst,
                          const std::function<bool(const std::vector<std::size_t>&)>& f) {
    auto& gi = src.generator_indices();
    std::vector<std::vector<std::size_t>> cands(gi.size());
    for (std::size_t s = 0; s < gi.size(); ++s)
        for (std::size_t y = 0; y < dst.order(); ++y)
            if (dst.element_order(y) == src.element_order(gi[s])) cands[s].push_back(y);
    std::vector<std::size_t> tuple(gi.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t s) -> bool {
        if (s == gi.size()) return f(tuple);
        for (auto y : cands[s]) {
            tuple[s] = y;
            if (!rec(s + 1)) return false;
        }
        return true;
    };
    rec(0);
}

PermGroup regular_from_table(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                             const std::vector<std::size_t>& gens) {
    std::vector<Permutation> perms;
    for (auto g : gens) {
        std::vector<Point> img(n);
        for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Point>(mul(x, g));
        perms.emplace_back(std::move(img));
    }
    return PermGroup(n, perms);
}

}  // namespace

SmallGroup::SmallGroup(const PermGroup& g) : table_(checked(g)), n_(table_.size()) {
    mul_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) mul_[a * n_ + b] = static_cast<std::uint16_t>(table_.product(a, b));
    inv_.resize(n_);
    orders_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b)
            if (mul_[a * n_ + b] == 0) inv_[a] = static_cast<std::uint16_t>(b);
        orders_[a] = table_.element_order(a);
    }
    for (auto& x : g.generators()) gens_.push_back(table_.index_of(x));
}

SmallGroup::Subset SmallGroup::closure(const std::vector<std::size_t>& gens) const {
    Subset s = empty_subset();
    std::vector<std::size_t> list{0};
    bits::set(s, 0);
    for (std::size_t q = 0; q < list.size(); ++q)
        for (auto g : gens) {
            std::size_t z = mul(list[q], g);
            if (bits::get(s, z)) continue;
            bits::set(s, z);
            list.push_back(z);
        }
    return s;
}

SmallGroup::Subset SmallGroup::conjugate(const Subset& s, std::size_t g) const {
    Subset out = empty_subset();
    std::size_t gi = inv(g);
    for (auto x : members(s)) bits::set(out, mul(mul(gi, x), g));
    return out;
}

SmallGroup::Subset SmallGroup::from_group(const PermGroup& h) const {
    std::vector<std::size_t> gens;
    for (auto& x : h.generators()) gens.push_back(index_of(x));
    return closure(gens);
}

std::vector<std::size_t> SmallGroup::members(const Subset& s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (bits::get(s, i)) out.push_back(i);
    return out;
}

PermGroup SmallGroup::to_group(const Subset& s) const {
    std::vector<Permutation> elems;
    for (auto i : members(s)) elems.push_back(element(i));
    return subgroup_from_elements(table_.degree(), elems);
}

SmallGroup::Subset SmallGroup::center() const {
    Subset out = empty_subset();
    for (std::size_t x = 0; x < n_; ++x)
        if (std::all_of(gens_.begin(), gens_.end(), [&](std::size_t g) { return commute(x, g); })) bits::set(out, x);
    return out;
}

std::string GroupModel::name() const {
    switch (kind) {
        case Kind::Wreathed: return "C" + std::to_string(1U << a) + " wr C2";
        case Kind::Dihedral: return "D" + std::to_string(a);
        case Kind::Cyclic: return "C" + std::to_string(a);
        case Kind::ElementaryAbelian: return "C2^" + std::to_string(a);
        case Kind::DirectCyclic: return "C" + std::to_string(a) + " x C" + std::to_string(b);
        case Kind::SemidirectCyclic: return "C" + std::to_string(a) + " : C" + std::to_string(b) + " (r=" + std::to_string(r) + ")";
    }
    return "?";
}

std::uint64_t GroupModel::order() const {
    switch (kind) {
        case Kind::Wreathed: return std::uint64_t{1} << (2 * a + 1);
        case Kind::Dihedral:
        case Kind::Cyclic: return a;
        case Kind::ElementaryAbelian: return std::uint64_t{1} << a;
        case Kind::DirectCyclic:
        case Kind::SemidirectCyclic: return std::uint64_t{a} * b;
    }
    return 0;
}

PermGroup wreath_cyclic_c2(unsigned n) {
    const std::size_t m = std::size_t{1} << n;
    std::vector<Point> x(2 * m), t(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = static_cast<Point>((i + 1) % m);
        x[m + i] = static_cast<Point>(m + i);
        t[i] = static_cast<Point>(m + i);
        t[m + i] = static_cast<Point>(i);
    }
    return PermGroup(2 * m, {Permutation(x), Permutation(t)});
}

PermGroup GroupModel::build() const {
    switch (kind) {
        case Kind::Wreathed: return wreath_cyclic_c2(a);
        case Kind::Dihedral: {
            unsigned m = a / 2;
            std::vector<Point> rot(m), ref(m);
            for (unsigned i = 0; i < m; ++i) {
                rot[i] = static_cast<Point>((i + 1) % m);
                ref[i] = static_cast<Point>((m - i) % m);
            }
            if (m <= 2) {  // D4 = C2 x C2 needs a faithful action: use the regular one
                return regular_from_table(
                    4, [](std::size_t x, std::size_t y) { return x ^ y; }, {1, 2});
            }
            return PermGroup(m, {Permutation(rot), Permutation(ref)});
        }
        case Kind::Cyclic: {
            std::vector<Point> c(a);
            for (unsigned i = 0; i < a; ++i) c[i] = static_cast<Point>((i + 1) % a);
            return PermGroup(a, {Permutation(c)});
        }
        case Kind::ElementaryAbelian: {
            std::size_t n = std::size_t{1} << a;
            std::vector<std::size_t> gens;
            for (unsigned i = 0; i < a; ++i) gens.push_back(std::size_t{1} << i);
            return regular_from_table(n, [](std::size_t x, std::size_t y) { return x ^ y; }, gens);
        }
        case Kind::DirectCyclic: {
            unsigned m = a, n = b;
            return regular_from_table(
                std::size_t{m} * n,
                [m, n](std::size_t x, std::size_t y) { return ((x % m + y % m) % m) + m * ((x / m + y / m) % n); },
                {1, m});
        }
        case Kind::SemidirectCyclic: {
            unsigned m = a, n = b, rr = r;
            // (u, v)(u', v') = (u + r^v u', v + v')
            auto mul = [m, n, rr](std::size_t x, std::size_t y) {
                std::size_t u = x % m, v = x / m, u2 = y % m, v2 = y / m;
                std::size_t rp = 1;
                for (std::size_t i = 0; i < v; ++i) rp = rp * rr % m;
                return ((u + rp * u2) % m) + m * ((v + v2) % n);
            };
            return regular_from_table(std::size_t{m} * n, mul, {1, m});
        }
    }
    throw std::logic_error("unknown model");
}

std::optional<std::vector<Permutation>> iso_to_model(const PermGroup& p, const GroupModel& model) {
    if (p.order() != model.order()) return std::nullopt;
    SmallGroup dst(p);
    PermGroup mg = model.build();
    SmallGroup src(mg);
    HomSearch search(src);
    std::optional<std::vector<Permutation>> found;
    for_each_image_tuple(src, dst, [&](const std::vector<std::size_t>& imgs) {
        auto phi = search.extend(dst, imgs);
        if (phi && injective(*phi, dst.order())) {
            std::vector<Permutation> out;
            for (auto y : imgs) out.push_back(dst.element(y));
            found = out;
            return false;
        }
        return true;
    });
    return found;
}

unsigned two_rank(const PermGroup& p) {
    SmallGroup g(p);
    if ((g.order() & (g.order() - 1)) != 0) throw std::invalid_argument("two_rank: not a 2-group");
    std::vector<std::size_t> invols;
    for (std::size_t x = 1; x < g.order(); ++x)
        if (g.element_order(x) == 2) invols.push_back(x);
    unsigned best = 0;
    std::function<void(std::size_t, std::vector<std::size_t>&, SmallGroup::Subset&)> dfs =
        [&](std::size_t start, std::vector<std::size_t>& chosen, SmallGroup::Subset& span) {
            best = std::max(best, static_cast<unsigned>(chosen.size()));
            for (std::size_t k = start; k < invols.size(); ++k) {
                std::size_t y = invols[k];
                if (bits::get(span, y)) continue;
                bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return g.commute(c, y); });
                if (!ok) continue;
                chosen.push_back(y);
                auto next = g.closure(chosen);
                dfs(k + 1, chosen, next);
                chosen.pop_back();
            }
        };
    std::vector<std::size_t> chosen;
    auto span = g.closure({});
    dfs(0, chosen, span);
    return best;
}

std::uint64_t automorphism_order(const PermGroup& p) {
    SmallGroup g0(p);
    // find the first generating pair in table order
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t a = 0; a < g0.order() && !pair; ++a)
        for (std::size_t b = a; b < g0.order() && !pair; ++b) {
            auto s = g0.closure({a, b});
            if (bits::popcount(s) == g0.order()) pair = {a, b};
        }
    if (!pair) throw std::invalid_argument("automorphism_order: group is not 2-generated");
    PermGroup two_gen(p.degree(), {g0.element(pair->first), g0.element(pair->second)});
    SmallGroup src(two_gen);
    SmallGroup dst(p);
    HomSearch search(src);
    std::uint64_t count = 0;
    for_each_image_tuple(src, dst, [&](const std::vector<std::size_t>& imgs) {
        auto phi = search.extend(dst, imgs);
        if (phi && injective(*phi, dst.order())) ++count;
        return true;
    });
    return count;
}

std::vector<PermGroup> subgroups_up_to_conjugacy(const PermGroup& p) {
    if (p.order() > 128) throw EnumerationBoundError("subgroups_up_to_conjugacy: order above 128");
    SmallGroup g(p);
    struct Entry {
        SmallGroup::Subset set;
        std::vector<std::size_t> gens;
    };
    std::set<SmallGroup::Subset> seen;
    std::vector<Entry> all;
    auto trivial = g.closure({});
    seen.insert(trivial);
    all.push_back({trivial, {}});
    for (std::size_t q = 0; q < all.size(); ++q) {
        std::set<SmallGroup::Subset> cyclic_done;
        for (std::size_t x = 1; x < g.order(); ++x) {
            if (bits::get(all[q].set, x)) continue;
            auto cyc = g.closure({x});
            if (!cyclic_done.insert(cyc).second) continue;
            auto gens = all[q].gens;
            gens.push_back(x);
            auto k = g.closure(gens);
            if (seen.insert(k).second) all.push_back({k, gens});
        }
    }
    // canonical representative per conjugacy class: least conjugate bitset
    std::set<std::pair<std::size_t, SmallGroup::Subset>> classes;
    for (auto& e : all) {
        SmallGroup::Subset best = e.set;
        for (std::size_t h = 1; h < g.order(); ++h) best = std::min(best, g.conjugate(e.set, h));
        classes.insert({bits::popcount(best), best});
    }
    std::vector<PermGroup> out;
    for (auto& [sz, s] : classes) out.push_back(g.to_group(s));
    return out;
}

PermGroup quotient_group(const PermGroup& p, const PermGroup& n) {
    ElementTable t(p);
    return coset_action(t, n).action;
}

bool is_abelian(const PermGroup& g) {
    auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    return true;
}

bool is_cyclic(const PermGroup& g) {
    if (!is_abelian(g)) return false;
    if (g.order() == 1) return true;
    if (g.order() <= kSmallGroupBound) {
        SmallGroup s(g);
        for (std::size_t x = 0; x < s.order(); ++x)
            if (s.element_order(x) == s.order()) return true;
        return false;
    }
    ElementTable t(g);
    for (std::size_t x = 0; x < t.size(); ++x)
        if (t.element_order(x) == t.size()) return true;
    return false;
}

}  // namespace wreath
