#include "wreath/groups/classes.hpp"

#include <algorithm>
#include <numeric>

#include "wreath/kernel/field.hpp"

namespace wreath {

namespace {
constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);

bool is_two_power(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<std::size_t> generator_indices(const ElementTable& t) {
    std::vector<std::size_t> out;
    for (auto& g : t.group().generators()) out.push_back(t.index_of(g));
    return out;
}
}  // namespace

std::size_t ClassData::power_class(std::size_t cls, std::int64_t e) const {
    std::int64_t o = static_cast<std::int64_t>(element_orders[cls]);
    std::int64_t r = ((e % o) + o) % o;
    return power_table[cls][static_cast<std::size_t>(r)];
}

ClassData conjugacy_classes(const ElementTable& t) {
    ClassData cd;
    cd.group_order = t.size();
    cd.element_to_class.assign(t.size(), kUnset);
    std::vector<Permutation> gens = t.group().generators();
    std::vector<Permutation> inv;
    for (auto& g : gens) inv.push_back(g.inverse());
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (cd.element_to_class[i] != kUnset) continue;
        auto cls = static_cast<std::uint32_t>(cd.representatives.size());
        cd.representatives.push_back(t.element(i));
        cd.rep_index.push_back(static_cast<std::uint32_t>(i));
        queue.assign(1, i);
        cd.element_to_class[i] = cls;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            for (std::size_t s = 0; s < gens.size(); ++s) {
                std::size_t z = t.conjugate(queue[q], gens[s].images(), inv[s].images());
                if (cd.element_to_class[z] == kUnset) {
                    cd.element_to_class[z] = cls;
                    queue.push_back(z);
                }
            }
        }
        cd.sizes.push_back(queue.size());
    }
    for (std::size_t c = 0; c < cd.count(); ++c) {
        std::uint64_t o = t.element_order(cd.rep_index[c]);
        cd.element_orders.push_back(o);
        cd.exponent = std::lcm(cd.exponent, o);
        std::vector<std::size_t> row(o);
        std::size_t x = 0;
        for (std::uint64_t j = 0; j < o; ++j) {
            row[j] = cd.element_to_class[x];
            x = t.product(x, cd.rep_index[c]);
        }
        cd.power_table.push_back(std::move(row));
    }
    for (auto r : prime_factors(cd.exponent)) {
        std::vector<std::size_t> pm(cd.count());
        for (std::size_t c = 0; c < cd.count(); ++c) pm[c] = cd.power_class(c, static_cast<std::int64_t>(r));
        cd.power_maps[r] = std::move(pm);
    }
    for (std::size_t c = 0; c < cd.count(); ++c) cd.inverse_class.push_back(cd.power_class(c, -1));
    return cd;
}

PermGroup subgroup_from_elements(std::size_t degree, const std::vector<Permutation>& elements) {
    std::vector<Permutation> gens;
    PermGroup h(degree, {});
    for (auto& x : elements) {
        if (h.contains(x)) continue;
        gens.push_back(x);
        h = PermGroup(degree, gens);
    }
    return h;
}

PermGroup centralizer(const ElementTable& t, const Permutation& x) {
    std::size_t xi = t.index_of(x);
    std::vector<Permutation> elems;
    for (std::size_t y = 0; y < t.size(); ++y)
        if (t.product(xi, y) == t.product(y, xi)) elems.push_back(t.element(y));
    return subgroup_from_elements(t.degree(), elems);
}

std::optional<Permutation> is_conjugate(const ElementTable& t, const Permutation& x, const Permutation& y) {
    std::size_t xi = t.index_of(x), yi = t.index_of(y);
    if (xi == yi) return t.group().identity();
    if (x.order() != y.order()) return std::nullopt;
    std::vector<Permutation> gens = t.group().generators();
    std::vector<Permutation> inv;
    for (auto& g : gens) inv.push_back(g.inverse());
    // BFS over the conjugation orbit of x, remembering how each point was reached.
    std::unordered_map<std::size_t, std::pair<std::size_t, std::size_t>> parent;
    parent[xi] = {xi, 0};
    std::vector<std::size_t> queue{xi};
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
            std::size_t z = t.conjugate(queue[q], gens[s].images(), inv[s].images());
            if (parent.count(z)) continue;
            parent[z] = {queue[q], s};
            if (z == yi) {
                Permutation c = t.group().identity();
                for (std::size_t cur = yi; cur != xi; cur = parent[cur].first) c = gens[parent[cur].second] * c;
                return c;
            }
            queue.push_back(z);
        }
    }
    return std::nullopt;
}

PermGroup sylow_2(const ElementTable& t) {
    std::uint64_t target = 1;
    while (t.size() % (target * 2) == 0) target *= 2;
    const std::size_t d = t.degree();
    if (target == 1) return PermGroup(d, {});
    std::vector<std::uint64_t> orders(t.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        orders[i] = t.element_order(i);
        if (is_two_power(orders[i]) && orders[i] > orders[best]) best = i;
    }
    std::vector<Permutation> gens{t.element(best)};
    PermGroup h(d, gens);
    while (h.order() < target) {
        bool grew = false;
        for (std::size_t i = 0; i < t.size() && !grew; ++i) {
            if (!is_two_power(orders[i])) continue;
            Permutation y = t.element(i);
            if (h.contains(y)) continue;
            Permutation yi = y.inverse();
            bool normalizes = std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) { return h.contains(yi * g * y); });
            if (!normalizes) continue;
            gens.push_back(y);
            h = PermGroup(d, gens);
            grew = true;
        }
        if (!grew) throw std::logic_error("sylow_2: no extending element found");
    }
    return h;
}

PermGroup center(const ElementTable& t) {
    auto gi = generator_indices(t);
    std::vector<Permutation> elems;
    for (std::size_t y = 0; y < t.size(); ++y) {
        bool central = std::all_of(gi.begin(), gi.end(), [&](std::size_t g) { return t.product(g, y) == t.product(y, g); });
        if (central) elems.push_back(t.element(y));
    }
    return subgroup_from_elements(t.degree(), elems);
}

PermGroup odd_order_core(const ElementTable& t) {
    std::vector<Permutation> elems;
    for (std::size_t y = 0; y < t.size(); ++y)
        if (t.element_order(y) % 2 == 1) elems.push_back(t.element(y));
    return subgroup_from_elements(t.degree(), elems);
}

CosetAction coset_action(const ElementTable& g, const PermGroup& h) {
    if (!h.is_subgroup_of(g.group())) throw PermutationError("coset_action: h is not a subgroup of g");
    ElementTable ht(h);
    std::vector<std::size_t> hidx(ht.size());
    for (std::size_t i = 0; i < ht.size(); ++i) hidx[i] = *g.find(ht.images(i));
    std::vector<std::uint32_t> coset_of(g.size(), kUnset);
    std::vector<std::size_t> reps;
    for (std::size_t y = 0; y < g.size(); ++y) {
        if (coset_of[y] != kUnset) continue;
        auto c = static_cast<std::uint32_t>(reps.size());
        reps.push_back(y);
        for (auto hi : hidx) coset_of[g.product(hi, y)] = c;
    }
    const std::size_t n = reps.size();
    if (n > kMaxDegree) throw PermutationError("coset_action: index too large");
    std::vector<Permutation> gens;
    for (auto& s : g.group().generators()) {
        std::size_t si = g.index_of(s);
        std::vector<Point> img(n);
        for (std::size_t c = 0; c < n; ++c) img[c] = static_cast<Point>(coset_of[g.product(reps[c], si)]);
        gens.emplace_back(std::move(img));
    }
    CosetAction out{PermGroup(n, gens), {}};
    for (auto r : reps) out.coset_reps.push_back(g.element(r));
    return out;
}

WordMap::WordMap(const ElementTable& t) : parent_(t.size(), kUnset), gen_(t.size(), 0) {
    auto gi = generator_indices(t);
    if (gi.size() > 255) throw std::invalid_argument("WordMap: too many generators");
    std::vector<std::size_t> queue{0};
    parent_[0] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (std::size_t s = 0; s < gi.size(); ++s) {
            std::size_t z = t.product(queue[q], gi[s]);
            if (parent_[z] != kUnset) continue;
            parent_[z] = static_cast<std::uint32_t>(queue[q]);
            gen_[z] = static_cast<std::uint8_t>(s);
            queue.push_back(z);
        }
}

std::vector<std::uint8_t> WordMap::word(std::size_t i) const {
    std::vector<std::uint8_t> w;
    for (std::size_t cur = i; cur != 0; cur = parent_[cur]) w.push_back(gen_[cur]);
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace wreath
