#include "wreath/groups/perm_group.hpp"

#include <algorithm>

namespace wreath {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, const std::vector<Point>& base_prefix,
                     std::uint64_t seed)
    : degree_(degree), gens_(std::move(generators)) {
    if (degree > kMaxDegree) throw PermutationError("degree " + std::to_string(degree) + " too large");
    for (auto& g : gens_)
        if (g.degree() != degree) throw PermutationError("generator of degree " + std::to_string(g.degree()) + " in a group of degree " + std::to_string(degree));
    for (Point b : base_prefix) {
        if (b >= degree) throw PermutationError("base point out of range");
        add_level(b);
    }
    for (auto& g : gens_)
        if (!g.is_identity()) {
            auto [res, lvl] = sift(g, 0);
            if (!res.is_identity()) insert_strong(res, lvl);
        }

    // randomized phase: sift product-replacement elements until a run of successes.
    if (!strong_.empty()) {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        std::vector<Permutation> state;
        while (state.size() < std::max<std::size_t>(8, gens_.size())) state.push_back(gens_[state.size() % gens_.size()]);
        Permutation acc(degree);
        auto step = [&]() {
            std::size_t i = rng() % state.size(), j = rng() % (state.size() - 1);
            if (j >= i) ++j;
            state[i] = (rng() & 1U) ? state[i] * state[j] : state[i] * state[j].inverse();
            acc = acc * state[i];
            return acc;
        };
        for (int k = 0; k < 40; ++k) step();
        int successes = 0;
        for (int iter = 0; iter < 2000 && successes < 24; ++iter) {
            auto [res, lvl] = sift(step(), 0);
            if (res.is_identity()) {
                ++successes;
            } else {
                successes = 0;
                insert_strong(res, lvl);
            }
        }
    }

    // deterministic verification: every Schreier generator must sift to the identity.
    for (std::size_t i = levels_.size(); i-- > 0;) {
        std::size_t restart = 0;
        if (!verify_level(i, restart)) i = restart + 1;
    }
    order_ = 1;
    for (auto& l : levels_) order_ *= l.orbit.size();
}

void PermGroup::add_level(Point base) {
    Level l;
    l.base = base;
    l.pos.assign(degree_, -1);
    l.pos[base] = 0;
    l.orbit.push_back(base);
    l.u.emplace_back(degree_);
    l.uinv.emplace_back(degree_);
    levels_.push_back(std::move(l));
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation h, std::size_t from) const {
    for (std::size_t k = from; k < levels_.size(); ++k) {
        const Level& l = levels_[k];
        std::int32_t p = l.pos[h[l.base]];
        if (p < 0) return {std::move(h), k};
        if (p != 0) h = h * l.uinv[static_cast<std::size_t>(p)];
    }
    return {std::move(h), levels_.size()};
}

std::size_t PermGroup::insert_strong(const Permutation& g, std::size_t level) {
    std::size_t j = level;
    while (j < levels_.size() && g[levels_[j].base] == levels_[j].base) ++j;
    if (j == levels_.size()) add_level(static_cast<Point>(g.first_moved()));
    strong_.push_back(g);
    // g fixes every earlier base point, so it belongs to each S_k with k <= j.
    for (std::size_t k = 0; k <= j; ++k) {
        levels_[k].strong.push_back(strong_.size() - 1);
        rebuild_orbit(k);
    }
    return j;
}

void PermGroup::rebuild_orbit(std::size_t level) {
    Level& l = levels_[level];
    for (std::size_t i = 0; i < l.orbit.size(); ++i) {
        for (std::size_t s : l.strong) {
            const Permutation& g = strong_[s];
            Point img = g[l.orbit[i]];
            if (l.pos[img] >= 0) continue;
            l.pos[img] = static_cast<std::int32_t>(l.orbit.size());
            l.orbit.push_back(img);
            l.u.push_back(l.u[i] * g);
            l.uinv.push_back(l.u.back().inverse());
        }
    }
}

bool PermGroup::verify_level(std::size_t level, std::size_t& restart) {
    Level* l = &levels_[level];
    for (std::size_t i = 0; i < l->orbit.size(); ++i) {
        for (std::size_t si = 0; si < l->strong.size(); ++si) {
            const Permutation& s = strong_[l->strong[si]];
            Permutation us = l->u[i] * s;
            std::size_t t = static_cast<std::size_t>(l->pos[us[l->base]]);
            if (us == l->u[t]) continue;
            auto [res, lvl] = sift(us * l->uinv[t], level + 1);
            if (res.is_identity()) continue;
            restart = insert_strong(res, lvl);
            return false;
        }
    }
    return true;
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    return sift(g, 0).first.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
    if (g.degree() != degree_) return false;
    return std::all_of(gens_.begin(), gens_.end(), [&](const Permutation& x) { return g.contains(x); });
}

std::vector<Point> PermGroup::base() const {
    std::vector<Point> b;
    for (auto& l : levels_) b.push_back(l.base);
    return b;
}

std::vector<Permutation> PermGroup::strong_generators(std::size_t level) const {
    std::vector<Permutation> out;
    for (auto s : levels_[level].strong) out.push_back(strong_[s]);
    return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
    Permutation g(degree_);
    for (std::size_t k = levels_.size(); k-- > 0;) g = g * levels_[k].u[rng() % levels_[k].u.size()];
    return g;
}

PermGroup PermGroup::stabilizer(Point p) const {
    PermGroup full(degree_, gens_, {p});
    std::vector<Permutation> gens;
    if (full.levels_.size() > 1) gens = full.strong_generators(1);
    return PermGroup(degree_, std::move(gens));
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
    std::vector<bool> seen(degree_, false);
    std::vector<std::vector<Point>> out;
    for (std::size_t x = 0; x < degree_; ++x) {
        if (seen[x]) continue;
        std::vector<Point> orb{static_cast<Point>(x)};
        seen[x] = true;
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (auto& g : gens_) {
                Point y = g[orb[i]];
                if (!seen[y]) {
                    seen[y] = true;
                    orb.push_back(y);
                }
            }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

}  // namespace wreath
