#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wreath/groups/permutation.hpp"

namespace wreath {

/// Permutation group with a verified stabilizer chain.
///
/// The chain is built by a randomized Schreier-Sims phase followed by a
/// deterministic pass that sifts every Schreier generator, so order and
/// membership are exact.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(std::size_t degree, std::vector<Permutation> generators, const std::vector<Point>& base_prefix = {},
              std::uint64_t seed = 0);

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    std::uint64_t order() const { return order_; }
    bool contains(const Permutation& g) const;
    bool is_trivial() const { return order_ == 1; }
    bool is_subgroup_of(const PermGroup& g) const;

    std::size_t chain_length() const { return levels_.size(); }
    std::vector<Point> base() const;
    const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
    /// Element mapping the base point of `level` to orbit(level)[index].
    const Permutation& transversal(std::size_t level, std::size_t index) const { return levels_[level].u[index]; }
    std::vector<Permutation> strong_generators(std::size_t level) const;

    Permutation identity() const { return Permutation(degree_); }
    Permutation random_element(std::mt19937_64& rng) const;

    /// Pointwise stabilizer of a point, with its own verified chain.
    PermGroup stabilizer(Point p) const;
    /// Orbits of the generators on points, each sorted, ordered by least point.
    std::vector<std::vector<Point>> orbits() const;

private:
    struct Level {
        Point base = 0;
        std::vector<std::size_t> strong;
        std::vector<std::int32_t> pos;
        std::vector<Point> orbit;
        std::vector<Permutation> u;
        std::vector<Permutation> uinv;
    };

    std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const;
    void add_level(Point base);
    std::size_t insert_strong(const Permutation& g, std::size_t level);
    void rebuild_orbit(std::size_t level);
    bool verify_level(std::size_t level, std::size_t& restart);

    std::size_t degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Permutation> strong_;
    std::vector<Level> levels_;
    std::uint64_t order_ = 1;
};

}  // namespace wreath
