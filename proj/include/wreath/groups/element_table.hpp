#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "wreath/groups/perm_group.hpp"

namespace wreath {

inline constexpr std::uint64_t kDefaultEnumerationBound = 1'000'000;

class EnumerationBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every element of a permutation group, sorted lexicographically by image
/// array (so index 0 is the identity), with constant-time index lookup by
/// the images of the base points.
class ElementTable {
public:
    explicit ElementTable(const PermGroup& g, std::uint64_t bound = kDefaultEnumerationBound);

    const PermGroup& group() const { return group_; }
    std::size_t size() const { return count_; }
    std::size_t degree() const { return degree_; }

    std::span<const Point> images(std::size_t i) const { return {data_.data() + i * degree_, degree_}; }
    Permutation element(std::size_t i) const;

    std::optional<std::size_t> find(std::span<const Point> images) const;
    std::size_t index_of(const Permutation& g) const;
    std::size_t product(std::size_t a, std::size_t b) const;
    /// Index of x^-1 * y * x given precomputed inverse images of x.
    std::size_t conjugate(std::size_t y, std::span<const Point> x, std::span<const Point> x_inv) const;
    std::size_t inverse(std::size_t a) const;
    std::uint64_t element_order(std::size_t a) const;

private:
    std::uint64_t key_of_base_images(const Point* base_images) const;
    std::size_t lookup(const Point* base_images) const;

    PermGroup group_;
    std::size_t degree_ = 0;
    std::size_t count_ = 0;
    std::vector<Point> base_;
    std::vector<Point> data_;
    unsigned bits_ = 0;
    bool packed_ = true;
    std::unordered_map<std::uint64_t, std::uint32_t> packed_index_;
    std::unordered_map<std::string, std::uint32_t> string_index_;
};

}  // namespace wreath
