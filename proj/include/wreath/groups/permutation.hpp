#pragma once

#include <cstdint>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

class PermutationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bijection of {0,...,degree-1}. Products act on the right:
/// x^(ab) = (x^a)^b, so (a * b)[x] = b[a[x]].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t degree);
    explicit Permutation(std::vector<Point> images);
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

    std::size_t degree() const { return img_.size(); }
    Point operator[](std::size_t i) const { return img_[i]; }
    const std::vector<Point>& images() const { return img_; }

    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    Permutation pow(std::int64_t e) const;
    /// this^-1 * x * this
    Permutation conjugate_by(const Permutation& g) const;
    bool is_identity() const;
    std::uint64_t order() const;
    /// Smallest moved point, or degree() when the identity.
    std::size_t first_moved() const;

    auto operator<=>(const Permutation& o) const = default;
    bool operator==(const Permutation& o) const = default;

    std::string to_cycle_string() const;

private:
    std::vector<Point> img_;
};

/// Composition into a caller-owned buffer: out[x] = b[a[x]].
void compose_into(std::span<const Point> a, std::span<const Point> b, std::span<Point> out);

}  // namespace wreath
