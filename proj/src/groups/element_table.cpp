#include "wreath/groups/element_table.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace wreath {

ElementTable::ElementTable(const PermGroup& g, std::uint64_t bound) : group_(g), degree_(g.degree()) {
    if (g.order() > bound)
        throw EnumerationBoundError("group of order " + std::to_string(g.order()) + " exceeds the enumeration bound " +
                                    std::to_string(bound));
    count_ = static_cast<std::size_t>(g.order());
    base_ = g.base();

    // x = t_{k-1} ... t_1 t_0 over all transversal choices.
    std::vector<Point> cur(degree_);
    std::iota(cur.begin(), cur.end(), Point{0});
    std::size_t have = 1;
    for (std::size_t lvl = g.chain_length(); lvl-- > 0;) {
        std::size_t n = g.orbit(lvl).size();
        std::vector<Point> next(have * n * degree_);
        for (std::size_t e = 0; e < have; ++e)
            for (std::size_t t = 0; t < n; ++t)
                compose_into({cur.data() + e * degree_, degree_}, g.transversal(lvl, t).images(),
                             {next.data() + (e * n + t) * degree_, degree_});
        cur.swap(next);
        have *= n;
    }

    std::vector<std::uint32_t> order(count_);
    std::iota(order.begin(), order.end(), 0U);
    const Point* raw = cur.data();
    const std::size_t d = degree_;
    std::sort(order.begin(), order.end(), [raw, d](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(raw + a * d, raw + (a + 1) * d, raw + b * d, raw + (b + 1) * d);
    });
    data_.resize(count_ * degree_);
    for (std::size_t i = 0; i < count_; ++i)
        std::copy(raw + order[i] * d, raw + (order[i] + 1) * d, data_.begin() + static_cast<std::ptrdiff_t>(i * d));

    bits_ = std::max(1U, static_cast<unsigned>(std::bit_width(static_cast<unsigned>(std::max<std::size_t>(degree_, 2) - 1))));
    packed_ = base_.size() * bits_ <= 64;
    std::vector<Point> bi(base_.size());
    if (packed_) packed_index_.reserve(count_ * 2);
    else string_index_.reserve(count_ * 2);
    for (std::size_t i = 0; i < count_; ++i) {
        for (std::size_t k = 0; k < base_.size(); ++k) bi[k] = data_[i * degree_ + base_[k]];
        if (packed_) packed_index_.emplace(key_of_base_images(bi.data()), static_cast<std::uint32_t>(i));
        else string_index_.emplace(std::string(reinterpret_cast<const char*>(bi.data()), bi.size() * sizeof(Point)),
                                   static_cast<std::uint32_t>(i));
    }
}

std::uint64_t ElementTable::key_of_base_images(const Point* b) const {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < base_.size(); ++k) key = (key << bits_) | b[k];
    return key;
}

std::size_t ElementTable::lookup(const Point* b) const {
    if (packed_) {
        auto it = packed_index_.find(key_of_base_images(b));
        if (it == packed_index_.end()) return static_cast<std::size_t>(-1);
        return it->second;
    }
    auto it = string_index_.find(std::string(reinterpret_cast<const char*>(b), base_.size() * sizeof(Point)));
    if (it == string_index_.end()) return static_cast<std::size_t>(-1);
    return it->second;
}

Permutation ElementTable::element(std::size_t i) const {
    auto s = images(i);
    return Permutation(std::vector<Point>(s.begin(), s.end()));
}

std::optional<std::size_t> ElementTable::find(std::span<const Point> img) const {
    if (img.size() != degree_) return std::nullopt;
    std::vector<Point> b(base_.size());
    for (std::size_t k = 0; k < base_.size(); ++k) b[k] = img[base_[k]];
    std::size_t i = lookup(b.data());
    if (i == static_cast<std::size_t>(-1)) return std::nullopt;
    if (!std::equal(img.begin(), img.end(), images(i).begin())) return std::nullopt;
    return i;
}

std::size_t ElementTable::index_of(const Permutation& g) const {
    auto i = find(g.images());
    if (!i) throw PermutationError("element " + g.to_cycle_string() + " is not in the group");
    return *i;
}

std::size_t ElementTable::product(std::size_t a, std::size_t b) const {
    Point buf[64];
    std::vector<Point> big;
    Point* out = buf;
    if (base_.size() > 64) {
        big.resize(base_.size());
        out = big.data();
    }
    const Point* pa = data_.data() + a * degree_;
    const Point* pb = data_.data() + b * degree_;
    for (std::size_t k = 0; k < base_.size(); ++k) out[k] = pb[pa[base_[k]]];
    return lookup(out);
}

std::size_t ElementTable::conjugate(std::size_t y, std::span<const Point> x, std::span<const Point> x_inv) const {
    Point buf[64];
    std::vector<Point> big;
    Point* out = buf;
    if (base_.size() > 64) {
        big.resize(base_.size());
        out = big.data();
    }
    const Point* py = data_.data() + y * degree_;
    for (std::size_t k = 0; k < base_.size(); ++k) out[k] = x[py[x_inv[base_[k]]]];
    return lookup(out);
}

std::size_t ElementTable::inverse(std::size_t a) const {
    std::vector<Point> inv(degree_);
    const Point* pa = data_.data() + a * degree_;
    for (std::size_t x = 0; x < degree_; ++x) inv[pa[x]] = static_cast<Point>(x);
    return *find(inv);
}

std::uint64_t ElementTable::element_order(std::size_t a) const {
    std::uint64_t o = 1;
    std::vector<bool> seen(degree_, false);
    const Point* pa = data_.data() + a * degree_;
    for (std::size_t x = 0; x < degree_; ++x) {
        if (seen[x]) continue;
        std::uint64_t len = 0;
        for (std::size_t y = x; !seen[y]; y = pa[y]) {
            seen[y] = true;
            ++len;
        }
        o = std::lcm(o, len);
    }
    return o;
}

}  // namespace wreath
