#include "wreath/groups/permutation.hpp"

#include <numeric>
#include <sstream>

namespace wreath {

Permutation::Permutation(std::size_t degree) : img_(degree) {
    if (degree > kMaxDegree) throw PermutationError("degree " + std::to_string(degree) + " too large");
    std::iota(img_.begin(), img_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (Point p : img_) {
        if (p >= img_.size() || seen[p]) throw PermutationError("image array is not a bijection");
        seen[p] = true;
    }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= degree || used[c[i]]) throw PermutationError("bad cycle notation");
            used[c[i]] = true;
            img[c[i]] = c[(i + 1) % c.size()];
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (o.degree() != degree()) throw PermutationError("degree mismatch in product");
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = o.img_[img_[x]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<Point>(x);
    return r;
}

Permutation Permutation::pow(std::int64_t e) const {
    Permutation base = e < 0 ? inverse() : *this;
    std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e);
    Permutation r(degree());
    while (n) {
        if (n & 1U) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

Permutation Permutation::conjugate_by(const Permutation& g) const { return g.inverse() * *this * g; }

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != x) return false;
    return true;
}

std::uint64_t Permutation::order() const {
    std::vector<bool> seen(img_.size(), false);
    std::uint64_t o = 1;
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (seen[x]) continue;
        std::uint64_t len = 0;
        for (std::size_t y = x; !seen[y]; y = img_[y]) {
            seen[y] = true;
            ++len;
        }
        o = std::lcm(o, len);
    }
    return o;
}

std::size_t Permutation::first_moved() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != x) return x;
    return img_.size();
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (std::size_t x = 0; x < img_.size(); ++x) {
        if (seen[x] || img_[x] == x) continue;
        any = true;
        os << '(';
        for (std::size_t y = x; !seen[y]; y = img_[y]) {
            seen[y] = true;
            os << y << (img_[y] == x ? "" : ",");
        }
        os << ')';
    }
    if (!any) os << "()";
    return os.str();
}

void compose_into(std::span<const Point> a, std::span<const Point> b, std::span<Point> out) {
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
}

}  // namespace wreath
