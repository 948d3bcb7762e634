#include "wreath/chars/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace wreath {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1 % m, x = b % m;
    for (; e; e >>= 1) {
        if (e & 1U) r = r * x % m;
        x = x * x % m;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw std::domain_error("mod_inverse: not invertible");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // (x^n - 1) divided by Phi_d for every proper divisor d
    std::vector<std::int64_t> f(n + 1, 0);
    f[0] = -1;
    f[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d) continue;
        const auto& g = cyclotomic_polynomial(d);
        std::size_t dg = g.size() - 1;
        std::vector<std::int64_t> q(f.size() - dg, 0);
        for (std::size_t i = f.size(); i-- > dg;) {
            std::int64_t c = f[i];
            q[i - dg] = c;
            if (c)
                for (std::size_t j = 0; j <= dg; ++j) f[i - dg + j] -= c * g[j];
        }
        f = std::move(q);
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(f)).first->second;
}

Cyclotomic::Cyclotomic(std::uint64_t n) : n_(n), c_(euler_phi(n), 0) {
    if (n == 0) throw std::invalid_argument("Cyclotomic: conductor 0");
}

Cyclotomic Cyclotomic::integer(std::int64_t v, std::uint64_t n) {
    Cyclotomic c(n);
    c.c_[0] = v;
    return c;
}

Cyclotomic Cyclotomic::root(std::uint64_t n, std::int64_t k) {
    std::vector<std::int64_t> a(n, 0);
    std::int64_t nn = static_cast<std::int64_t>(n);
    a[static_cast<std::size_t>(((k % nn) + nn) % nn)] = 1;
    return from_powers(n, a);
}

Cyclotomic Cyclotomic::from_powers(std::uint64_t n, const std::vector<std::int64_t>& a) {
    Cyclotomic c(n);
    c.reduce(a);
    return c;
}

void Cyclotomic::reduce(std::vector<std::int64_t> dense) {
    const std::size_t n = n_;
    if (dense.size() > n) {
        for (std::size_t i = n; i < dense.size(); ++i) dense[i % n] += dense[i];
        dense.resize(n);
    }
    const auto& phi = cyclotomic_polynomial(n_);
    const std::size_t d = phi.size() - 1;
    std::vector<std::pair<std::size_t, std::int64_t>> sparse;
    for (std::size_t j = 0; j < d; ++j)
        if (phi[j]) sparse.emplace_back(j, phi[j]);
    for (std::size_t i = dense.size(); i-- > d;) {
        std::int64_t c = dense[i];
        if (!c) continue;
        for (auto [j, v] : sparse) dense[i - d + j] -= c * v;
        dense[i] = 0;
    }
    dense.resize(d, 0);
    c_ = std::move(dense);
}

Cyclotomic Cyclotomic::lift(std::uint64_t m) const {
    if (m == n_) return *this;
    if (m % n_) throw std::invalid_argument("Cyclotomic::lift: conductor does not divide target");
    std::vector<std::int64_t> a(m, 0);
    std::uint64_t s = m / n_;
    for (std::size_t k = 0; k < c_.size(); ++k) a[k * s] = c_[k];
    return from_powers(m, a);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (o.n_ != n_) {
        std::uint64_t l = std::lcm(n_, o.n_);
        return lift(l) + o.lift(l);
    }
    Cyclotomic r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + o * -1; }

Cyclotomic Cyclotomic::operator*(std::int64_t s) const {
    Cyclotomic r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (o.n_ != n_) {
        std::uint64_t l = std::lcm(n_, o.n_);
        return lift(l) * o.lift(l);
    }
    std::vector<std::int64_t> a(2 * c_.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) a[i + j] += c_[i] * o.c_[j];
    }
    return from_powers(n_, a);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (o.n_ == n_) return c_ == o.c_;
    std::uint64_t l = std::lcm(n_, o.n_);
    return lift(l).c_ == o.lift(l).c_;
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(std::int64_t r) const {
    std::int64_t n = static_cast<std::int64_t>(n_);
    std::int64_t rr = ((r % n) + n) % n;
    if (std::gcd(static_cast<std::uint64_t>(rr), n_) != 1 && n_ > 1)
        throw std::invalid_argument("Cyclotomic::galois: exponent not a unit");
    std::vector<std::int64_t> a(n_, 0);
    for (std::size_t k = 0; k < c_.size(); ++k)
        a[static_cast<std::size_t>((static_cast<std::int64_t>(k) * rr) % n)] += c_[k];
    return from_powers(n_, a);
}

bool Cyclotomic::is_zero() const {
    for (auto c : c_)
        if (c) return false;
    return true;
}

bool Cyclotomic::is_integer() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

std::int64_t Cyclotomic::integer_value() const {
    if (!is_integer()) throw std::domain_error("Cyclotomic::integer_value: not a rational integer");
    return c_[0];
}

Cyclotomic Cyclotomic::divided_by(std::int64_t d) const {
    Cyclotomic r = *this;
    for (auto& c : r.c_) {
        if (c % d) throw std::domain_error("Cyclotomic::divided_by: not divisible by " + std::to_string(d));
        c /= d;
    }
    return r;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k]) s += static_cast<double>(c_[k]) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_));
    return s;
}

std::uint64_t Cyclotomic::mod_prime(std::uint64_t p, std::uint64_t w) const {
    std::uint64_t s = 0, x = 1;
    for (auto c : c_) {
        std::int64_t cm = c % static_cast<std::int64_t>(p);
        if (cm < 0) cm += static_cast<std::int64_t>(p);
        s = (s + static_cast<std::uint64_t>(cm) * x) % p;
        x = x * w % p;
    }
    return s;
}

std::string Cyclotomic::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        std::int64_t c = c_[k];
        if (!c) continue;
        std::string term;
        if (k == 0) term = std::to_string(c < 0 ? -c : c);
        else {
            if (c != 1 && c != -1) term = std::to_string(c < 0 ? -c : c) + "*";
            term += "z" + std::to_string(n_) + "^" + std::to_string(k);
        }
        if (s.empty()) s = (c < 0 ? "-" : "") + term;
        else s += (c < 0 ? "-" : "+") + term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace wreath
