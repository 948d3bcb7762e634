#include "wreath/kernel/field.hpp"

#include <map>
#include <mutex>

#include "wreath/kernel/poly.hpp"

namespace wreath {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

namespace {
std::vector<Elem> digits(Elem a, unsigned p, unsigned m) {
    std::vector<Elem> d(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Elem undigits(const std::vector<Elem>& d, unsigned p) {
    Elem a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
}
}  // namespace

ExtField::ExtField(unsigned p, unsigned m, std::vector<Elem> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))), modulus_(std::move(modulus)) {}

Elem ExtField::raw_mul(Elem a, Elem b) const {
    if (m_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    if (p_ == 2) {
        std::uint64_t prod = 0;
        for (unsigned i = 0; i < m_; ++i)
            if ((b >> i) & 1U) prod ^= std::uint64_t{a} << i;
        std::uint64_t mod = 0;
        for (unsigned i = 0; i <= m_; ++i)
            if (modulus_[i]) mod |= std::uint64_t{1} << i;
        for (unsigned k = 2 * m_; k-- > m_;)
            if ((prod >> k) & 1U) prod ^= mod << (k - m_);
        return static_cast<Elem>(prod);
    }
    auto da = digits(a, p_, m_);
    auto db = digits(b, p_, m_);
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
    for (std::size_t k = prod.size(); k-- > m_;) {
        std::uint64_t c = prod[k];
        if (c == 0) continue;
        for (unsigned i = 0; i <= m_; ++i) {
            std::size_t pos = k - m_ + i;
            prod[pos] = (prod[pos] + (p_ - c) * modulus_[i]) % p_;
        }
    }
    std::vector<Elem> r(m_);
    for (unsigned i = 0; i < m_; ++i) r[i] = static_cast<Elem>(prod[i]);
    return undigits(r, p_);
}

void ExtField::build_tables() {
    if (m_ > 1 && p_ != 2 && q_ <= 4096) {
        add_table_.resize(std::size_t{q_} * q_);
        for (Elem a = 0; a < q_; ++a) {
            auto da = digits(a, p_, m_);
            for (Elem b = 0; b < q_; ++b) {
                auto db = digits(b, p_, m_);
                std::vector<Elem> s(m_);
                for (unsigned i = 0; i < m_; ++i) s[i] = (da[i] + db[i]) % p_;
                add_table_[std::size_t{a} * q_ + b] = undigits(s, p_);
            }
        }
    }
    auto factors = prime_factors(q_ - 1);
    Elem g = 0;
    for (Elem cand = 1; cand < q_; ++cand) {
        if (q_ == 2) {
            g = 1;
            break;
        }
        bool ok = true;
        for (auto r : factors) {
            std::uint64_t e = (q_ - 1) / r;
            Elem acc = 1, base = cand;
            while (e) {
                if (e & 1U) acc = raw_mul(acc, base);
                base = raw_mul(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw FieldError("no primitive element found for " + name());
    exp_.assign(2 * std::size_t{q_}, 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t k = 0; k + 1 < q_; ++k) {
        exp_[k] = x;
        log_[x] = k;
        x = raw_mul(x, g);
    }
    if (x != 1) throw FieldError("primitive element check failed for " + name());
    for (std::uint32_t k = q_ - 1; k < exp_.size(); ++k) exp_[k] = exp_[k - (q_ - 1)];
}

Elem ExtField::add(Elem a, Elem b) const {
    if (m_ == 1) {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    auto da = digits(a, p_, m_);
    auto db = digits(b, p_, m_);
    for (unsigned i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da, p_);
}

Elem ExtField::neg(Elem a) const {
    if (p_ == 2 || a == 0) return a;
    if (m_ == 1) return p_ - a;
    auto d = digits(a, p_, m_);
    for (auto& x : d) x = (p_ - x) % p_;
    return undigits(d, p_);
}

Elem ExtField::inv(Elem a) const {
    if (a == 0) throw FieldError("inverse of zero in " + name());
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

Elem ExtField::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t l = (std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

std::uint32_t ExtField::log(Elem a) const {
    if (a == 0) throw FieldError("log of zero in " + name());
    return log_[a];
}

Elem ExtField::exp(std::int64_t k) const {
    std::int64_t n = static_cast<std::int64_t>(q_) - 1;
    std::int64_t r = ((k % n) + n) % n;
    return exp_[static_cast<std::size_t>(r)];
}

Elem ExtField::from_int(std::int64_t v) const {
    std::int64_t p = p_;
    return static_cast<Elem>(((v % p) + p) % p);
}

std::uint64_t ExtField::order(Elem a) const {
    if (a == 0) throw FieldError("order of zero");
    std::uint64_t n = q_ - 1;
    std::uint64_t l = log_[a];
    std::uint64_t g = n, t = l;
    while (t) {
        std::uint64_t r = g % t;
        g = t;
        t = r;
    }
    return n / g;
}

std::string ExtField::name() const {
    return m_ == 1 ? "GF(" + std::to_string(p_) + ")" : "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

FieldPtr make_field(unsigned p, unsigned m) {
    if (!is_prime(p)) throw FieldError("make_field: characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw FieldError("make_field: degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            throw FieldError("make_field: " + std::to_string(p) + "^" + std::to_string(m) + " exceeds the 2^20 element limit");
    }
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, m});
        if (it != cache.end()) return it->second;
    }
    std::shared_ptr<ExtField> f;
    if (m == 1) {
        f.reset(new ExtField(p, 1, {0, 1}));
    } else {
        FieldPtr base = make_field(p, 1);
        std::uint64_t count = q;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<Elem> c(m + 1, 0);
            std::uint64_t t = code;
            for (unsigned i = 0; i < m; ++i) {
                c[i] = static_cast<Elem>(t % p);
                t /= p;
            }
            c[m] = 1;
            if (c[0] == 0) continue;
            Poly cand(base, c);
            if (!is_irreducible(cand)) continue;
            f.reset(new ExtField(p, m, c));
            break;
        }
        if (!f) throw FieldError("make_field: no irreducible modulus found");
    }
    f->build_tables();
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(std::make_pair(p, m), f);
    return it->second;
}

FieldPtr make_field_of_size(std::uint64_t q) {
    if (q < 2) throw FieldError("make_field_of_size: size below 2");
    auto f = prime_factors(q);
    if (f.size() != 1) throw FieldError("make_field_of_size: " + std::to_string(q) + " is not a prime power");
    unsigned m = 0;
    for (std::uint64_t t = q; t > 1; t /= f[0]) ++m;
    return make_field(static_cast<unsigned>(f[0]), m);
}

}  // namespace wreath
