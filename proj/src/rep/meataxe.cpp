#include "wreath/rep/meataxe.hpp"

#include <algorithm>

#include "wreath/kernel/matpoly.hpp"

namespace wreath {

namespace {
constexpr int kMaxFactorDegree = 32;
constexpr std::size_t kPoolLimit = 24;

BitVec first_row(const BitMatrix& m) { return m.row_vec(0); }
}  // namespace

MeatAxeResult meataxe(const GModule& m, std::mt19937_64& rng, std::size_t budget) {
    const std::size_t d = m.dim();
    if (d == 0) throw ModuleError("meataxe: zero module");
    MeatAxeResult res;
    if (d == 1) {
        res.irreducible = true;
        res.factor_degree = 1;
        return res;
    }
    if (m.generator_count() == 0) {
        BitVec v(words_for(d), 0);
        bits::set(v, 0);
        res.submodule = spin(m, {v});
        return res;
    }
    std::vector<BitMatrix> pool = m.action();
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        res.attempt = attempt;
        if (pool.size() < kPoolLimit) {
            std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
            std::size_t a = pick(rng), b = pick(rng);
            pool.push_back(mat_mul(pool[a], pool[b]));
        }
        BitMatrix x = (rng() & 1U) ? BitMatrix::identity(d) : BitMatrix(d, d);
        bool any = false;
        for (auto& p : pool)
            if (rng() & 1U) {
                x += p;
                any = true;
            }
        if (!any) x += pool[rng() % pool.size()];

        auto factors = factor_poly(char_poly(x));
        std::sort(factors.begin(), factors.end(),
                  [](const PolyFactor& a, const PolyFactor& b) { return a.factor.degree() < b.factor.degree(); });
        int tried = 0;
        for (auto& f : factors) {
            int deg = f.factor.degree();
            if (deg > kMaxFactorDegree || tried == 3) break;
            ++tried;
            BitMatrix n = nullspace(evaluate(f.factor, x));
            EchelonBasis s = spin(m, {first_row(n)});
            if (s.dim() < d) {
                res.submodule = std::move(s);
                res.factor_degree = deg;
                return res;
            }
            if (n.rows() != static_cast<std::size_t>(deg)) continue;
            BitMatrix nt = nullspace(evaluate(f.factor, x.transpose()));
            EchelonBasis w = spin_transposed(m, {first_row(nt)});
            res.factor_degree = deg;
            if (w.dim() < d) {
                res.submodule = EchelonBasis::from_matrix(nullspace(w.matrix().transpose()));
                return res;
            }
            res.irreducible = true;
            return res;
        }
    }
    throw BudgetError("meataxe: no decision after " + std::to_string(budget) +
                      " random elements; retry with another seed or a larger budget");
}

bool is_irreducible(const GModule& m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return meataxe(m, rng).irreducible;
}

std::size_t FactorMultiset::total_dim() const {
    std::size_t t = 0;
    for (auto& e : factors) t += e.multiplicity * e.module.dim();
    return t;
}

std::string FactorMultiset::summary() const {
    std::string s;
    for (auto& e : factors) {
        if (!s.empty()) s += ' ';
        s += std::to_string(e.module.dim());
        if (e.multiplicity != 1) s += "^" + std::to_string(e.multiplicity);
    }
    return s;
}

std::optional<std::size_t> FactorMultiset::find(const GModule& s) const {
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].module.dim() == s.dim() && !hom_space(s, factors[i].module).empty()) return i;
    return std::nullopt;
}

FactorMultiset chop(const GModule& m, std::uint64_t seed) {
    if (m.dim() == 0) throw ModuleError("chop: zero module");
    if (m.dim() > kChopDimLimit)
        throw ModuleError("chop: dimension " + std::to_string(m.dim()) + " exceeds " + std::to_string(kChopDimLimit));
    FactorMultiset out;
    out.seed = seed;
    std::mt19937_64 rng(seed);
    std::vector<GModule> work{m};
    while (!work.empty()) {
        GModule x = std::move(work.back());
        work.pop_back();
        MeatAxeResult r = meataxe(x, rng);
        if (!r.irreducible) {
            work.push_back(quotient(x, *r.submodule));
            work.push_back(submodule(x, *r.submodule));
            continue;
        }
        if (auto i = out.find(x)) {
            ++out.factors[*i].multiplicity;
        } else {
            std::size_t e = hom_space(x, x).size();
            out.factors.push_back({std::move(x), 1, e});
        }
    }
    std::stable_sort(out.factors.begin(), out.factors.end(),
                     [](const auto& a, const auto& b) { return a.module.dim() < b.module.dim(); });
    if (out.total_dim() != m.dim()) throw std::logic_error("chop: composition factor dimensions do not add up");
    std::mt19937_64 check(seed ^ 0x9e3779b97f4a7c15ULL);
    for (auto& e : out.factors)
        if (!meataxe(e.module, check).irreducible) throw std::logic_error("chop: claimed simple factor is reducible");
    return out;
}

std::vector<GModule> distinct_simples(const std::vector<FactorMultiset>& parts) {
    FactorMultiset all;
    for (auto& p : parts)
        for (auto& e : p.factors)
            if (!all.find(e.module)) all.factors.push_back({e.module, 1, e.end_degree});
    std::stable_sort(all.factors.begin(), all.factors.end(),
                     [](const auto& a, const auto& b) { return a.module.dim() < b.module.dim(); });
    std::vector<GModule> out;
    for (auto& e : all.factors) out.push_back(e.module);
    return out;
}

}  // namespace wreath
