#pragma once

#include "wreath/rep/hom.hpp"

namespace wreath {

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Outcome of one MeatAxe run on a module.
struct MeatAxeResult {
    bool irreducible = false;
    /// A proper nonzero submodule when reducible.
    std::optional<EchelonBasis> submodule;
    /// Attempt at which the answer was found and the degree of the factor
    /// whose nullspace gave the Norton test; replayable from the seed.
    std::size_t attempt = 0;
    int factor_degree = 0;
};

/// Holt-Rees MeatAxe over GF(2): random algebra elements, nullspaces of
/// factors of their characteristic polynomials, spinning, and Norton's
/// criterion. Throws BudgetError when no decision is reached.
MeatAxeResult meataxe(const GModule& m, std::mt19937_64& rng, std::size_t budget = 256);
bool is_irreducible(const GModule& m, std::uint64_t seed = 0);

inline constexpr std::size_t kChopDimLimit = 4096;

struct FactorMultiset {
    struct Entry {
        GModule module;
        std::size_t multiplicity = 0;
        /// dim End(S), the degree of the splitting field of S over GF(2).
        std::size_t end_degree = 1;
    };
    std::vector<Entry> factors;
    std::uint64_t seed = 0;

    std::size_t total_dim() const;
    /// "1^2 6^2 14" style summary by dimension.
    std::string summary() const;
    /// Index of the entry isomorphic to s, if any.
    std::optional<std::size_t> find(const GModule& s) const;
};

/// Composition factors with multiplicities, ordered by dimension.
FactorMultiset chop(const GModule& m, std::uint64_t seed = 0);

/// Merge the simples of several multisets into one list of distinct simples.
std::vector<GModule> distinct_simples(const std::vector<FactorMultiset>& parts);

}  // namespace wreath
