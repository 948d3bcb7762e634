#pragma once

#include "wreath/rep/module.hpp"

namespace wreath {

/// Basis of Hom_kG(m, n). Each map is a dim(m) x dim(n) matrix X with
/// rho_m(g) X = X rho_n(g); the basis is in reduced echelon form when the
/// maps are flattened row by row.
std::vector<BitMatrix> hom_space(const GModule& m, const GModule& n);

struct EndRing {
    std::vector<BitMatrix> basis;
    /// Products of basis elements stay in the span.
    bool closed = false;
    std::size_t dim() const { return basis.size(); }
};

inline constexpr std::size_t kEndRingDimLimit = 1024;

EndRing end_ring(const GModule& m);

enum class IsoStatus { Isomorphic, NotIsomorphic, Undecided };

struct IsoResult {
    IsoStatus status = IsoStatus::Undecided;
    /// Invertible intertwiner m -> n when isomorphic.
    std::optional<BitMatrix> map;
};

/// Definitive when the hom space has dimension <= 16 or a random search
/// finds an invertible map; otherwise Undecided.
IsoResult module_iso(const GModule& m, const GModule& n, std::uint64_t seed = 0, std::size_t budget = 512);
bool isomorphic(const GModule& m, const GModule& n);

struct Summand {
    GModule module;
    /// Rows span the summand inside the decomposed module.
    BitMatrix basis;
    std::size_t end_dim = 0;
    /// "exhaustive" (every endomorphism checked unit or nilpotent) or
    /// "probabilistic" (random endomorphisms failed to split).
    std::string certificate;
    std::uint64_t witness_seed = 0;
};

/// Krull-Schmidt decomposition by Fitting splitting along endomorphisms.
std::vector<Summand> decompose(const GModule& m, std::uint64_t seed = 0);

/// Scott module of the permutation module on `cosets`: the unique
/// indecomposable summand with the trivial module in both head and socle.
Summand scott_summand(const GModule& perm);

}  // namespace wreath
