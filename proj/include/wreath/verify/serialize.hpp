#pragma once

#include <nlohmann/json.hpp>
#include <optional>

#include "wreath/chars/char_table.hpp"
#include "wreath/rep/meataxe.hpp"

namespace wreath::verify {

using Json = nlohmann::json;

inline constexpr int kCacheFormat = 1;

/// {"rows", "cols", "hex"} with BitMatrix::to_hex rows.
Json matrix_json(const BitMatrix& m);
BitMatrix matrix_from_json(const Json& j);

Json root_json(const RootConvention& rc);
/// Power-basis coefficients with the conductor, e.g. {"n": 3, "c": [0, 1]}.
Json cyclotomic_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j);

/// Class data and values of a table, for export and the cache.
Json table_json(const CharacterTable& t);
/// Rebuilds a cached table over freshly computed classes. Returns nothing
/// when the stored classes or root convention differ from the fresh ones or
/// the values fail exact orthogonality.
std::optional<CharacterTable> table_from_json(const Json& j, const ClassData& fresh);

/// Factors with their generator matrices.
Json chop_json(const FactorMultiset& f);
/// Rebuilds cached factors as modules for the group of `source`. Returns
/// nothing if the seed, the dimensions or the matrices do not fit.
std::optional<FactorMultiset> chop_from_json(const Json& j, const GModule& source, std::uint64_t seed);

}  // namespace wreath::verify
