#include "wreath/verify/serialize.hpp"

#include <set>

namespace wreath::verify {

Json matrix_json(const BitMatrix& m) { return {{"rows", m.rows()}, {"cols", m.cols()}, {"hex", m.to_hex()}}; }

BitMatrix matrix_from_json(const Json& j) {
    return BitMatrix::from_hex(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                               j.at("hex").get<std::vector<std::string>>());
}

Json root_json(const RootConvention& rc) {
    return {{"exponent", rc.exponent},
            {"dixon_prime", rc.dixon_prime},
            {"dixon_root", rc.dixon_root},
            {"odd_exponent", rc.odd_exponent},
            {"gf2_degree", rc.gf2_degree},
            {"gf2_root", rc.gf2_root},
            {"gf2_modulus", rc.gf2_modulus},
            {"meaning", "exp(2 pi i/exponent) -> dixon_root mod dixon_prime; its odd part -> gf2_root in GF(2^gf2_degree), "
                        "gf2_root written in the power basis of the modulus"}};
}

Json cyclotomic_json(const Cyclotomic& x) {
    if (x.is_integer()) return {{"n", 1}, {"c", {x.integer_value()}}};
    return {{"n", x.conductor()}, {"c", x.coeffs()}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
    return Cyclotomic::from_powers(j.at("n").get<std::uint64_t>(), j.at("c").get<std::vector<std::int64_t>>());
}

Json table_json(const CharacterTable& t) {
    const ClassData& cd = t.classes;
    Json classes = Json::array();
    for (std::size_t c = 0; c < cd.count(); ++c) {
        const auto& img = cd.representatives[c].images();
        classes.push_back({{"representative", std::vector<std::uint64_t>(img.begin(), img.end())},
                           {"size", cd.sizes[c]},
                           {"element_order", cd.element_orders[c]},
                           {"inverse", cd.inverse_class[c]}});
    }
    auto block = principal_block_2(t);
    std::set<std::size_t> in_block(block.begin(), block.end());
    Json chars = Json::array();
    for (std::size_t x = 0; x < t.size(); ++x) {
        Json vals = Json::array();
        for (auto& v : t.values[x]) vals.push_back(cyclotomic_json(v));
        chars.push_back({{"degree", t.degree(x)},
                         {"principal_block", in_block.count(x) > 0},
                         {"height", in_block.count(x) ? Json(two_valuation(t.degree(x))) : Json()},
                         {"values", vals}});
    }
    return {{"format_version", kCacheFormat},
            {"group_order", cd.group_order},
            {"root", root_json(t.root)},
            {"classes", classes},
            {"characters", chars}};
}

std::optional<CharacterTable> table_from_json(const Json& j, const ClassData& fresh) {
    try {
        if (j.at("format_version").get<int>() != kCacheFormat) return std::nullopt;
        if (j.at("group_order").get<std::uint64_t>() != fresh.group_order) return std::nullopt;
        const Json& classes = j.at("classes");
        if (classes.size() != fresh.count()) return std::nullopt;
        for (std::size_t c = 0; c < fresh.count(); ++c) {
            const auto& img = fresh.representatives[c].images();
            if (classes[c].at("representative").get<std::vector<std::uint64_t>>() !=
                    std::vector<std::uint64_t>(img.begin(), img.end()) ||
                classes[c].at("size").get<std::uint64_t>() != fresh.sizes[c])
                return std::nullopt;
        }
        CharacterTable t;
        t.classes = fresh;
        t.root = make_root_convention(fresh.exponent, fresh.group_order);
        if (j.at("root") != root_json(t.root)) return std::nullopt;
        for (const Json& ch : j.at("characters")) {
            std::vector<Cyclotomic> row;
            for (const Json& v : ch.at("values")) {
                if (fresh.exponent % v.at("n").get<std::uint64_t>() != 0) return std::nullopt;
                row.push_back(cyclotomic_from_json(v));
            }
            if (row.size() != fresh.count()) return std::nullopt;
            t.values.push_back(std::move(row));
        }
        if (t.size() != fresh.count()) return std::nullopt;
        Orthogonality o = check_orthogonality(t);
        if (!o.rows || !o.columns) return std::nullopt;
        return t;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Json chop_json(const FactorMultiset& f) {
    Json factors = Json::array();
    for (auto& e : f.factors) {
        Json gens = Json::array();
        for (auto& g : e.module.action()) gens.push_back(matrix_json(g));
        factors.push_back({{"dim", e.module.dim()},
                           {"multiplicity", e.multiplicity},
                           {"end_degree", e.end_degree},
                           {"generators", gens}});
    }
    return {{"format_version", kCacheFormat}, {"seed", f.seed}, {"summary", f.summary()}, {"factors", factors}};
}

std::optional<FactorMultiset> chop_from_json(const Json& j, const GModule& source, std::uint64_t seed) {
    try {
        if (j.at("format_version").get<int>() != kCacheFormat) return std::nullopt;
        if (j.at("seed").get<std::uint64_t>() != seed) return std::nullopt;
        FactorMultiset f;
        f.seed = seed;
        std::size_t total = 0;
        for (const Json& e : j.at("factors")) {
            std::vector<BitMatrix> gens;
            for (const Json& g : e.at("generators")) gens.push_back(matrix_from_json(g));
            if (gens.size() != source.generator_count()) return std::nullopt;
            FactorMultiset::Entry entry{GModule(source.group_ptr(), std::move(gens)), e.at("multiplicity").get<std::size_t>(),
                                        e.at("end_degree").get<std::size_t>()};
            if (entry.module.dim() != e.at("dim").get<std::size_t>()) return std::nullopt;
            total += entry.module.dim() * entry.multiplicity;
            f.factors.push_back(std::move(entry));
        }
        if (total != source.dim() || f.summary() != j.at("summary").get<std::string>()) return std::nullopt;
        return f;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace wreath::verify
