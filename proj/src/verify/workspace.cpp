#include "wreath/verify/workspace.hpp"

#include <filesystem>
#include <fstream>

#include "wreath/groups/classes.hpp"
#include "wreath/rep/hom.hpp"
#include "wreath/verify/serialize.hpp"

namespace wreath::verify {

namespace fs = std::filesystem;

std::string spec_key(const FamilySpec& s) {
    std::string k = "w" + std::to_string(static_cast<int>(s.family)) + "-n" + std::to_string(s.n);
    if (s.family != Family::W1 && s.family != Family::W2) k += "-q" + std::to_string(s.q);
    return k;
}

Workspace::Workspace(RunConfig cfg) : cfg_(std::move(cfg)) {}

std::optional<std::string> Workspace::cache_path(const std::string& name) const {
    if (cfg_.cache_dir.empty()) return std::nullopt;
    return (fs::path(cfg_.cache_dir) / (name + "-seed" + std::to_string(cfg_.seed) + ".json")).string();
}

namespace {

enum class Read { Missing, Corrupt, Ok };

Read read_json(const std::optional<std::string>& path, Json& out) {
    if (!path) return Read::Missing;
    std::ifstream in(*path);
    if (!in) return Read::Missing;
    try {
        out = Json::parse(in);
        return Read::Ok;
    } catch (const Json::parse_error&) {
        return Read::Corrupt;
    }
}

void write_json(const std::optional<std::string>& path, const Json& j) {
    if (!path) return;
    fs::create_directories(fs::path(*path).parent_path());
    // write then rename, so a concurrent reader never sees half a file
    std::string tmp = *path + ".tmp" + std::to_string(std::hash<std::string>{}(*path) ^ reinterpret_cast<std::uintptr_t>(&j));
    {
        std::ofstream out(tmp);
        out << j.dump() << '\n';
    }
    fs::rename(tmp, *path);
}

}  // namespace

const UnitaryFixture& Workspace::unitary(unsigned q) {
    return unitary_.get(std::to_string(q), [&] {
        UnitaryFixture f;
        f.q = q;
        // PSU3(q) = PGU3(q) when 3 does not divide q + 1
        f.g = projective_group(q == 3 ? Projective::PSU3 : Projective::PGU3, q);
        f.group = std::make_shared<const PermGroup>(f.g.group);
        f.borel = borel_pgu3(f.g);
        bool found = false;
        for (Point x = 0; x < f.group->degree() && !found; ++x) {
            bool fixed = true;
            for (auto& b : f.borel.group.generators()) fixed = fixed && b[x] == x;
            if (fixed) {
                f.borel_point = x;
                found = true;
            }
        }
        if (!found) throw std::runtime_error("unitary fixture: the Borel subgroup fixes no isotropic point");
        f.borel_module = perm_module(f.group);
        return f;
    });
}

const LinearFixture& Workspace::linear(unsigned q) {
    return linear_.get(std::to_string(q), [&] {
        LinearFixture f;
        f.q = q;
        f.g = projective_group(Projective::PSL3, q);
        unsigned n = 0;
        while ((std::uint64_t{2} << n) <= two_part(q - 1)) ++n;
        const GroupData& gd = group({Family::W5, n, q});
        if (gd.group->generators() != f.g.group.generators())
            throw std::runtime_error("linear fixture: generators differ from the family group");
        f.group = gd.group;
        f.borel = borel_psl3(f.g);
        f.point_module = perm_module(f.group);
        f.flag_module = perm_module(f.group, coset_action(*gd.table, f.borel).action);
        return f;
    });
}

const GroupData& Workspace::group(const FamilySpec& s) {
    return groups_.get(spec_key(s), [&] {
        s.validate();
        GroupData d;
        d.spec = s;
        d.name = s.group_name();
        if (s.family == Family::W6) {
            d.group = unitary(s.q).group;
        } else if (s.family == Family::W5) {
            d.group = std::make_shared<const PermGroup>(projective_group(Projective::PSL3, s.q).group);
        } else {
            d.group = std::make_shared<const PermGroup>(build_family(s).group);
        }
        d.table = std::make_shared<const ElementTable>(*d.group, cfg_.enumeration_bound);
        d.words = std::make_shared<const WordMap>(*d.table);
        d.classes = conjugacy_classes(*d.table);
        return d;
    });
}

const CharacterTable& Workspace::table(const FamilySpec& s) {
    return tables_.get(spec_key(s), [&] {
        const GroupData& g = group(s);
        auto path = cache_path("table-" + spec_key(s));
        Json j;
        if (Read st = read_json(path, j); st != Read::Missing) {
            if (auto t = st == Read::Ok ? table_from_json(j, g.classes) : std::nullopt) {
                ++hits_;
                return std::move(*t);
            }
            ++rejected_;
        }
        ++misses_;
        CharacterTable t = dixon_table(*g.table, g.classes, cfg_.seed);
        write_json(path, table_json(t));
        return t;
    });
}

const SylowData& Workspace::sylow(const FamilySpec& s) {
    return sylows_.get(spec_key(s), [&] {
        const GroupData& g = group(s);
        SylowData d;
        d.embedding = sylow_embedding(*g.table, s.n);
        d.p = std::make_shared<const PermGroup>(d.embedding.sylow);
        return d;
    });
}

const FactorMultiset& Workspace::chop_cached(const std::string& key, const GModule& m) {
    return chops_.get(key, [&] {
        auto path = cache_path("chop-" + key);
        Json j;
        if (Read st = read_json(path, j); st != Read::Missing) {
            if (auto f = st == Read::Ok ? chop_from_json(j, m, cfg_.seed) : std::nullopt) {
                ++hits_;
                return std::move(*f);
            }
            ++rejected_;
        }
        ++misses_;
        FactorMultiset f = chop(m, cfg_.seed);
        write_json(path, chop_json(f));
        return f;
    });
}

const Census& Workspace::census(const FamilySpec& s) {
    return censuses_.get(spec_key(s), [&] {
        const GroupData& g = group(s);
        const CharacterTable& ct = table(s);
        Census c;
        std::vector<std::pair<std::string, const FactorMultiset*>> parts;
        if (s.family == Family::W5) {
            const LinearFixture& f = linear(s.q);
            c.sources = {"points", "flags"};
            parts.emplace_back("points", &chop_cached("psl3-q" + std::to_string(s.q) + "-points", f.point_module));
            parts.emplace_back("flags", &chop_cached("psl3-q" + std::to_string(s.q) + "-flags", f.flag_module));
        } else {
            const SylowData& p = sylow(s);
            GModule m = perm_module(g.group, coset_action(*g.table, *p.p).action);
            if (m.dim() > kChopDimLimit) throw ModuleError("census: index of the Sylow subgroup exceeds the chop limit");
            c.sources = {"sylow-cosets"};
            parts.emplace_back("sylow-cosets", &chop_cached("census-" + spec_key(s), m));
        }
        for (auto& [src, fm] : parts)
            for (auto& e : fm->factors) {
                bool seen = false;
                for (auto& have : c.simples)
                    seen = seen || (have.module.dim() == e.module.dim() && isomorphic(have.module, e.module));
                if (!seen) c.simples.push_back({e.module, e.end_degree, false, src, {}});
            }

        // a simple lies in the principal block when its Brauer character is
        // in the span of the block's ordinary characters on 2-regular classes
        auto reg = two_regular_classes(g.classes);
        std::vector<BrauerCharacter> block_rows;
        for (auto x : principal_block_2(ct)) {
            BrauerCharacter r;
            for (auto cl : reg) r.push_back(ct.values[x][cl]);
            block_rows.push_back(std::move(r));
        }
        std::size_t base = rank_mod_l(ct, block_rows);
        for (auto& sm : c.simples) {
            sm.brauer = brauer_character(sm.module, *g.table, *g.words, ct);
            auto with = block_rows;
            with.push_back(sm.brauer);
            sm.principal = rank_mod_l(ct, with) == base;
            if (sm.principal) c.principal_count += sm.end_degree;
        }
        return c;
    });
}

std::map<std::string, RootConvention> Workspace::root_conventions() const {
    std::map<std::string, RootConvention> out;
    for (auto& k : tables_.ready_keys()) {
        const GroupData* g = groups_.peek(k);
        const CharacterTable* t = tables_.peek(k);
        if (g && t) out[g->name] = t->root;
    }
    return out;
}

std::map<unsigned, std::string> Workspace::borel_variants() const {
    std::map<unsigned, std::string> out;
    for (auto& k : unitary_.ready_keys()) out[static_cast<unsigned>(std::stoul(k))] = unitary_.peek(k)->borel.variant;
    return out;
}

CacheStats Workspace::cache_stats() const { return {hits_.load(), misses_.load(), rejected_.load()}; }

}  // namespace wreath::verify
