#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "wreath/chars/char_table.hpp"
#include "wreath/families/families.hpp"
#include "wreath/rep/meataxe.hpp"

namespace wreath::verify {

struct RunConfig {
    std::uint64_t seed = 0;
    std::uint64_t enumeration_bound = kDefaultEnumerationBound;
    bool extended = false;
    /// Empty disables the on-disk cache.
    std::string cache_dir;
    unsigned jobs = 1;
    bool timings = false;
};

struct GroupData {
    FamilySpec spec;
    std::string name;
    std::shared_ptr<const PermGroup> group;
    std::shared_ptr<const ElementTable> table;
    std::shared_ptr<const WordMap> words;
    ClassData classes;
};

struct SylowData {
    SylowEmbedding embedding;
    std::shared_ptr<const PermGroup> p;
};

struct CensusSimple {
    GModule module;
    std::size_t end_degree = 1;
    bool principal = false;
    std::string source;
    BrauerCharacter brauer;
};

/// Simple modules harvested from permutation modules of the group.
struct Census {
    std::vector<std::string> sources;
    std::vector<CensusSimple> simples;
    /// absolutely irreducible Brauer characters in the principal block that
    /// the harvested simples account for
    std::size_t principal_count = 0;
};

/// PGU3(q) on its isotropic points, whose point stabilizer is the Borel
/// subgroup.
struct UnitaryFixture {
    unsigned q = 0;
    ProjectiveGroup g;
    std::shared_ptr<const PermGroup> group;
    BorelSubgroup borel;
    /// the isotropic point fixed by the Borel subgroup
    Point borel_point = 0;
    GModule borel_module;
};

struct LinearFixture {
    unsigned q = 0;
    ProjectiveGroup g;
    std::shared_ptr<const PermGroup> group;
    PermGroup borel;
    GModule point_module;
    GModule flag_module;
};

struct CacheStats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t rejected = 0;
};

/// Thread-safe lazy values keyed by string. Each value is computed once;
/// an exception is stored and rethrown to every caller.
template <class T>
class Memo {
public:
    const T& get(const std::string& key, const std::function<T()>& make) {
        Slot* s;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto& p = slots_[key];
            if (!p) p = std::make_unique<Slot>();
            s = p.get();
        }
        std::call_once(s->once, [&] {
            try {
                s->value.emplace(make());
            } catch (...) {
                s->error = std::current_exception();
            }
        });
        if (s->error) std::rethrow_exception(s->error);
        return *s->value;
    }

    std::vector<std::string> ready_keys() const {
        std::lock_guard<std::mutex> lock(mu_);
        std::vector<std::string> out;
        for (auto& [k, s] : slots_)
            if (s->value) out.push_back(k);
        return out;
    }

    const T* peek(const std::string& key) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = slots_.find(key);
        return it != slots_.end() && it->second->value ? &*it->second->value : nullptr;
    }

private:
    struct Slot {
        std::once_flag once;
        std::optional<T> value;
        std::exception_ptr error;
    };
    mutable std::mutex mu_;
    std::map<std::string, std::unique_ptr<Slot>> slots_;
};

/// Shared, memoized computations for a run.
class Workspace {
public:
    explicit Workspace(RunConfig cfg);

    const RunConfig& config() const { return cfg_; }

    const GroupData& group(const FamilySpec& s);
    const CharacterTable& table(const FamilySpec& s);
    const SylowData& sylow(const FamilySpec& s);
    const Census& census(const FamilySpec& s);
    const UnitaryFixture& unitary(unsigned q);
    const LinearFixture& linear(unsigned q);

    /// chop(m, seed), memoized under key and stored in the cache directory.
    const FactorMultiset& chop_cached(const std::string& key, const GModule& m);

    /// Root conventions of the tables built so far, by group name.
    std::map<std::string, RootConvention> root_conventions() const;
    /// Unipotent variant of each Borel subgroup built so far, by q.
    std::map<unsigned, std::string> borel_variants() const;
    CacheStats cache_stats() const;

private:
    std::optional<std::string> cache_path(const std::string& name) const;

    RunConfig cfg_;
    Memo<GroupData> groups_;
    Memo<CharacterTable> tables_;
    Memo<SylowData> sylows_;
    Memo<Census> censuses_;
    Memo<UnitaryFixture> unitary_;
    Memo<LinearFixture> linear_;
    Memo<FactorMultiset> chops_;
    std::atomic<std::size_t> hits_{0}, misses_{0}, rejected_{0};
};

/// "w6-n2-q3" style key, also used in claim ids and cache file names.
std::string spec_key(const FamilySpec& s);

}  // namespace wreath::verify
