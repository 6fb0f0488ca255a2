#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lexfreq/corpus.hpp"

namespace lexfreq {

/// Identity of a dictionary entry: uppercase headword plus an optional
/// disambiguator such as "спол." or "займ." that separates homonyms.
struct LemmaKey {
    std::string headword;
    std::string disambiguator;  // empty = none

    auto operator<=>(const LemmaKey&) const = default;

    /// "ЩО(спол.)" or just "ЩО".
    std::string display() const {
        return disambiguator.empty() ? headword : headword + "(" + disambiguator + ")";
    }
};

/// Phonetic variants merged under one headword (В/У, З/ІЗ/ЗІ/ЗО, ...).
struct VariantGroup {
    std::string canonical;
    std::vector<std::string> members;  // includes canonical, >= 2 entries

    bool operator==(const VariantGroup&) const = default;
};

/// Explicit (surface, pos, sense) -> key mapping; empty pos/sense match
/// rows whose annotation leaves the field empty.
struct LookupEntry {
    std::string surface;
    std::string pos;
    std::string sense;
    LemmaKey key;

    bool operator==(const LookupEntry&) const = default;
};

class LemmaRuleSet {
public:
    std::vector<VariantGroup> variant_groups;
    std::vector<std::string> rankless_particles;  // СЯ, СЬ: detached reflexive particles
    std::vector<std::string> strip_particles;     // -НО, -ТАКИ, -ТО with leading hyphen
    std::vector<std::string> no_merge;            // never rewritten by variant groups
    std::vector<LookupEntry> lookup;

    /// Validates and builds the lookup indexes; call after mutating the
    /// public vectors. Throws DataError on overlapping variant groups,
    /// canonicals missing from their member list, or no_merge words that
    /// appear inside a group.
    void index();

    bool is_rankless(const std::string& folded_surface) const;
    const VariantGroup* group_of(const std::string& headword) const;
    bool is_no_merge(const std::string& headword) const;
    const LemmaKey* find_lookup(const std::string& folded_surface, const std::string& pos,
                                const std::string& sense) const;

    bool operator==(const LemmaRuleSet& o) const {
        return variant_groups == o.variant_groups && rankless_particles == o.rankless_particles &&
               strip_particles == o.strip_particles && no_merge == o.no_merge &&
               lookup == o.lookup;
    }

private:
    std::unordered_map<std::string, size_t> member_to_group_;
    std::unordered_set<std::string> rankless_;
    std::unordered_set<std::string> no_merge_;
    std::unordered_map<std::string, LemmaKey> lookup_;  // keyed surface\tpos\tsense
};

/// The built-in merging tables: the standard euphonic variant groups
/// (і/й, в/у, з/із/зі/зо, щоби/щоб, ж/же, би/б, ще/іще, вже/уже,
/// весь/увесь/ввесь, іти/йти, ледве/ледво, трохи/троха and the в-/у-
/// prefix pairs), the detached reflexive particles ся/сь, the -но/-таки/-то
/// strip list, and the do-not-merge exceptions (влюблений/улюблений,
/// вклад/уклад, впадати/упадати).
LemmaRuleSet default_ruleset();

LemmaRuleSet load_ruleset(const std::string& path);
LemmaRuleSet parse_ruleset(std::istream& in, const std::string& name);
void save_ruleset(std::ostream& out, const LemmaRuleSet& rules);

/// One token resolved to its dictionary entry.
struct LemmaOccurrence {
    LemmaKey key;
    std::string component;  // contributing variant (У for a token counted under В)
    uint64_t token_index = 0;
    bool fallback = false;  // headword is just the uppercased surface
    bool rankless = false;  // detached particle: listed without a rank

    bool operator==(const LemmaOccurrence&) const = default;
};

/// A dictionary entry with its total frequency and the per-variant
/// breakdown ("В—728; У—241").
struct FrequencyRecord {
    LemmaKey key;
    uint64_t total = 0;
    std::map<std::string, uint64_t> components;
    bool rankless = false;
    uint64_t fallback_count = 0;

    bool operator==(const FrequencyRecord&) const = default;
};

/// Resolution order: detached rankless particle, annotation lemma,
/// lookup table, particle stripping on inflectable POS, then the
/// uppercased surface flagged as a fallback. Variant-group membership
/// rewrites the headword to the group canonical and keeps the original
/// form as the component.
LemmaOccurrence lemmatize(const AnnotatedToken& token, const LemmaRuleSet& rules);

std::vector<LemmaOccurrence> lemmatize_stream(std::span<const AnnotatedToken> tokens,
                                              const LemmaRuleSet& rules);
std::vector<LemmaOccurrence> lemmatize_stream_parallel(std::span<const AnnotatedToken> tokens,
                                                       const LemmaRuleSet& rules,
                                                       int threads = 0);

/// Serial reference aggregation: one record per distinct key, ordered by
/// key. Output is independent of occurrence order.
std::vector<FrequencyRecord> aggregate(std::span<const LemmaOccurrence> occurrences);

/// Sharded OpenMP aggregation with a deterministic merge; must match
/// aggregate() exactly.
std::vector<FrequencyRecord> aggregate_parallel(std::span<const LemmaOccurrence> occurrences,
                                                int threads = 0);

/// True if the POS label names an inflected class (noun, verb, adj, ...),
/// which is what licenses -но/-таки/-то stripping.
bool pos_is_inflectable(const std::string& pos);

}  // namespace lexfreq
