#include "lexfreq/lemma.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lexfreq/errors.hpp"
#include "lexfreq/unicode.hpp"

namespace lexfreq {

namespace {

std::string lookup_key(const std::string& surface, const std::string& pos,
                       const std::string& sense) {
    return surface + '\t' + pos + '\t' + sense;
}

}  // namespace

void LemmaRuleSet::index() {
    member_to_group_.clear();
    rankless_.clear();
    no_merge_.clear();
    lookup_.clear();
    for (size_t g = 0; g < variant_groups.size(); ++g) {
        const VariantGroup& group = variant_groups[g];
        if (group.members.size() < 2)
            throw DataError("variant group " + group.canonical + " needs at least 2 members");
        if (std::find(group.members.begin(), group.members.end(), group.canonical) ==
            group.members.end())
            throw DataError("variant group canonical " + group.canonical +
                            " is not in its member list");
        for (const std::string& m : group.members) {
            auto [it, inserted] = member_to_group_.emplace(m, g);
            if (!inserted && it->second != g)
                throw DataError("variant member " + m + " appears in more than one group");
        }
    }
    for (const std::string& p : rankless_particles) rankless_.insert(p);
    for (const std::string& w : no_merge) {
        no_merge_.insert(w);
        if (member_to_group_.count(w))
            throw DataError("no-merge word " + w + " is also a variant group member");
    }
    for (const std::string& p : strip_particles) {
        if (p.size() < 2 || p[0] != '-')
            throw DataError("strip particle \"" + p + "\" must start with '-'");
    }
    for (const LookupEntry& e : lookup) {
        lookup_.emplace(lookup_key(e.surface, e.pos, e.sense), e.key);
    }
}

bool LemmaRuleSet::is_rankless(const std::string& folded_surface) const {
    return rankless_.count(folded_surface) != 0;
}

const VariantGroup* LemmaRuleSet::group_of(const std::string& headword) const {
    auto it = member_to_group_.find(headword);
    return it == member_to_group_.end() ? nullptr : &variant_groups[it->second];
}

bool LemmaRuleSet::is_no_merge(const std::string& headword) const {
    return no_merge_.count(headword) != 0;
}

const LemmaKey* LemmaRuleSet::find_lookup(const std::string& folded_surface,
                                          const std::string& pos,
                                          const std::string& sense) const {
    // Most specific first; empty annotation fields only match empty slots.
    const std::string* tries[4][2] = {
        {&pos, &sense},
        {&pos, nullptr},
        {nullptr, &sense},
        {nullptr, nullptr},
    };
    static const std::string empty;
    for (auto& t : tries) {
        const std::string& p = t[0] ? *t[0] : empty;
        const std::string& s = t[1] ? *t[1] : empty;
        auto it = lookup_.find(lookup_key(folded_surface, p, s));
        if (it != lookup_.end()) return &it->second;
    }
    return nullptr;
}

LemmaRuleSet default_ruleset() {
    LemmaRuleSet r;
    auto group = [&](std::string canonical, std::vector<std::string> members) {
        r.variant_groups.push_back({std::move(canonical), std::move(members)});
    };
    group("І", {"І", "Й"});
    group("В", {"В", "У"});
    group("З", {"З", "ІЗ", "ЗІ", "ЗО"});
    group("ЩОБИ", {"ЩОБИ", "ЩОБ"});
    group("Ж", {"Ж", "ЖЕ"});
    group("БИ", {"БИ", "Б"});
    group("ЩЕ", {"ЩЕ", "ІЩЕ"});
    group("ВЖЕ", {"ВЖЕ", "УЖЕ"});
    group("ВЕСЬ", {"ВЕСЬ", "УВЕСЬ", "ВВЕСЬ"});
    group("ІТИ", {"ІТИ", "ЙТИ"});
    group("ЛЕДВЕ", {"ЛЕДВЕ", "ЛЕДВО"});
    group("ТРОХИ", {"ТРОХИ", "ТРОХА"});
    group("ВЛОЖИТИ", {"ВЛОЖИТИ", "УЛОЖИТИ"});
    group("ВСЯКИЙ", {"ВСЯКИЙ", "УСЯКИЙ"});
    group("ВУЛИЦЯ", {"ВУЛИЦЯ", "УЛИЦЯ"});
    group("ВУХО", {"ВУХО", "УХО"});
    r.rankless_particles = {"СЯ", "СЬ"};
    r.strip_particles = {"-НО", "-ТАКИ", "-ТО"};
    r.no_merge = {"ВЛЮБЛЕНИЙ", "УЛЮБЛЕНИЙ", "ВКЛАД", "УКЛАД", "ВПАДАТИ", "УПАДАТИ"};
    r.index();
    return r;
}

bool pos_is_inflectable(const std::string& pos) {
    static const std::unordered_set<std::string> kInflectable = {
        "noun", "verb", "adj", "adjective", "pron", "pronoun", "num", "numeral",
        "participle", "ім.", "ім", "дієсл.", "дієсл", "прикм.", "прикм",
        "займ.", "займ", "числ.", "числ", "дієприкм.", "дієприкм",
    };
    return kInflectable.count(pos) != 0;
}

LemmaOccurrence lemmatize(const AnnotatedToken& token, const LemmaRuleSet& rules) {
    const std::string folded = uni::upper_utf8(token.token.surface);

    LemmaOccurrence occ;
    occ.token_index = token.token.index;

    if (rules.is_rankless(folded)) {
        occ.key.headword = "-" + folded;
        occ.component = occ.key.headword;
        occ.rankless = true;
        return occ;
    }

    std::string headword;
    if (!token.lemma.empty()) {
        headword = uni::upper_utf8(token.lemma);
        occ.key.disambiguator = token.sense;
    } else if (const LemmaKey* hit = rules.find_lookup(folded, token.pos, token.sense)) {
        headword = hit->headword;
        occ.key.disambiguator = hit->disambiguator;
    } else {
        headword = folded;
        if (pos_is_inflectable(token.pos)) {
            for (const std::string& particle : rules.strip_particles) {
                if (headword.size() > particle.size() &&
                    headword.compare(headword.size() - particle.size(), particle.size(),
                                     particle) == 0) {
                    headword.resize(headword.size() - particle.size());
                    break;
                }
            }
        }
        occ.key.disambiguator = token.sense;
        occ.fallback = headword == folded;
    }

    occ.component = headword;
    if (!rules.is_no_merge(headword)) {
        if (const VariantGroup* group = rules.group_of(headword)) {
            // A token of a variant group keeps its own spoken form as the
            // component: "й" counts under І but is listed as Й.
            if (std::find(group->members.begin(), group->members.end(), folded) !=
                group->members.end()) {
                occ.component = folded;
            }
            headword = group->canonical;
        }
    }
    occ.key.headword = std::move(headword);
    return occ;
}

std::vector<LemmaOccurrence> lemmatize_stream(std::span<const AnnotatedToken> tokens,
                                              const LemmaRuleSet& rules) {
    std::vector<LemmaOccurrence> out;
    out.reserve(tokens.size());
    for (const AnnotatedToken& t : tokens) out.push_back(lemmatize(t, rules));
    return out;
}

std::vector<LemmaOccurrence> lemmatize_stream_parallel(std::span<const AnnotatedToken> tokens,
                                                       const LemmaRuleSet& rules, int threads) {
    std::vector<LemmaOccurrence> out(tokens.size());
#ifdef _OPENMP
    const int64_t n = static_cast<int64_t>(tokens.size());
    if (threads > 0) {
#pragma omp parallel for schedule(static) num_threads(threads)
        for (int64_t i = 0; i < n; ++i) out[i] = lemmatize(tokens[i], rules);
    } else {
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < n; ++i) out[i] = lemmatize(tokens[i], rules);
    }
#else
    (void)threads;
    for (size_t i = 0; i < tokens.size(); ++i) out[i] = lemmatize(tokens[i], rules);
#endif
    return out;
}

std::vector<FrequencyRecord> aggregate(std::span<const LemmaOccurrence> occurrences) {
    std::map<LemmaKey, FrequencyRecord> acc;
    for (const LemmaOccurrence& occ : occurrences) {
        FrequencyRecord& rec = acc[occ.key];
        if (rec.total == 0) rec.key = occ.key;
        rec.rankless = rec.rankless || occ.rankless;
        rec.total += 1;
        rec.components[occ.component] += 1;
        if (occ.fallback) rec.fallback_count += 1;
    }
    std::vector<FrequencyRecord> out;
    out.reserve(acc.size());
    for (auto& [key, rec] : acc) out.push_back(std::move(rec));
    return out;
}

std::vector<FrequencyRecord> aggregate_parallel(std::span<const LemmaOccurrence> occurrences,
                                                int threads) {
#ifndef _OPENMP
    (void)threads;
    return aggregate(occurrences);
#else
    int shards = threads > 0 ? threads : omp_get_max_threads();
    if (shards <= 1 || occurrences.size() < 4096) return aggregate(occurrences);

    std::hash<std::string> hasher;
    std::vector<std::map<LemmaKey, FrequencyRecord>> shard_acc(shards);
#pragma omp parallel num_threads(shards)
    {
        // Every thread scans the whole stream but owns a disjoint key
        // shard, so the merge needs no locking and stays deterministic.
        int me = omp_get_thread_num();
        auto& acc = shard_acc[me];
        for (const LemmaOccurrence& occ : occurrences) {
            if (static_cast<int>(hasher(occ.key.headword) % shards) != me) continue;
            FrequencyRecord& rec = acc[occ.key];
            if (rec.total == 0) rec.key = occ.key;
            rec.rankless = rec.rankless || occ.rankless;
            rec.total += 1;
            rec.components[occ.component] += 1;
            if (occ.fallback) rec.fallback_count += 1;
        }
    }
    std::map<LemmaKey, FrequencyRecord> merged;
    for (auto& shard : shard_acc)
        for (auto& [key, rec] : shard) merged.emplace(key, std::move(rec));
    std::vector<FrequencyRecord> out;
    out.reserve(merged.size());
    for (auto& [key, rec] : merged) out.push_back(std::move(rec));
    return out;
#endif
}

namespace {

enum class Section { none, variants, rankless, strip, nomerge, lookup };

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            if (start < s.size()) out.push_back(s.substr(start));
            return out;
        }
        if (comma > start) out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

LemmaRuleSet parse_ruleset(std::istream& in, const std::string& name) {
    LemmaRuleSet r;
    Section section = Section::none;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line[0] == '[') {
            if (line == "[variants]") section = Section::variants;
            else if (line == "[rankless]") section = Section::rankless;
            else if (line == "[strip]") section = Section::strip;
            else if (line == "[nomerge]") section = Section::nomerge;
            else if (line == "[lookup]") section = Section::lookup;
            else throw DataError(name + ":" + std::to_string(lineno) + ": unknown section " + line);
            continue;
        }
        switch (section) {
            case Section::none:
                throw DataError(name + ":" + std::to_string(lineno) +
                                ": content before any [section]");
            case Section::variants: {
                std::vector<std::string> cols = split_tabs(line);
                if (cols.size() != 2)
                    throw DataError(name + ":" + std::to_string(lineno) +
                                    ": expected canonical<TAB>member,member,...");
                r.variant_groups.push_back(
                    {uni::upper_utf8(cols[0]), {}});
                for (const std::string& m : split_commas(cols[1]))
                    r.variant_groups.back().members.push_back(uni::upper_utf8(m));
                break;
            }
            case Section::rankless:
                r.rankless_particles.push_back(uni::upper_utf8(line));
                break;
            case Section::strip:
                r.strip_particles.push_back(uni::upper_utf8(line));
                break;
            case Section::nomerge:
                r.no_merge.push_back(uni::upper_utf8(line));
                break;
            case Section::lookup: {
                std::vector<std::string> cols = split_tabs(line);
                if (cols.size() != 5)
                    throw DataError(name + ":" + std::to_string(lineno) +
                                    ": expected surface<TAB>pos<TAB>sense<TAB>headword<TAB>"
                                    "disambiguator");
                LookupEntry e;
                e.surface = uni::upper_utf8(cols[0]);
                e.pos = cols[1];
                e.sense = cols[2];
                e.key.headword = uni::upper_utf8(cols[3]);
                e.key.disambiguator = cols[4];
                r.lookup.push_back(std::move(e));
                break;
            }
        }
    }
    try {
        r.index();
    } catch (const DataError& e) {
        throw DataError(name + ": " + e.what());
    }
    return r;
}

LemmaRuleSet load_ruleset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open ruleset file: " + path);
    return parse_ruleset(in, path);
}

void save_ruleset(std::ostream& out, const LemmaRuleSet& rules) {
    out << "[variants]\n";
    for (const VariantGroup& g : rules.variant_groups) {
        out << g.canonical << '\t';
        for (size_t i = 0; i < g.members.size(); ++i) {
            if (i) out << ',';
            out << g.members[i];
        }
        out << '\n';
    }
    out << "[rankless]\n";
    for (const std::string& p : rules.rankless_particles) out << p << '\n';
    out << "[strip]\n";
    for (const std::string& p : rules.strip_particles) out << p << '\n';
    out << "[nomerge]\n";
    for (const std::string& w : rules.no_merge) out << w << '\n';
    out << "[lookup]\n";
    for (const LookupEntry& e : rules.lookup) {
        out << e.surface << '\t' << e.pos << '\t' << e.sense << '\t' << e.key.headword << '\t'
            << e.key.disambiguator << '\n';
    }
}

}  // namespace lexfreq
