#include "lexfreq/dictionary.hpp"

#include <algorithm>

#include "lexfreq/errors.hpp"

namespace lexfreq {

std::vector<DictionaryEntry> build_dictionary(std::span<const FrequencyRecord> records,
                                              uint64_t n, RanklessMode mode) {
    if (records.empty()) throw DataError("cannot build a dictionary from zero records");

    std::vector<const FrequencyRecord*> sorted;
    sorted.reserve(records.size());
    uint64_t kept_mass = 0;
    for (const FrequencyRecord& r : records) {
        if (mode == RanklessMode::fold && r.rankless) continue;
        sorted.push_back(&r);
        kept_mass += r.total;
    }
    if (sorted.empty()) throw DataError("all records are rankless; nothing to rank");

    std::sort(sorted.begin(), sorted.end(), [](const FrequencyRecord* a, const FrequencyRecord* b) {
        if (a->total != b->total) return a->total > b->total;
        if (a->key.headword != b->key.headword) return a->key.headword < b->key.headword;
        return a->key.disambiguator < b->key.disambiguator;
    });

    // Folding removes mass from the denominator so coverage still ends at 100.
    const uint64_t denom = mode == RanklessMode::fold ? kept_mass : n;
    if (denom == 0) throw DataError("cannot build a dictionary over zero tokens");

    std::vector<DictionaryEntry> out;
    out.reserve(sorted.size());
    uint64_t cumulative = 0;
    uint64_t next_rank = 1;
    for (const FrequencyRecord* r : sorted) {
        cumulative += r->total;
        DictionaryEntry e;
        e.lemma = r->key;
        e.components = r->components;
        e.total = r->total;
        e.rankless = r->rankless;
        if (!r->rankless) e.rank = next_rank++;
        e.rel_freq_pct = 100.0 * static_cast<double>(r->total) / static_cast<double>(denom);
        e.coverage_pct = 100.0 * static_cast<double>(cumulative) / static_cast<double>(denom);
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

uint64_t max_rank_of(std::span<const DictionaryEntry> entries) {
    uint64_t max_rank = 0;
    for (const DictionaryEntry& e : entries)
        if (e.rank) max_rank = std::max(max_rank, *e.rank);
    return max_rank;
}

}  // namespace

std::vector<CoveragePoint> coverage_table(std::span<const DictionaryEntry> entries,
                                          std::span<const uint64_t> ranks) {
    const uint64_t max_rank = max_rank_of(entries);
    std::vector<double> by_rank(max_rank + 1, 0.0);
    for (const DictionaryEntry& e : entries)
        if (e.rank) by_rank[*e.rank] = e.coverage_pct;
    std::vector<CoveragePoint> out;
    out.reserve(ranks.size());
    for (uint64_t r : ranks) {
        if (r < 1 || r > max_rank)
            throw DataError("rank " + std::to_string(r) + " out of range (max rank is " +
                            std::to_string(max_rank) + ")");
        out.push_back({r, by_rank[r]});
    }
    return out;
}

std::vector<CoveragePoint> plot_data(std::span<const DictionaryEntry> entries) {
    std::vector<CoveragePoint> out;
    for (const DictionaryEntry& e : entries)
        if (e.rank) out.push_back({*e.rank, e.coverage_pct});
    return out;
}

std::string render_components(const DictionaryEntry& entry) {
    if (entry.components.empty()) return entry.lemma.headword;
    if (entry.components.size() == 1 && entry.components.begin()->first == entry.lemma.headword)
        return entry.lemma.headword;

    std::vector<std::pair<std::string, uint64_t>> parts(entry.components.begin(),
                                                        entry.components.end());
    const std::string& head = entry.lemma.headword;
    std::sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
        if ((a.first == head) != (b.first == head)) return a.first == head;
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "; ";
        out += parts[i].first;
        out += "—";  // em dash, as frequency dictionaries print it
        out += std::to_string(parts[i].second);
    }
    return out;
}

namespace {

void emit_row(std::ostream& out, const DictionaryEntry& e, const FormatOptions& fmt) {
    if (e.rank) out << *e.rank;
    out << '\t' << e.lemma.display() << '\t';
    if (e.components.size() > 1 ||
        (e.components.size() == 1 && e.components.begin()->first != e.lemma.headword))
        out << render_components(e);
    out << '\t' << e.total << '\t' << format_fixed(e.rel_freq_pct, 2, fmt.decimal) << '\t'
        << format_fixed(e.coverage_pct, 2, fmt.decimal) << '\n';
}

}  // namespace

void emit(std::ostream& out, std::span<const DictionaryEntry> entries, DictOrder order,
          const FormatOptions& fmt) {
    out << kDictionaryHeader << '\n';
    if (order == DictOrder::frequency_alphabetic) {
        for (const DictionaryEntry& e : entries) emit_row(out, e, fmt);
        return;
    }
    std::vector<const DictionaryEntry*> alpha;
    alpha.reserve(entries.size());
    for (const DictionaryEntry& e : entries) alpha.push_back(&e);
    std::sort(alpha.begin(), alpha.end(), [](const DictionaryEntry* a, const DictionaryEntry* b) {
        if (a->lemma.headword != b->lemma.headword) return a->lemma.headword < b->lemma.headword;
        return a->lemma.disambiguator < b->lemma.disambiguator;
    });
    for (const DictionaryEntry* e : alpha) emit_row(out, *e, fmt);
}

void write_plot_tsv(std::ostream& out, std::span<const CoveragePoint> points,
                    const FormatOptions& fmt) {
    for (const CoveragePoint& p : points)
        out << p.rank << '\t' << format_fixed(p.coverage_pct, 2, fmt.decimal) << '\n';
}

void write_top_table(std::ostream& out, std::span<const DictionaryEntry> entries, uint64_t k,
                     const FormatOptions& fmt) {
    out << "Rank\tLemma\tAbs\tRel,%\tCoverage,%\n";
    uint64_t shown_ranks = 0;
    for (const DictionaryEntry& e : entries) {
        if (shown_ranks >= k) break;
        if (e.rank) {
            out << *e.rank;
            ++shown_ranks;
        }
        std::string lemma = render_components(e);
        if (!e.lemma.disambiguator.empty()) lemma += "(" + e.lemma.disambiguator + ")";
        out << '\t' << lemma << '\t' << e.total << '\t'
            << format_fixed(e.rel_freq_pct, 2, fmt.decimal) << '\t';
        if (e.rank) out << format_fixed(e.coverage_pct, 2, fmt.decimal);
        out << '\n';
    }
}

std::vector<uint64_t> default_coverage_ranks(uint64_t max_rank) {
    static constexpr uint64_t ladder[] = {1,   5,   10,  25,  50,   75,   100,  200,  300, 400,
                                          500, 600, 750, 1000, 1500, 2000, 3000, 4000, 5000, 6000};
    std::vector<uint64_t> out;
    for (uint64_t r : ladder) {
        if (r > max_rank) break;
        out.push_back(r);
    }
    // extend the ladder for very large dictionaries
    for (uint64_t r = 10000; r < max_rank; r += (r < 100000 ? 10000 : 100000)) out.push_back(r);
    if (max_rank > 0 && (out.empty() || out.back() != max_rank)) out.push_back(max_rank);
    return out;
}

}  // namespace lexfreq
