#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lexfreq/format.hpp"
#include "lexfreq/lemma.hpp"

namespace lexfreq {

/// One dictionary row. Rankless particle rows carry no rank but occupy
/// their frequency-sorted position and feed the cumulative coverage.
struct DictionaryEntry {
    std::optional<uint64_t> rank;
    LemmaKey lemma;
    std::map<std::string, uint64_t> components;
    uint64_t total = 0;
    double rel_freq_pct = 0;   // 100 * total / N
    double coverage_pct = 0;   // cumulative through this row
    bool rankless = false;

    bool operator==(const DictionaryEntry&) const = default;
};

struct CoveragePoint {
    uint64_t rank = 0;
    double coverage_pct = 0;

    bool operator==(const CoveragePoint&) const = default;
};

enum class RanklessMode {
    keep,  // rankless rows stay in place, unranked, counted in coverage
    fold,  // rankless rows dropped; percentages over the remaining mass
};

enum class DictOrder {
    frequency_alphabetic,  // descending frequency, alphabetic tie-break
    alphabetic_frequency,  // headword order with frequencies attached
};

inline constexpr const char* kDictionaryHeader = "#lexfreq-dict v1";

/// Sorts records by (total desc, headword asc, disambiguator asc) and
/// assigns consecutive ranks to non-rankless rows. n is the corpus size
/// used as the percentage denominator in keep mode.
std::vector<DictionaryEntry> build_dictionary(std::span<const FrequencyRecord> records,
                                              uint64_t n,
                                              RanklessMode mode = RanklessMode::keep);

/// Coverage at each requested rank: the share of text accounted for by
/// all rows up to and including the row holding that rank. Throws
/// DataError for ranks outside the dictionary.
std::vector<CoveragePoint> coverage_table(std::span<const DictionaryEntry> entries,
                                          std::span<const uint64_t> ranks);

/// Dense per-rank coverage series for plotting; one point per ranked row.
std::vector<CoveragePoint> plot_data(std::span<const DictionaryEntry> entries);

/// "В—728; У—241" for composite entries, the bare headword otherwise.
/// The canonical form leads; other components follow by count descending.
std::string render_components(const DictionaryEntry& entry);

/// Dictionary TSV: rank, lemma, components, abs_freq, rel_freq_pct,
/// coverage_pct. The rank column is empty on rankless rows.
void emit(std::ostream& out, std::span<const DictionaryEntry> entries, DictOrder order,
          const FormatOptions& fmt);

/// Plot-data TSV: rank<TAB>coverage_pct.
void write_plot_tsv(std::ostream& out, std::span<const CoveragePoint> points,
                    const FormatOptions& fmt);

/// Human-readable head of the dictionary in the classic five-column
/// presentation (rank, lemma with variants, abs, rel %, coverage %).
void write_top_table(std::ostream& out, std::span<const DictionaryEntry> entries, uint64_t k,
                     const FormatOptions& fmt);

/// The conventional rank ladder (1, 5, 10, 25, 50, 75, 100, 200, ...)
/// clipped to max_rank, with max_rank itself always included.
std::vector<uint64_t> default_coverage_ranks(uint64_t max_rank);

}  // namespace lexfreq
