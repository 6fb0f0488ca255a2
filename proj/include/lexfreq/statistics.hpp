#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "lexfreq/format.hpp"
#include "lexfreq/lemma.hpp"

namespace lexfreq {

/// The index battery. Counts are exact; the ratios are kept at full
/// precision and rounded only when printed.
struct CorpusStats {
    uint64_t n = 0;        // token count N
    uint64_t v_forms = 0;  // distinct wordforms
    uint64_t v = 0;        // distinct lemmas
    uint64_t v1 = 0;       // hapax legomena
    uint64_t n10 = 0;      // tokens of lemmas at/above the threshold
    uint64_t v10 = 0;      // lemmas at/above the threshold
    double richness = 0;         // V/N
    double mean_repetition = 0;  // N/V
    double excl_text = 0;        // V1/N
    double excl_dict = 0;        // V1/V
    double conc_text = 0;        // N10/N
    double conc_dict = 0;        // V10/V

    bool operator==(const CorpusStats&) const = default;
};

/// Computes all fields. threshold is the concentration cutoff (default 10,
/// giving the classic N10/V10). Throws DataError on an empty corpus or
/// when record totals do not sum to n.
CorpusStats compute_stats(std::span<const FrequencyRecord> records, uint64_t n, uint64_t v_forms,
                          uint64_t threshold = 10);

/// Keys with frequency exactly 1; size is V1.
std::vector<LemmaKey> hapax_set(std::span<const FrequencyRecord> records);

/// (tokens, types) of records with total >= t. t=10 yields (N10, V10).
std::pair<uint64_t, uint64_t> threshold_mass(std::span<const FrequencyRecord> records,
                                             uint64_t t);

/// Flat key=value block with the paper-style rounding: three decimals for
/// the ratio indices, one for mean repetition.
void write_stats_text(std::ostream& out, const CorpusStats& s, const FormatOptions& fmt);

/// Machine-readable TSV, field<TAB>value, ratios at full precision.
void write_stats_tsv(std::ostream& out, const CorpusStats& s);

}  // namespace lexfreq
