#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lexfreq/pipeline.hpp"

namespace lexfreq {

/// Side-by-side statistics of two corpora evaluated at equal size: the
/// longer stream is cut to the shorter's token count, because vocabulary
/// does not grow linearly with text size and unequal samples are not
/// comparable.
struct ComparisonReport {
    std::string label_a;
    std::string label_b;
    uint64_t truncated_to = 0;
    CorpusStats stats_a;
    CorpusStats stats_b;
    // Full-length stats for whichever corpus was longer, when requested.
    std::optional<CorpusStats> full_a;
    std::optional<CorpusStats> full_b;
};

/// First n tokens of the stream, original order. Throws DataError when
/// n exceeds the stream length (the message names the available length).
std::vector<AnnotatedToken> truncate_prefix(std::span<const AnnotatedToken> tokens, uint64_t n);

/// Runs the full pipeline on both corpora at equal size. with_full also
/// evaluates the longer corpus at its natural length.
ComparisonReport compare(const RawCorpus& corpus_a, std::span<const AnnotationRow> rows_a,
                         const RawCorpus& corpus_b, std::span<const AnnotationRow> rows_b,
                         const LemmaRuleSet& rules, const AnalysisOptions& options = {},
                         bool with_full = false);

/// One row per statistics field, one column per corpus, deltas last.
void write_comparison_tsv(std::ostream& out, const ComparisonReport& report);

/// Aligned human-readable table with paper-style rounding.
void write_comparison_text(std::ostream& out, const ComparisonReport& report,
                           const FormatOptions& fmt);

}  // namespace lexfreq
