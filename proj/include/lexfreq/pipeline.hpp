#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexfreq/corpus.hpp"
#include "lexfreq/lemma.hpp"
#include "lexfreq/statistics.hpp"

namespace lexfreq {

struct AnalysisOptions {
    uint64_t threshold = 10;        // concentration cutoff
    bool exclude_rankless = false;  // drop detached particles before counting
    bool strict = false;            // fallback lemmas become errors
    bool parallel = false;          // use the OpenMP kernels
    int threads = 0;                // 0 = OpenMP default
};

/// Everything one corpus yields: the annotated token stream, resolved
/// occurrences, aggregated records and the index battery.
struct Analysis {
    std::string label;
    std::vector<AnnotatedToken> annotated;
    std::vector<LemmaOccurrence> occurrences;
    std::vector<FrequencyRecord> records;
    CorpusStats stats;
    uint64_t fallback_count = 0;

    double fallback_rate() const {
        return annotated.empty() ? 0.0
                                 : static_cast<double>(fallback_count) /
                                       static_cast<double>(annotated.size());
    }
};

/// tokenize -> merge -> lemmatize -> aggregate -> stats.
Analysis analyze(const RawCorpus& corpus, std::span<const AnnotationRow> rows,
                 const LemmaRuleSet& rules, const AnalysisOptions& options = {});

/// Same from an already annotated stream (used after prefix truncation).
Analysis analyze_tokens(std::vector<AnnotatedToken> annotated, std::string label,
                        const LemmaRuleSet& rules, const AnalysisOptions& options = {});

}  // namespace lexfreq
