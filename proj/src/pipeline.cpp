#include "lexfreq/pipeline.hpp"

#include <unordered_set>

#include "lexfreq/errors.hpp"
#include "lexfreq/unicode.hpp"

namespace lexfreq {

Analysis analyze_tokens(std::vector<AnnotatedToken> annotated, std::string label,
                        const LemmaRuleSet& rules, const AnalysisOptions& options) {
    Analysis a;
    a.label = std::move(label);
    a.annotated = std::move(annotated);
    if (a.annotated.empty()) throw DataError(a.label + ": empty corpus");

    a.occurrences = options.parallel
                        ? lemmatize_stream_parallel(a.annotated, rules, options.threads)
                        : lemmatize_stream(a.annotated, rules);

    if (options.strict) {
        uint64_t fallbacks = 0;
        std::string first;
        for (const LemmaOccurrence& occ : a.occurrences) {
            if (occ.fallback) {
                if (fallbacks == 0) first = occ.key.headword;
                ++fallbacks;
            }
        }
        if (fallbacks > 0)
            throw DataError(a.label + ": " + std::to_string(fallbacks) +
                            " token(s) lemmatized by surface fallback under --strict (first: " +
                            first + ")");
    }

    std::vector<LemmaOccurrence> counted;
    uint64_t n;
    uint64_t v_forms;
    if (options.exclude_rankless) {
        // Drop particle occurrences everywhere: from N, from the records
        // and from the wordform census.
        std::unordered_set<uint64_t> excluded;
        for (const LemmaOccurrence& occ : a.occurrences)
            if (occ.rankless) excluded.insert(occ.token_index);
        std::unordered_set<std::string> forms;
        for (const AnnotatedToken& at : a.annotated)
            if (!excluded.count(at.token.index)) forms.insert(uni::upper_utf8(at.token.surface));
        v_forms = forms.size();
        counted.reserve(a.occurrences.size());
        for (const LemmaOccurrence& occ : a.occurrences)
            if (!occ.rankless) counted.push_back(occ);
        n = counted.size();
        if (n == 0) throw DataError(a.label + ": no tokens left after excluding particles");
        a.records = options.parallel ? aggregate_parallel(counted, options.threads)
                                     : aggregate(counted);
    } else {
        std::vector<Token> tokens;
        tokens.reserve(a.annotated.size());
        for (const AnnotatedToken& at : a.annotated) tokens.push_back(at.token);
        v_forms = distinct_wordform_count(tokens);
        n = a.occurrences.size();
        a.records = options.parallel ? aggregate_parallel(a.occurrences, options.threads)
                                     : aggregate(a.occurrences);
    }

    for (const FrequencyRecord& r : a.records) a.fallback_count += r.fallback_count;
    a.stats = compute_stats(a.records, n, v_forms, options.threshold);
    return a;
}

Analysis analyze(const RawCorpus& corpus, std::span<const AnnotationRow> rows,
                 const LemmaRuleSet& rules, const AnalysisOptions& options) {
    std::vector<Token> tokens = options.parallel
                                    ? tokenize_parallel(corpus.text, options.threads)
                                    : tokenize(corpus.text);
    return analyze_tokens(merge_annotations(tokens, rows), corpus.source_id, rules, options);
}

}  // namespace lexfreq
