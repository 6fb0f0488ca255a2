#pragma once

// Test-only brute-force oracles and corpus generators. These recount
// everything from scratch with plain maps and loops and must stay
// independent of the library's own aggregation/sorting paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lexfreq/corpus.hpp"
#include "lexfreq/dictionary.hpp"
#include "lexfreq/lemma.hpp"
#include "lexfreq/statistics.hpp"
#include "lexfreq/unicode.hpp"

namespace testutil {

using KeyPair = std::pair<std::string, std::string>;  // headword, disambiguator

struct NaiveRecord {
    uint64_t total = 0;
    std::map<std::string, uint64_t> components;
    bool rankless = false;
    uint64_t fallbacks = 0;
};

using NaiveCounts = std::map<KeyPair, NaiveRecord>;

inline NaiveCounts naive_recount(const std::vector<lexfreq::LemmaOccurrence>& occs) {
    NaiveCounts out;
    for (const auto& o : occs) {
        NaiveRecord& r = out[{o.key.headword, o.key.disambiguator}];
        r.total += 1;
        r.components[o.component] += 1;
        if (o.rankless) r.rankless = true;
        if (o.fallback) r.fallbacks += 1;
    }
    return out;
}

struct NaiveStats {
    uint64_t n = 0, v = 0, v1 = 0, nt = 0, vt = 0;
};

inline NaiveStats naive_stats(const NaiveCounts& counts, uint64_t threshold) {
    NaiveStats s;
    for (const auto& [key, rec] : counts) {
        s.n += rec.total;
        s.v += 1;
        if (rec.total == 1) s.v1 += 1;
        if (rec.total >= threshold) {
            s.nt += rec.total;
            s.vt += 1;
        }
    }
    return s;
}

struct NaiveRow {
    KeyPair key;
    uint64_t total = 0;
    std::map<std::string, uint64_t> components;
    bool rankless = false;
    uint64_t rank = 0;  // 0 = rankless
    double rel = 0;
    double coverage = 0;
};

/// Frequency-descending rows with code-point tie-break, integer cumsum.
inline std::vector<NaiveRow> naive_dictionary(const NaiveCounts& counts, uint64_t n) {
    std::vector<NaiveRow> rows;
    for (const auto& [key, rec] : counts) {
        NaiveRow row;
        row.key = key;
        row.total = rec.total;
        row.components = rec.components;
        row.rankless = rec.rankless;
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const NaiveRow& a, const NaiveRow& b) {
        if (a.total != b.total) return a.total > b.total;
        return a.key < b.key;
    });
    uint64_t cum = 0, next = 1;
    for (NaiveRow& row : rows) {
        cum += row.total;
        if (!row.rankless) row.rank = next++;
        row.rel = 100.0 * static_cast<double>(row.total) / static_cast<double>(n);
        row.coverage = 100.0 * static_cast<double>(cum) / static_cast<double>(n);
    }
    return rows;
}

// --- generators -----------------------------------------------------------

/// Zipf-ish weights: w_i ~ 1/(i+1)^s.
inline std::vector<double> zipf_weights(size_t vocab, double s) {
    std::vector<double> w(vocab);
    for (size_t i = 0; i < vocab; ++i) w[i] = 1.0 / std::pow(static_cast<double>(i + 1), s);
    return w;
}

/// Synthetic vocabulary: surfaces like "слово12"; a slice of the vocab is
/// given inflected variants via the lemma annotation, some words carry
/// sense tags, and a few tokens are detached particles.
struct SyntheticCorpus {
    std::string text;
    std::vector<lexfreq::AnnotationRow> rows;
};

inline SyntheticCorpus make_synthetic_corpus(std::mt19937& rng, size_t n_tokens, bool zipf,
                                             bool with_annotations) {
    static const char* kStems[] = {"крок", "дім", "ліс", "вода", "ніч", "рука",
                                   "слово", "місто", "сад", "день"};
    static const char* kSuffix[] = {"", "ба", "ве", "го", "ди", "же", "зу", "ки", "ло", "ми",
                                    "ня", "пе", "ру", "си", "ту", "фа", "хи", "цо", "ч", "ш"};
    const size_t vocab = 20 + rng() % 180;
    std::vector<std::string> surfaces(vocab);
    for (size_t i = 0; i < vocab; ++i)
        surfaces[i] = std::string(kStems[i % 10]) + kSuffix[i / 10];

    std::vector<double> w =
        zipf ? zipf_weights(vocab, 1.1) : std::vector<double>(vocab, 1.0);
    std::discrete_distribution<size_t> pick(w.begin(), w.end());

    SyntheticCorpus out;
    for (size_t t = 0; t < n_tokens; ++t) {
        size_t word = pick(rng);
        std::string surface = surfaces[word];
        lexfreq::AnnotationRow row;
        row.token_index = t;
        bool annotated = false;
        if (with_annotations && word % 3 == 0) {
            // simulate an inflected form resolved to its lemma
            surface += (rng() % 2) ? "а" : "ом";
            row.lemma = lexfreq::uni::upper_utf8(surfaces[word]);
            annotated = true;
        }
        if (with_annotations && word % 7 == 0) {
            row.sense = (word % 2) ? "спол." : "займ.";
            annotated = true;
        }
        if (with_annotations && rng() % 97 == 0) {
            surface = "ся";  // detached reflexive particle
            row = lexfreq::AnnotationRow{};
            row.token_index = t;
            annotated = false;
        }
        row.surface = surface;
        if (annotated) out.rows.push_back(row);
        if (t) out.text += ' ';
        out.text += surface;
    }
    return out;
}

/// Occurrence streams straight from random keys; exercises aggregation,
/// statistics and ranking without the text front end.
inline std::vector<lexfreq::LemmaOccurrence> make_synthetic_occurrences(std::mt19937& rng,
                                                                        size_t n, bool zipf) {
    const size_t vocab = 10 + rng() % 490;
    std::vector<double> w =
        zipf ? zipf_weights(vocab, 1.2) : std::vector<double>(vocab, 1.0);
    std::discrete_distribution<size_t> pick(w.begin(), w.end());
    std::vector<lexfreq::LemmaOccurrence> occs;
    occs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        size_t word = pick(rng);
        lexfreq::LemmaOccurrence o;
        o.key.headword = "W" + std::to_string(word);
        if (word % 11 == 0) o.key.disambiguator = (word % 2) ? "a" : "b";
        o.component = (word % 5 == 0 && rng() % 2) ? o.key.headword + "V" : o.key.headword;
        o.token_index = i;
        o.rankless = word % 37 == 0;
        o.fallback = word % 13 == 0;
        occs.push_back(std::move(o));
    }
    return occs;
}

}  // namespace testutil
