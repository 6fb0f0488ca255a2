#include "lexfreq/compare.hpp"

#include <cstdio>
#include <iomanip>

#include "lexfreq/errors.hpp"

namespace lexfreq {

std::vector<AnnotatedToken> truncate_prefix(std::span<const AnnotatedToken> tokens, uint64_t n) {
    if (n > tokens.size())
        throw DataError("cannot truncate to " + std::to_string(n) + " tokens; only " +
                        std::to_string(tokens.size()) + " available");
    return {tokens.begin(), tokens.begin() + static_cast<ptrdiff_t>(n)};
}

ComparisonReport compare(const RawCorpus& corpus_a, std::span<const AnnotationRow> rows_a,
                         const RawCorpus& corpus_b, std::span<const AnnotationRow> rows_b,
                         const LemmaRuleSet& rules, const AnalysisOptions& options,
                         bool with_full) {
    Analysis full_a = analyze(corpus_a, rows_a, rules, options);
    Analysis full_b = analyze(corpus_b, rows_b, rules, options);

    const uint64_t len_a = full_a.annotated.size();
    const uint64_t len_b = full_b.annotated.size();
    const uint64_t target = std::min(len_a, len_b);

    ComparisonReport report;
    report.label_a = corpus_a.source_id;
    report.label_b = corpus_b.source_id;
    report.truncated_to = target;

    if (len_a == target) {
        report.stats_a = full_a.stats;
    } else {
        report.stats_a = analyze_tokens(truncate_prefix(full_a.annotated, target),
                                        full_a.label, rules, options)
                             .stats;
        if (with_full) report.full_a = full_a.stats;
    }
    if (len_b == target) {
        report.stats_b = full_b.stats;
    } else {
        report.stats_b = analyze_tokens(truncate_prefix(full_b.annotated, target),
                                        full_b.label, rules, options)
                             .stats;
        if (with_full) report.full_b = full_b.stats;
    }
    return report;
}

namespace {

struct Field {
    const char* name;
    double (*get)(const CorpusStats&);
    bool integer;
    int decimals;  // for the text table
};

constexpr Field kFields[] = {
    {"N", [](const CorpusStats& s) { return static_cast<double>(s.n); }, true, 0},
    {"V_forms", [](const CorpusStats& s) { return static_cast<double>(s.v_forms); }, true, 0},
    {"V", [](const CorpusStats& s) { return static_cast<double>(s.v); }, true, 0},
    {"V1", [](const CorpusStats& s) { return static_cast<double>(s.v1); }, true, 0},
    {"N10", [](const CorpusStats& s) { return static_cast<double>(s.n10); }, true, 0},
    {"V10", [](const CorpusStats& s) { return static_cast<double>(s.v10); }, true, 0},
    {"richness", [](const CorpusStats& s) { return s.richness; }, false, 3},
    {"mean_repetition", [](const CorpusStats& s) { return s.mean_repetition; }, false, 2},
    {"excl_text", [](const CorpusStats& s) { return s.excl_text; }, false, 3},
    {"excl_dict", [](const CorpusStats& s) { return s.excl_dict; }, false, 3},
    {"conc_text", [](const CorpusStats& s) { return s.conc_text; }, false, 3},
    {"conc_dict", [](const CorpusStats& s) { return s.conc_dict; }, false, 3},
};

std::string cell(const Field& f, const CorpusStats& s, const FormatOptions* fmt) {
    double v = f.get(s);
    if (f.integer) return std::to_string(static_cast<uint64_t>(v));
    if (fmt) return format_fixed(v, f.decimals, fmt->decimal);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void write_comparison_tsv(std::ostream& out, const ComparisonReport& r) {
    out << "field\t" << r.label_a << '\t' << r.label_b;
    if (r.full_a) out << '\t' << r.label_a << " (full)";
    if (r.full_b) out << '\t' << r.label_b << " (full)";
    out << "\tdelta\n";
    for (const Field& f : kFields) {
        out << f.name << '\t' << cell(f, r.stats_a, nullptr) << '\t'
            << cell(f, r.stats_b, nullptr);
        if (r.full_a) out << '\t' << cell(f, *r.full_a, nullptr);
        if (r.full_b) out << '\t' << cell(f, *r.full_b, nullptr);
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", f.get(r.stats_b) - f.get(r.stats_a));
        out << '\t' << buf << '\n';
    }
}

void write_comparison_text(std::ostream& out, const ComparisonReport& r,
                           const FormatOptions& fmt) {
    out << "comparison at first " << r.truncated_to << " tokens\n";
    size_t width = 0;
    for (const Field& f : kFields) width = std::max(width, std::string(f.name).size());
    auto line = [&](const std::string& name, const std::string& a, const std::string& b,
                    const std::string& extra) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << name << std::right
            << std::setw(14) << a << std::setw(14) << b;
        if (!extra.empty()) out << std::setw(14) << extra;
        out << '\n';
    };
    const CorpusStats* full = r.full_a ? &*r.full_a : r.full_b ? &*r.full_b : nullptr;
    line("field", r.label_a, r.label_b,
         full ? (r.full_a ? r.label_a : r.label_b) + " (full)" : "");
    for (const Field& f : kFields) {
        line(f.name, cell(f, r.stats_a, &fmt), cell(f, r.stats_b, &fmt),
             full ? cell(f, *full, &fmt) : "");
    }
}

}  // namespace lexfreq
