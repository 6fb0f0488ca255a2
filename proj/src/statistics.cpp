#include "lexfreq/statistics.hpp"

#include <cstdio>

#include "lexfreq/errors.hpp"

namespace lexfreq {

CorpusStats compute_stats(std::span<const FrequencyRecord> records, uint64_t n, uint64_t v_forms,
                          uint64_t threshold) {
    if (n == 0) throw DataError("empty corpus: statistics are undefined for N = 0");
    if (threshold < 1) throw DataError("concentration threshold must be >= 1");
    uint64_t sum = 0;
    for (const FrequencyRecord& r : records) sum += r.total;
    if (sum != n)
        throw DataError("record totals sum to " + std::to_string(sum) + ", expected N = " +
                        std::to_string(n));

    CorpusStats s;
    s.n = n;
    s.v_forms = v_forms;
    s.v = records.size();
    for (const FrequencyRecord& r : records) {
        if (r.total == 1) ++s.v1;
        if (r.total >= threshold) {
            s.n10 += r.total;
            ++s.v10;
        }
    }
    s.richness = static_cast<double>(s.v) / static_cast<double>(s.n);
    s.mean_repetition = static_cast<double>(s.n) / static_cast<double>(s.v);
    s.excl_text = static_cast<double>(s.v1) / static_cast<double>(s.n);
    s.excl_dict = static_cast<double>(s.v1) / static_cast<double>(s.v);
    s.conc_text = static_cast<double>(s.n10) / static_cast<double>(s.n);
    s.conc_dict = static_cast<double>(s.v10) / static_cast<double>(s.v);
    return s;
}

std::vector<LemmaKey> hapax_set(std::span<const FrequencyRecord> records) {
    std::vector<LemmaKey> out;
    for (const FrequencyRecord& r : records)
        if (r.total == 1) out.push_back(r.key);
    return out;
}

std::pair<uint64_t, uint64_t> threshold_mass(std::span<const FrequencyRecord> records,
                                             uint64_t t) {
    if (t < 1) throw DataError("threshold must be >= 1");
    uint64_t tokens = 0, types = 0;
    for (const FrequencyRecord& r : records) {
        if (r.total >= t) {
            tokens += r.total;
            ++types;
        }
    }
    return {tokens, types};
}

void write_stats_text(std::ostream& out, const CorpusStats& s, const FormatOptions& fmt) {
    Decimal d = fmt.decimal;
    out << "N=" << s.n << '\n';
    out << "V_forms=" << s.v_forms << '\n';
    out << "V=" << s.v << '\n';
    out << "V1=" << s.v1 << '\n';
    out << "N10=" << s.n10 << '\n';
    out << "V10=" << s.v10 << '\n';
    out << "richness=" << format_fixed(s.richness, 3, d) << '\n';
    out << "mean_repetition=" << format_fixed(s.mean_repetition, 1, d) << '\n';
    out << "excl_text=" << format_fixed(s.excl_text, 3, d) << '\n';
    out << "excl_dict=" << format_fixed(s.excl_dict, 3, d) << '\n';
    out << "conc_text=" << format_fixed(s.conc_text, 3, d) << '\n';
    out << "conc_dict=" << format_fixed(s.conc_dict, 3, d) << '\n';
}

namespace {

std::string full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

void write_stats_tsv(std::ostream& out, const CorpusStats& s) {
    out << "N\t" << s.n << '\n';
    out << "V_forms\t" << s.v_forms << '\n';
    out << "V\t" << s.v << '\n';
    out << "V1\t" << s.v1 << '\n';
    out << "N10\t" << s.n10 << '\n';
    out << "V10\t" << s.v10 << '\n';
    out << "richness\t" << full(s.richness) << '\n';
    out << "mean_repetition\t" << full(s.mean_repetition) << '\n';
    out << "excl_text\t" << full(s.excl_text) << '\n';
    out << "excl_dict\t" << full(s.excl_dict) << '\n';
    out << "conc_text\t" << full(s.conc_text) << '\n';
    out << "conc_dict\t" << full(s.conc_dict) << '\n';
}

}  // namespace lexfreq
