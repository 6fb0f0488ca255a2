#include "lexfreq/corpus.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "lexfreq/errors.hpp"
#include "lexfreq/unicode.hpp"

namespace lexfreq {

namespace {

std::string unify_newlines(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r') {
            out.push_back('\n');
            if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        } else {
            out.push_back(text[i]);
        }
    }
    return out;
}

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

[[noreturn]] void parse_fail(const std::string& name, size_t lineno, const std::string& what) {
    std::ostringstream os;
    os << name << ":" << lineno << ": " << what;
    throw DataError(os.str());
}

}  // namespace

RawCorpus make_corpus(std::string text, std::string source_id, bool nfc) {
    uni::decode_utf8(text);  // validation only; throws with byte offset
    RawCorpus c;
    c.text = unify_newlines(text);
    if (nfc) c.text = uni::compose_utf8(c.text);
    c.source_id = std::move(source_id);
    return c;
}

RawCorpus load_corpus(const std::string& path, bool nfc) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return make_corpus(buf.str(), path, nfc);
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

std::vector<AnnotationRow> parse_annotations(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line)) throw DataError(name + ": empty annotation file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kAnnotationHeader)
        throw DataError(name + ": missing header line \"" + kAnnotationHeader + "\"");

    std::vector<AnnotationRow> rows;
    size_t lineno = 1;
    bool have_prev = false;
    uint64_t prev_index = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cols = split_tabs(line);
        if (cols.size() != 5)
            parse_fail(name, lineno, "expected 5 tab-separated columns, got " +
                                         std::to_string(cols.size()));
        AnnotationRow row;
        const std::string& ix = cols[0];
        auto [ptr, ec] = std::from_chars(ix.data(), ix.data() + ix.size(), row.token_index);
        if (ec != std::errc() || ptr != ix.data() + ix.size())
            parse_fail(name, lineno, "non-numeric token_index \"" + ix + "\"");
        if (have_prev && row.token_index <= prev_index)
            parse_fail(name, lineno, "non-increasing index " + std::to_string(row.token_index) +
                                         " after " + std::to_string(prev_index));
        prev_index = row.token_index;
        have_prev = true;
        row.surface = cols[1];
        row.pos = cols[2];
        row.lemma = cols[3];
        row.sense = cols[4];
        if (row.surface.empty()) parse_fail(name, lineno, "empty surface");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<AnnotationRow> load_annotations(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("annotation file not found: " + path);
    return parse_annotations(in, path);
}

std::vector<AnnotatedToken> merge_annotations(std::span<const Token> tokens,
                                              std::span<const AnnotationRow> rows) {
    std::vector<AnnotatedToken> out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) out.push_back(AnnotatedToken{t, "", "", ""});
    for (const AnnotationRow& row : rows) {
        if (row.token_index >= tokens.size()) {
            throw DataError("annotation index " + std::to_string(row.token_index) +
                            " out of range (corpus has " + std::to_string(tokens.size()) +
                            " tokens)");
        }
        AnnotatedToken& at = out[row.token_index];
        if (row.surface != at.token.surface) {
            throw DataError("annotation surface mismatch at index " +
                            std::to_string(row.token_index) + ": expected \"" +
                            at.token.surface + "\", found \"" + row.surface + "\"");
        }
        at.pos = row.pos;
        at.lemma = row.lemma;
        at.sense = row.sense;
    }
    return out;
}

void save_annotations(std::ostream& out, std::span<const AnnotatedToken> tokens) {
    out << kAnnotationHeader << '\n';
    for (const AnnotatedToken& at : tokens) {
        if (!at.annotated()) continue;
        out << at.token.index << '\t' << at.token.surface << '\t' << at.pos << '\t' << at.lemma
            << '\t' << at.sense << '\n';
    }
}

}  // namespace lexfreq
