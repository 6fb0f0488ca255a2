#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lexfreq/tokenizer.hpp"

namespace lexfreq {

struct RawCorpus {
    std::string text;       // validated UTF-8, newlines unified to LF
    std::string source_id;  // label used in reports
};

/// One sidecar row. Empty strings mean "absent".
struct AnnotationRow {
    uint64_t token_index = 0;
    std::string surface;
    std::string pos;
    std::string lemma;
    std::string sense;

    bool operator==(const AnnotationRow&) const = default;
};

/// Token plus whatever the sidecar said about it.
struct AnnotatedToken {
    Token token;
    std::string pos;
    std::string lemma;
    std::string sense;

    bool annotated() const { return !pos.empty() || !lemma.empty() || !sense.empty(); }
    bool operator==(const AnnotatedToken&) const = default;
};

inline constexpr const char* kAnnotationHeader = "#lexfreq-ann v1";

/// Reads a corpus file. Validates UTF-8 (reporting the byte offset of the
/// first bad sequence) and unifies CRLF / lone CR to LF. No other
/// normalization unless nfc is set, which applies canonical composition.
RawCorpus load_corpus(const std::string& path, bool nfc = false);

/// Same pipeline entry for in-memory text.
RawCorpus make_corpus(std::string text, std::string source_id, bool nfc = false);

std::vector<AnnotationRow> load_annotations(const std::string& path);
std::vector<AnnotationRow> parse_annotations(std::istream& in, const std::string& name);

/// Pairs tokens with their sidecar rows. Rows must be in range and their
/// surfaces must byte-equal the token at that index.
std::vector<AnnotatedToken> merge_annotations(std::span<const Token> tokens,
                                              std::span<const AnnotationRow> rows);

/// Writes a sidecar holding one row per annotated token; re-merging the
/// result against the same tokens reproduces the stream.
void save_annotations(std::ostream& out, std::span<const AnnotatedToken> tokens);

}  // namespace lexfreq
