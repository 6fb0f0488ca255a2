#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexfreq {

/// One word occurrence. A word is a maximal run of letters where an
/// apostrophe or hyphen counts as a letter only between two letters, so
/// "раз-у-раз" and "пам'яти" are single tokens while leading or trailing
/// joiners fall off as punctuation. Typographic apostrophes (U+2019) are
/// normalized to U+0027 in the stored surface.
struct Token {
    std::string surface;
    uint64_t index = 0;        // consecutive from 0 over the corpus
    uint64_t char_offset = 0;  // code point offset into the corpus text

    bool operator==(const Token&) const = default;
};

/// Serial reference tokenizer. This is the behavioral contract; the
/// parallel kernel must produce byte-identical output.
std::vector<Token> tokenize(std::string_view text);

/// Chunked OpenMP tokenizer. Chunk boundaries are moved forward to the
/// next delimiter so no token can span a cut. threads = 0 picks the
/// OpenMP default.
std::vector<Token> tokenize_parallel(std::string_view text, int threads = 0);

/// Corpus size N.
uint64_t count_tokens(std::span<const Token> tokens);

/// Distinct case-folded surfaces: the wordform count V_forms.
uint64_t distinct_wordform_count(std::span<const Token> tokens);

/// Token dump TSV: index<TAB>char_offset<TAB>surface.
void write_token_dump(std::ostream& out, std::span<const Token> tokens);

}  // namespace lexfreq
