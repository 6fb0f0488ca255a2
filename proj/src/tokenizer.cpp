#include "lexfreq/tokenizer.hpp"

#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lexfreq/unicode.hpp"

namespace lexfreq {

namespace {

constexpr char32_t kApostrophe = U'\'';
constexpr char32_t kTypographicApostrophe = U'’';
constexpr char32_t kHyphen = U'-';

bool is_word_letter(char32_t cp) { return uni::is_letter(cp) || uni::is_mark(cp); }

bool is_joiner(char32_t cp) {
    return cp == kApostrophe || cp == kTypographicApostrophe || cp == kHyphen;
}

// Tokenizes one decoded chunk. base_index / base_offset shift the token
// numbering so parallel chunks can be stitched together.
void tokenize_span(const std::u32string& cps, uint64_t base_index, uint64_t base_offset,
                   std::vector<Token>& out) {
    const size_t n = cps.size();
    size_t i = 0;
    while (i < n) {
        if (!is_word_letter(cps[i])) {
            ++i;
            continue;
        }
        size_t start = i;
        std::string surface;
        while (i < n) {
            if (is_word_letter(cps[i])) {
                uni::append_utf8(surface, cps[i]);
                ++i;
            } else if (is_joiner(cps[i]) && i + 1 < n && is_word_letter(cps[i + 1])) {
                char32_t j = cps[i] == kTypographicApostrophe ? kApostrophe : cps[i];
                uni::append_utf8(surface, j);
                ++i;
            } else {
                break;
            }
        }
        Token t;
        t.surface = std::move(surface);
        t.index = base_index + out.size();
        t.char_offset = base_offset + start;
        out.push_back(std::move(t));
    }
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::u32string cps = uni::decode_utf8(text);
    tokenize_span(cps, 0, 0, out);
    return out;
}

std::vector<Token> tokenize_parallel(std::string_view text, int threads) {
#ifdef _OPENMP
    int want = threads > 0 ? threads : omp_get_max_threads();
#else
    int want = 1;
#endif
    // ~1 MiB per chunk keeps scheduling overhead negligible.
    size_t chunks = text.size() / (1 << 20) + 1;
    if (static_cast<size_t>(want) > chunks) want = static_cast<int>(chunks);
    if (want <= 1) return tokenize(text);

    // Cut points: advance to a code point boundary, then past the next
    // delimiter, so every token lies wholly inside one chunk.
    std::vector<size_t> cuts{0};
    for (int c = 1; c < want; ++c) {
        size_t pos = text.size() * c / want;
        if (pos <= cuts.back()) continue;
        while (pos < text.size() && (static_cast<unsigned char>(text[pos]) & 0xC0) == 0x80) ++pos;
        while (pos < text.size()) {
            unsigned char b = text[pos];
            size_t len = b < 0x80 ? 1 : (b & 0xE0) == 0xC0 ? 2 : (b & 0xF0) == 0xE0 ? 3 : 4;
            if (pos + len > text.size()) {
                pos = text.size();
                break;
            }
            char32_t cp = uni::decode_utf8(text.substr(pos, len))[0];
            pos += len;
            if (!is_word_letter(cp) && !is_joiner(cp)) break;
        }
        if (pos > cuts.back() && pos < text.size()) cuts.push_back(pos);
    }
    cuts.push_back(text.size());

    const int parts = static_cast<int>(cuts.size()) - 1;
    std::vector<std::vector<Token>> piece(parts);
    std::vector<uint64_t> cp_count(parts);

#pragma omp parallel for schedule(static) num_threads(want)
    for (int p = 0; p < parts; ++p) {
        std::u32string cps = uni::decode_utf8(
            std::string_view(text.data() + cuts[p], cuts[p + 1] - cuts[p]));
        cp_count[p] = cps.size();
        tokenize_span(cps, 0, 0, piece[p]);
    }

    std::vector<uint64_t> index_base(parts), offset_base(parts);
    uint64_t idx = 0, off = 0;
    for (int p = 0; p < parts; ++p) {
        index_base[p] = idx;
        offset_base[p] = off;
        idx += piece[p].size();
        off += cp_count[p];
    }

    std::vector<Token> out;
    out.reserve(idx);
    for (int p = 0; p < parts; ++p) {
        for (Token& t : piece[p]) {
            t.index += index_base[p];
            t.char_offset += offset_base[p];
            out.push_back(std::move(t));
        }
    }
    return out;
}

uint64_t count_tokens(std::span<const Token> tokens) { return tokens.size(); }

uint64_t distinct_wordform_count(std::span<const Token> tokens) {
    std::unordered_set<std::string> forms;
    forms.reserve(tokens.size());
    for (const Token& t : tokens) forms.insert(uni::upper_utf8(t.surface));
    return forms.size();
}

void write_token_dump(std::ostream& out, std::span<const Token> tokens) {
    for (const Token& t : tokens) {
        out << t.index << '\t' << t.char_offset << '\t' << t.surface << '\n';
    }
}

}  // namespace lexfreq
