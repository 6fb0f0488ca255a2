#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "lexfreq/errors.hpp"
#include "lexfreq/tokenizer.hpp"
#include "lexfreq/unicode.hpp"

using namespace lexfreq;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const Token& t : tokens) out.push_back(t.surface);
    return out;
}

std::string unescape(const std::string& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) {
            char c = s[++i];
            out += c == 't' ? '\t' : c == 'n' ? '\n' : c == 'r' ? '\r' : c;
        } else {
            out += s[i];
        }
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    size_t start = 0;
    while (true) {
        size_t p = s.find(sep, start);
        if (p == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

void check_token_invariants(const std::vector<Token>& tokens) {
    uint64_t expect_index = 0;
    for (const Token& t : tokens) {
        REQUIRE_FALSE(t.surface.empty());
        CHECK(t.index == expect_index++);
        std::u32string cps = uni::decode_utf8(t.surface);
        for (char32_t cp : cps) {
            bool ok = uni::is_letter(cp) || uni::is_mark(cp) || cp == U'\'' || cp == U'-';
            CHECK(ok);
        }
        CHECK(cps.front() != U'-');
        CHECK(cps.front() != U'\'');
        CHECK(cps.back() != U'-');
        CHECK(cps.back() != U'\'');
    }
}

// Random text over a mixed alphabet: Cyrillic, Latin, joiners, digits,
// punctuation, whitespace, the odd combining mark and em dash.
std::string random_text(std::mt19937& rng, size_t len) {
    static const char32_t alphabet[] = {U'а', U'б', U'я', U'і',      U'ї', U'є',     U'ґ', U'А',
                                        U'Б', U'a', U'z', U'Q',      U'é', U'́', U'1', U'9',
                                        U' ', U' ', U'\t', U'\n',    U'.', U',',     U'!', U'—',
                                        U'-', U'-', U'\'', U'’', U'«', U'»'};
    std::u32string s;
    for (size_t i = 0; i < len; ++i) s.push_back(alphabet[rng() % std::size(alphabet)]);
    return uni::encode_utf8(s);
}

}  // namespace

TEST_CASE("golden conformance corpus") {
    std::ifstream in(std::string(LEXFREQ_TEST_DATA_DIR) + "/tokenizer_golden.tsv");
    REQUIRE(in.is_open());
    std::string line;
    size_t cases = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols = split(line, '\t');
        REQUIRE(cols.size() >= 2);
        const std::string& name = cols[0];
        std::string input = unescape(cols[1]);
        std::vector<std::string> expected =
            cols.size() > 2 ? split(cols[2], '|') : std::vector<std::string>{};
        CAPTURE(name);
        std::vector<Token> tokens = tokenize(input);
        CHECK(surfaces(tokens) == expected);
        check_token_invariants(tokens);
        ++cases;
    }
    CHECK(cases >= 50);
}

TEST_CASE("token offsets point at the first code point of each token") {
    std::vector<Token> tokens = tokenize("Анеля не знала.");
    REQUIRE(tokens.size() == 3);
    CHECK(tokens[0].char_offset == 0);
    CHECK(tokens[1].char_offset == 6);
    CHECK(tokens[2].char_offset == 9);
    CHECK(tokens[2].index == 2);
}

TEST_CASE("count_tokens is the stream length") {
    CHECK(count_tokens(std::vector<Token>{}) == 0);
    CHECK(count_tokens(tokenize("Анеля не знала.")) == 3);
}

TEST_CASE("distinct wordforms are case-folded") {
    std::vector<Token> tokens = tokenize("Не не НЕ ні");
    CHECK(count_tokens(tokens) == 4);
    CHECK(distinct_wordform_count(tokens) == 2);
}

TEST_CASE("concatenation with a period never glues tokens") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 300; ++iter) {
        std::string a = random_text(rng, rng() % 40);
        std::string b = random_text(rng, rng() % 40);
        std::vector<std::string> left = surfaces(tokenize(a));
        std::vector<std::string> right = surfaces(tokenize(b));
        left.insert(left.end(), right.begin(), right.end());
        CHECK(surfaces(tokenize(a + "." + b)) == left);
    }
}

TEST_CASE("tokenizing space-joined surfaces is idempotent") {
    std::mt19937 rng(43);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<std::string> first = surfaces(tokenize(random_text(rng, 120)));
        std::string joined;
        for (const std::string& s : first) {
            if (!joined.empty()) joined += ' ';
            joined += s;
        }
        CHECK(surfaces(tokenize(joined)) == first);
    }
}

TEST_CASE("token invariants hold over random unicode text") {
    std::mt19937 rng(44);
    for (int iter = 0; iter < 300; ++iter) {
        check_token_invariants(tokenize(random_text(rng, 200)));
    }
}

TEST_CASE("token dump format") {
    std::ostringstream os;
    write_token_dump(os, tokenize("боїть ся"));
    CHECK(os.str() == "0\t0\tбоїть\n1\t6\tся\n");
}
