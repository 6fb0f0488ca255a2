#include "doctest.h"

#include <random>

#include "lexfreq/errors.hpp"
#include "lexfreq/unicode.hpp"

using namespace lexfreq;

TEST_CASE("letter classification covers the scripts we care about") {
    CHECK(uni::is_letter(U'a'));
    CHECK(uni::is_letter(U'Z'));
    CHECK(uni::is_letter(U'а'));  // Cyrillic
    CHECK(uni::is_letter(U'Я'));
    CHECK(uni::is_letter(U'ї'));
    CHECK(uni::is_letter(U'Ґ'));
    CHECK(uni::is_letter(U'é'));
    CHECK(uni::is_letter(U'ß'));
    CHECK(uni::is_letter(U'λ'));
    CHECK_FALSE(uni::is_letter(U'5'));
    CHECK_FALSE(uni::is_letter(U' '));
    CHECK_FALSE(uni::is_letter(U'-'));
    CHECK_FALSE(uni::is_letter(U'\''));
    CHECK_FALSE(uni::is_letter(U'—'));  // em dash
    CHECK_FALSE(uni::is_letter(U' '));  // nbsp
    CHECK(uni::is_mark(U'́'));          // combining acute
    CHECK_FALSE(uni::is_mark(U'й'));
}

TEST_CASE("uppercase handles Ukrainian letters") {
    CHECK(uni::upper_utf8("анеля") == "АНЕЛЯ");
    CHECK(uni::upper_utf8("їжак") == "ЇЖАК");
    CHECK(uni::upper_utf8("євген") == "ЄВГЕН");
    CHECK(uni::upper_utf8("ґанок") == "ҐАНОК");
    CHECK(uni::upper_utf8("іти") == "ІТИ");
    CHECK(uni::upper_utf8("café") == "CAFÉ");
    CHECK(uni::upper_utf8("ЩО") == "ЩО");
    CHECK(uni::upper_utf8("пам'яти") == "ПАМ'ЯТИ");
    // uppercase keeps combining marks
    CHECK(uni::upper_utf8("му́ка") == "МУ́КА");
}

TEST_CASE("decode rejects malformed UTF-8 with a byte offset") {
    CHECK_THROWS_WITH_AS(uni::decode_utf8("\xFF"), doctest::Contains("byte offset 0"),
                         DataError);
    CHECK_THROWS_WITH_AS(uni::decode_utf8("ab\xC3"), doctest::Contains("byte offset 2"),
                         DataError);
    // overlong encoding of '/'
    CHECK_THROWS_AS(uni::decode_utf8("\xC0\xAF"), DataError);
    // surrogate half
    CHECK_THROWS_AS(uni::decode_utf8("\xED\xA0\x80"), DataError);
    CHECK(uni::decode_utf8("").empty());
}

TEST_CASE("encode/decode round-trip over random code points") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        std::u32string s;
        for (int i = 0; i < 64; ++i) {
            char32_t cp = rng() % 0x110000;
            if (cp >= 0xD800 && cp <= 0xDFFF) cp = 'x';
            s.push_back(cp);
        }
        CHECK(uni::decode_utf8(uni::encode_utf8(s)) == s);
    }
}

TEST_CASE("canonical composition fuses marks into precomposed forms") {
    CHECK(uni::compose_utf8("й") == "й");
    CHECK(uni::compose_utf8("Ї") == "Ї");
    CHECK(uni::compose_utf8("é") == "é");
    // Cyrillic stressed vowels have no precomposed forms; stays as-is
    CHECK(uni::compose_utf8("му́ка") == "му́ка");
    CHECK(uni::compose_utf8("двір") == "двір");
}
