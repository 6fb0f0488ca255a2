#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lexfreq::uni {

/// True for Unicode letters (general category L*).
bool is_letter(char32_t cp);

/// True for combining marks (Mn, Mc, Me). Marks continue a word so that
/// stressed forms like "му́ка" stay a single token.
bool is_mark(char32_t cp);

/// Single-character uppercase mapping; identity where Unicode defines none.
char32_t to_upper(char32_t cp);

/// Decodes strict UTF-8. Rejects overlong forms, surrogates and values
/// above U+10FFFF; throws DataError naming the byte offset.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view cps);
void append_utf8(std::string& out, char32_t cp);

/// Uppercases a UTF-8 string code point by code point.
std::string upper_utf8(std::string_view bytes);

/// Canonical composition: fuses base+combining-mark pairs into their
/// precomposed forms (й, ї, é, ...). This is NFC for text whose marks are
/// already in canonical order; no reordering or decomposition is done.
std::string compose_utf8(std::string_view bytes);

}  // namespace lexfreq::uni
