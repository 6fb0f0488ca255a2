#include "lexfreq/unicode.hpp"

#include <algorithm>
#include <cstdio>

#include "lexfreq/errors.hpp"

namespace lexfreq::uni {

namespace {

#include "unicode_tables.inc"

template <size_t N>
bool in_ranges(const uint32_t (&table)[N][2], char32_t cp) {
    auto* end = table + N;
    auto* it = std::lower_bound(table, end, cp, [](const uint32_t(&r)[2], char32_t v) {
        return r[1] < static_cast<uint32_t>(v);
    });
    return it != end && (*it)[0] <= static_cast<uint32_t>(cp);
}

}  // namespace

bool is_letter(char32_t cp) { return in_ranges(kLetterRanges, cp); }

bool is_mark(char32_t cp) { return in_ranges(kMarkRanges, cp); }

char32_t to_upper(char32_t cp) {
    auto* end = kUpperMap + std::size(kUpperMap);
    auto* it = std::lower_bound(kUpperMap, end, cp, [](const uint32_t(&r)[2], char32_t v) {
        return r[0] < static_cast<uint32_t>(v);
    });
    if (it != end && (*it)[0] == static_cast<uint32_t>(cp)) return (*it)[1];
    return cp;
}

std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    size_t i = 0;
    const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
    auto fail = [&](size_t at) -> void {
        char buf[64];
        std::snprintf(buf, sizeof buf, "malformed UTF-8 at byte offset %zu", at);
        throw DataError(buf);
    };
    while (i < bytes.size()) {
        unsigned char b0 = data[i];
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            fail(i);
            return out;  // unreachable
        }
        if (i + len > bytes.size()) fail(i);
        for (int k = 1; k < len; ++k) {
            unsigned char b = data[i + k];
            if ((b & 0xC0) != 0x80) fail(i);
            cp = (cp << 6) | (b & 0x3F);
        }
        static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMin[len]) fail(i);                   // overlong
        if (cp >= 0xD800 && cp <= 0xDFFF) fail(i);     // surrogate
        if (cp > 0x10FFFF) fail(i);
        out.push_back(cp);
        i += len;
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size() * 2);
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

std::string upper_utf8(std::string_view bytes) {
    std::u32string cps = decode_utf8(bytes);
    for (char32_t& cp : cps) cp = to_upper(cp);
    return encode_utf8(cps);
}

namespace {

char32_t compose_pair(char32_t base, char32_t mark) {
    auto* end = kComposePairs + std::size(kComposePairs);
    uint32_t key[2] = {static_cast<uint32_t>(base), static_cast<uint32_t>(mark)};
    auto* it = std::lower_bound(kComposePairs, end, key, [](const uint32_t(&r)[3], const uint32_t(&k)[2]) {
        return r[0] != k[0] ? r[0] < k[0] : r[1] < k[1];
    });
    if (it != end && (*it)[0] == key[0] && (*it)[1] == key[1]) return (*it)[2];
    return 0;
}

}  // namespace

std::string compose_utf8(std::string_view bytes) {
    std::u32string cps = decode_utf8(bytes);
    std::u32string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        if (!out.empty() && is_mark(cp)) {
            if (char32_t fused = compose_pair(out.back(), cp)) {
                out.back() = fused;
                continue;
            }
        }
        out.push_back(cp);
    }
    return encode_utf8(out);
}

}  // namespace lexfreq::uni
