#!/usr/bin/env python3
# Regenerates src/unicode_tables.inc from the unicodedata module of the
# running Python. Check in the output; the build does not run this.
#
#   python3 scripts/gen_unicode_tables.py > src/unicode_tables.inc

import sys
import unicodedata


def char_ranges(pred):
    out = []
    start = None
    for cp in range(0x110000):
        ok = cp < 0xD800 or cp > 0xDFFF
        ok = ok and pred(cp)
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def is_letter(cp):
    return unicodedata.category(chr(cp)).startswith("L")


def is_mark(cp):
    return unicodedata.category(chr(cp)) in ("Mn", "Mc", "Me")


def upper_pairs():
    out = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        u = chr(cp).upper()
        if len(u) == 1 and ord(u) != cp:
            out.append((cp, ord(u)))
    return out


def compose_triples():
    # Primary canonical composites: pairs (base, mark) that NFC fuses into
    # one code point. Deriving through normalize() keeps the composition
    # exclusions right automatically.
    out = []
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        d = unicodedata.decomposition(chr(cp))
        if not d or d.startswith("<"):
            continue
        parts = d.split()
        if len(parts) != 2:
            continue
        a, b = int(parts[0], 16), int(parts[1], 16)
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            out.append((a, b, cp))
    out.sort()
    return out


def emit(name, rows, cols):
    print(f"inline constexpr uint32_t {name}[][{cols}] = {{")
    line = []
    for row in rows:
        line.append("{" + ",".join(f"0x{v:X}" for v in row) + "}")
        if len(line) == 6:
            print("    " + ",".join(line) + ",")
            line = []
    if line:
        print("    " + ",".join(line) + ",")
    print("};")
    print()


def main():
    print("// Generated by scripts/gen_unicode_tables.py from Python unicodedata")
    print(f"// (Unicode {unicodedata.unidata_version}). Do not edit by hand.")
    print()
    letters = char_ranges(is_letter)
    marks = char_ranges(is_mark)
    uppers = upper_pairs()
    comps = compose_triples()
    emit("kLetterRanges", letters, 2)
    emit("kMarkRanges", marks, 2)
    emit("kUpperMap", uppers, 2)
    emit("kComposePairs", comps, 3)
    sys.stderr.write(
        f"letters={len(letters)} marks={len(marks)} "
        f"uppers={len(uppers)} compose={len(comps)}\n"
    )


if __name__ == "__main__":
    main()
