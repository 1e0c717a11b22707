#!/usr/bin/env python3
"""Regenerate include/solidarity/unicode_data.hpp and emoji_data.hpp.

Normalization, case and category tables come from the Python stdlib
unicodedata module; emoji property tables come from the third-party
`regex` module, which tracks current Unicode releases.  Both generated
headers record the Unicode version of their source so runtime output can
carry exact provenance.

Usage: python3 scripts/gen_unicode_tables.py [repo-root]
"""

import sys
import unicodedata
from pathlib import Path

import regex

MAX_CP = 0x110000
HANGUL_S_BASE, HANGUL_S_COUNT = 0xAC00, 11172

LICENSE = """\
// Copyright 2026 The Solidarity Analytics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
"""


def ranges_of(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = pred(cp)
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def fmt_ranges(name, rs):
    lines = [f"inline constexpr CpRange {name}[] = {{"]
    for i in range(0, len(rs), 4):
        chunk = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in rs[i : i + 4])
        lines.append(f"    {chunk},")
    lines.append("};")
    return "\n".join(lines)


def gen_unicode_header(path: Path):
    ver = unicodedata.unidata_version

    lower = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        c = chr(cp)
        l = c.lower()
        if l != c and len(l) == 1:
            lower.append((cp, ord(l)))

    ccc = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        k = unicodedata.combining(chr(cp))
        if k:
            ccc.append((cp, k))

    # Fully expanded canonical decompositions (NFD), Hangul excluded
    # (handled algorithmically at runtime).
    decomp = []
    maxlen = 0
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        if HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT:
            continue
        c = chr(cp)
        d = unicodedata.normalize("NFD", c)
        if d != c:
            cps = [ord(x) for x in d]
            maxlen = max(maxlen, len(cps))
            decomp.append((cp, cps))
    assert maxlen <= 4, maxlen

    # Primary composites: canonical pair decompositions that NFC folds
    # back; deriving the set by round-trip sidesteps the composition
    # exclusion list, which unicodedata does not expose.
    comp = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        if HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT:
            continue
        c = chr(cp)
        raw = unicodedata.decomposition(c)
        if not raw or raw.startswith("<"):
            continue
        parts = raw.split()
        if len(parts) != 2:
            continue
        a, b = int(parts[0], 16), int(parts[1], 16)
        if unicodedata.normalize("NFC", unicodedata.normalize("NFD", c)) == c:
            comp.append((a, b, cp))
    comp.sort()

    marks = ranges_of(lambda cp: unicodedata.category(chr(cp)).startswith("M"))
    word = ranges_of(lambda cp: unicodedata.category(chr(cp))[0] in "LMN")
    space = ranges_of(lambda cp: chr(cp).isspace())

    with path.open("w") as f:
        f.write(LICENSE)
        f.write(
            f"""//
// Generated by scripts/gen_unicode_tables.py from Python unicodedata
// (Unicode {ver}). Do not edit by hand.

#pragma once

#include <cstdint>

namespace solidarity::unidata {{

inline constexpr const char* kUnicodeVersion = "{ver}";

struct CpRange {{ char32_t first; char32_t last; }};
struct CpMap {{ char32_t cp; char32_t to; }};
struct CpClass {{ char32_t cp; std::uint8_t ccc; }};
struct Decomp {{ char32_t cp; std::uint8_t len; char32_t out[4]; }};
struct CompPair {{ char32_t lead; char32_t trail; char32_t composed; }};

"""
        )
        f.write(f"// {len(lower)} one-to-one lowercase mappings\n")
        lines = ["inline constexpr CpMap kSimpleLower[] = {"]
        for i in range(0, len(lower), 6):
            chunk = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in lower[i : i + 6])
            lines.append(f"    {chunk},")
        lines.append("};\n")
        f.write("\n".join(lines))

        f.write(f"\n// {len(ccc)} nonzero canonical combining classes\n")
        lines = ["inline constexpr CpClass kCombiningClass[] = {"]
        for i in range(0, len(ccc), 6):
            chunk = ", ".join(f"{{0x{a:X}, {b}}}" for a, b in ccc[i : i + 6])
            lines.append(f"    {chunk},")
        lines.append("};\n")
        f.write("\n".join(lines))

        f.write(f"\n// {len(decomp)} full canonical decompositions (Hangul algorithmic)\n")
        lines = ["inline constexpr Decomp kDecomposition[] = {"]
        for i in range(0, len(decomp), 3):
            parts = []
            for cp, cps in decomp[i : i + 3]:
                padded = cps + [0] * (4 - len(cps))
                arr = ", ".join(f"0x{x:X}" for x in padded)
                parts.append(f"{{0x{cp:X}, {len(cps)}, {{{arr}}}}}")
            lines.append("    " + ", ".join(parts) + ",")
        lines.append("};\n")
        f.write("\n".join(lines))

        f.write(f"\n// {len(comp)} primary composites, sorted by (lead, trail)\n")
        lines = ["inline constexpr CompPair kComposition[] = {"]
        for i in range(0, len(comp), 4):
            chunk = ", ".join(
                f"{{0x{a:X}, 0x{b:X}, 0x{c:X}}}" for a, b, c in comp[i : i + 4]
            )
            lines.append(f"    {chunk},")
        lines.append("};\n")
        f.write("\n".join(lines))

        f.write(f"\n// category M* ({len(marks)} ranges)\n")
        f.write(fmt_ranges("kMarkRanges", marks))
        f.write(f"\n\n// categories L*, M*, N* ({len(word)} ranges)\n")
        f.write(fmt_ranges("kWordRanges", word))
        f.write(f"\n\n// whitespace ({len(space)} ranges)\n")
        f.write(fmt_ranges("kSpaceRanges", space))
        f.write("\n\n}  // namespace solidarity::unidata\n")

    print(f"wrote {path}: lower={len(lower)} ccc={len(ccc)} decomp={len(decomp)} "
          f"comp={len(comp)} marks={len(marks)} word={len(word)} space={len(space)}")


def regex_ranges(prop):
    pat = regex.compile(rf"\p{{{prop}}}")
    return ranges_of(lambda cp: bool(pat.match(chr(cp))))


def regex_unicode_version():
    # The regex module does not export its Unicode version; probe marker
    # codepoints from recent releases.
    markers = [
        (0x1FAEA, "17.0"), (0x1FADF, "16.0"), (0x1FAE8, "15.0"),
        (0x1FAF0, "14.0"), (0x1FAD7, "13.1"),
    ]
    pat = regex.compile(r"\p{Emoji}")
    for cp, ver in markers:
        if pat.match(chr(cp)):
            return ver
    return "unknown"


def gen_emoji_header(path: Path):
    ver = regex_unicode_version()
    emoji = regex_ranges("Emoji")
    base = regex_ranges("Emoji_Modifier_Base")
    pres = regex_ranges("Emoji_Presentation")

    with path.open("w") as f:
        f.write(LICENSE)
        f.write(
            f"""//
// Generated by scripts/gen_unicode_tables.py from the Python `regex`
// module ({regex.__version__}), Unicode emoji properties {ver}.
// Do not edit by hand.

#pragma once

#include <cstdint>

namespace solidarity::emojidata {{

inline constexpr const char* kEmojiDataVersion = "{ver}";

struct CpRange {{ char32_t first; char32_t last; }};

"""
        )
        f.write(f"// Emoji=Yes ({len(emoji)} ranges)\n")
        f.write(fmt_ranges("kEmojiRanges", emoji))
        f.write(f"\n\n// Emoji_Modifier_Base=Yes ({len(base)} ranges)\n")
        f.write(fmt_ranges("kModifierBaseRanges", base))
        f.write(f"\n\n// Emoji_Presentation=Yes ({len(pres)} ranges)\n")
        f.write(fmt_ranges("kPresentationRanges", pres))
        f.write("\n\n}  // namespace solidarity::emojidata\n")

    print(f"wrote {path}: emoji={len(emoji)} base={len(base)} pres={len(pres)} (Unicode {ver})")


def main():
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent
    inc = root / "include" / "solidarity"
    inc.mkdir(parents=True, exist_ok=True)
    gen_unicode_header(inc / "unicode_data.hpp")
    gen_emoji_header(inc / "emoji_data.hpp")


if __name__ == "__main__":
    main()
