#!/usr/bin/env python3
"""Regenerate tests/data/emoji_cases.tsv, the emoji segmentation
conformance fixture.

Cases are constructed from Unicode emoji property data (via the `regex`
module, same upstream data release as emoji-test.txt): single
presentation emoji, text-default emoji with and without variation
selectors, skin-tone modifier sequences, flag pairs for all ISO-3166
alpha-2 codes, keycaps, a curated list of RGI ZWJ sequences, and mixed
text/adjacency cases.  Every scalar used is asserted to carry the
property the construction relies on, so the expected segmentation is
correct by construction rather than by running any segmenter.

Output columns: case-id <TAB> input <TAB> expected, where expected is a
`;`-joined list of `kind:cp-cp-...` (hex) entries, empty when the input
contains no emoji.
"""

import random
import sys
from pathlib import Path

import regex

EMOJI = regex.compile(r"\p{Emoji}")
PRESENTATION = regex.compile(r"\p{Emoji_Presentation}")
MODIFIER_BASE = regex.compile(r"\p{Emoji_Modifier_Base}")

ZWJ = 0x200D
VS16 = 0xFE0F
VS15 = 0xFE0E
KEYCAP = 0x20E3
TONES = [0x1F3FB, 0x1F3FC, 0x1F3FD, 0x1F3FE, 0x1F3FF]
RI_A = 0x1F1E6
KEYCAP_BASES = [ord(c) for c in "0123456789#*"]

ISO_ALPHA2 = """
AD AE AF AG AI AL AM AO AQ AR AS AT AU AW AX AZ BA BB BD BE BF BG BH BI BJ BL
BM BN BO BQ BR BS BT BV BW BY BZ CA CC CD CF CG CH CI CK CL CM CN CO CR CU CV
CW CX CY CZ DE DJ DK DM DO DZ EC EE EG EH ER ES ET FI FJ FK FM FO FR GA GB GD
GE GF GG GH GI GL GM GN GP GQ GR GS GT GU GW GY HK HM HN HR HT HU ID IE IL IM
IN IO IQ IR IS IT JE JM JO JP KE KG KH KI KM KN KP KR KW KY KZ LA LB LC LI LK
LR LS LT LU LV LY MA MC MD ME MF MG MH MK ML MM MN MO MP MQ MR MS MT MU MV MW
MX MY MZ NA NC NE NF NG NI NL NO NP NR NU NZ OM PA PE PF PG PH PK PL PM PN PR
PS PT PW PY QA RE RO RS RU RW SA SB SC SD SE SG SH SI SJ SK SL SM SN SO SR SS
ST SV SX SY SZ TC TD TF TG TH TJ TK TL TM TN TO TR TT TV TW TZ UA UG UM US UY
UZ VA VC VE VG VI VN VU WF WS YE YT ZA ZM ZW
""".split()

MAN, WOMAN, BOY, GIRL, PERSON = 0x1F468, 0x1F469, 0x1F466, 0x1F467, 0x1F9D1

PROFESSION_OBJECTS = [
    (0x2695, VS16), (0x2696, VS16), (0x2708, VS16),
    (0x1F33E,), (0x1F373,), (0x1F393,), (0x1F3A4,), (0x1F3A8,),
    (0x1F3EB,), (0x1F3ED,), (0x1F4BB,), (0x1F4BC,), (0x1F527,),
    (0x1F52C,), (0x1F680,), (0x1F692,),
]

GENDERED_BASES = [
    (0x1F3C3,), (0x1F6B6,), (0x1F3CA,), (0x1F6B4,), (0x1F6B5,), (0x1F3C4,),
    (0x1F6A3,), (0x1F3CB, VS16), (0x26F9, VS16), (0x1F937,), (0x1F926,),
    (0x1F646,), (0x1F645,), (0x1F481,), (0x1F64B,), (0x1F64D,), (0x1F64E,),
    (0x1F647,), (0x1F9D6,), (0x1F9D7,), (0x1F9D8,), (0x1F46E,),
    (0x1F575, VS16), (0x1F482,), (0x1F477,), (0x1F471,),
]

MISC_ZWJ = [
    (0x1F3F3, VS16, ZWJ, 0x1F308),          # rainbow flag
    (0x1F3F3, VS16, ZWJ, 0x26A7, VS16),     # transgender flag
    (0x1F3F4, ZWJ, 0x2620, VS16),           # pirate flag
    (0x1F441, VS16, ZWJ, 0x1F5E8, VS16),    # eye in speech bubble
    (0x1F415, ZWJ, 0x1F9BA),                # service dog
    (0x1F408, ZWJ, 0x2B1B),                 # black cat
    (0x1F43B, ZWJ, 0x2744, VS16),           # polar bear
    (0x1F636, ZWJ, 0x1F32B, VS16),          # face in clouds
    (0x1F62E, ZWJ, 0x1F4A8),                # face exhaling
    (0x1F635, ZWJ, 0x1F4AB),                # face with spiral eyes
    (0x2764, VS16, ZWJ, 0x1F525),           # heart on fire
    (0x2764, VS16, ZWJ, 0x1FA79),           # mending heart
    (PERSON, ZWJ, 0x1F91D, ZWJ, PERSON),    # people holding hands
    (PERSON, 0x1F3FB, ZWJ, 0x1F91D, ZWJ, PERSON, 0x1F3FD),
    (0x1F426, ZWJ, 0x2B1B),                 # black bird
    (0x1F426, ZWJ, 0x1F525),                # phoenix
    (MAN, ZWJ, 0x1F9BC),                    # motorized wheelchair
    (WOMAN, ZWJ, 0x1F9BD),                  # manual wheelchair
    (PERSON, ZWJ, 0x1F9AF),                 # white cane
    (0x1F3C3, ZWJ, 0x27A1, VS16),           # person running facing right
]


def is_emoji(cp):
    return bool(EMOJI.match(chr(cp)))


def is_presentation(cp):
    return bool(PRESENTATION.match(chr(cp)))


def is_base(cp):
    return bool(MODIFIER_BASE.match(chr(cp)))


def seq_str(cps):
    return "".join(chr(c) for c in cps)


def exp(kind, cps):
    return f"{kind}:" + "-".join(f"{c:X}" for c in cps)


class Fixture:
    def __init__(self):
        self.rows = []
        self.n = 0

    def add(self, tag, text, expected):
        assert "\t" not in text and "\n" not in text
        self.n += 1
        self.rows.append((f"{tag}-{self.n:04d}", text, ";".join(expected)))


def zwj_interleave(members):
    out = []
    for i, m in enumerate(members):
        if i:
            out.append(ZWJ)
        out.extend(m)
    return tuple(out)


def check_zwj(seq):
    for cp in seq:
        if cp in (ZWJ, VS16, VS15):
            continue
        if cp in TONES:
            continue
        assert is_emoji(cp), f"non-emoji scalar {cp:X} in ZWJ sequence"
    assert ZWJ in seq


def main():
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent
    out = root / "tests" / "data" / "emoji_cases.tsv"
    out.parent.mkdir(parents=True, exist_ok=True)
    rng = random.Random(20260809)
    fx = Fixture()

    components = set(KEYCAP_BASES) | set(TONES) | {ZWJ, VS15, VS16, KEYCAP}
    components |= set(range(0x1F1E6, 0x1F200))
    components |= set(range(0xE0020, 0xE0080))

    presentation_singles = [
        cp for cp in range(0x110000)
        if not (0xD800 <= cp <= 0xDFFF) and is_presentation(cp)
        and cp not in components
    ]
    text_default = [
        cp for cp in range(0x110000)
        if not (0xD800 <= cp <= 0xDFFF) and is_emoji(cp)
        and not is_presentation(cp) and cp not in components
    ]
    bases = [
        cp for cp in range(0x110000)
        if not (0xD800 <= cp <= 0xDFFF) and is_base(cp)
    ]

    # --- singles, default emoji presentation
    for cp in presentation_singles:
        fx.add("single", chr(cp), [exp("single", [cp])])

    # --- text-default emoji: bare and with VS16 (same key either way)
    for cp in text_default:
        fx.add("textdefault", chr(cp), [exp("single", [cp])])
        fx.add("vs16", seq_str([cp, VS16]), [exp("single", [cp, VS16])])

    # --- a few explicit VS15 (text presentation selector) absorptions
    for cp in [0x2639, 0x270C, 0x2764, 0x2620]:
        assert is_emoji(cp) and not is_presentation(cp)
        fx.add("vs15", seq_str([cp, VS15]), [exp("single", [cp, VS15])])

    # --- modifier sequences: every base x every tone
    for cp in bases:
        for tone in TONES:
            fx.add("tone", seq_str([cp, tone]), [exp("modifier", [cp, tone])])

    # --- base + VS16 + tone (non-RGI order seen in the wild)
    for cp in [0x270C, 0x261D]:
        assert is_base(cp)
        fx.add("tone-vs", seq_str([cp, VS16, TONES[2]]),
               [exp("modifier", [cp, VS16, TONES[2]])])

    # --- flags for all ISO alpha-2 codes
    for code in ISO_ALPHA2:
        cps = [RI_A + ord(c) - ord("A") for c in code]
        fx.add("flag", seq_str(cps), [exp("flag", cps)])

    # --- keycaps, plain and fully qualified
    for b in KEYCAP_BASES:
        fx.add("keycap", seq_str([b, KEYCAP]), [exp("keycap", [b, KEYCAP])])
        fx.add("keycap-vs", seq_str([b, VS16, KEYCAP]),
               [exp("keycap", [b, VS16, KEYCAP])])

    # --- ZWJ sequences
    zwj_all = []
    adults = [[MAN], [WOMAN], [MAN, WOMAN], [MAN, MAN], [WOMAN, WOMAN]]
    kids = [[BOY], [GIRL], [BOY, BOY], [GIRL, BOY], [GIRL, GIRL]]
    for a in adults:
        for k in kids:
            zwj_all.append(zwj_interleave([[m] for m in a + k]))
    for x, y in [(WOMAN, MAN), (MAN, MAN), (WOMAN, WOMAN)]:
        zwj_all.append((x, ZWJ, 0x2764, VS16, ZWJ, y))
        zwj_all.append((x, ZWJ, 0x2764, VS16, ZWJ, 0x1F48B, ZWJ, y))
    for p in (MAN, WOMAN, PERSON):
        for obj in PROFESSION_OBJECTS:
            zwj_all.append((p, ZWJ) + obj)
    for p in (MAN, WOMAN):
        for tone in TONES:
            for obj in [(0x2695, VS16), (0x1F4BB,), (0x1F692,), (0x1F33E,)]:
                zwj_all.append((p, tone, ZWJ) + obj)
    for base in GENDERED_BASES:
        for sign in (0x2640, 0x2642):
            zwj_all.append(base + (ZWJ, sign, VS16))
    for base in [(0x1F937,), (0x1F64B,), (0x1F3C3,)]:
        for tone in TONES:
            for sign in (0x2640, 0x2642):
                zwj_all.append(base + (tone, ZWJ, sign, VS16))
    for p in (MAN, WOMAN, PERSON):
        for hair in (0x1F9B0, 0x1F9B1, 0x1F9B2, 0x1F9B3):
            zwj_all.append((p, ZWJ, hair))
    zwj_all.extend(MISC_ZWJ)

    for seq in zwj_all:
        check_zwj(seq)
        fx.add("zwj", seq_str(seq), [exp("zwj", seq)])

    # --- adjacency: two presentation singles, with and without space
    for _ in range(40):
        a, b = rng.choice(presentation_singles), rng.choice(presentation_singles)
        fx.add("adj-space", f"{chr(a)} {chr(b)}",
               [exp("single", [a]), exp("single", [b])])
        fx.add("adj-tight", f"{chr(a)}{chr(b)}",
               [exp("single", [a]), exp("single", [b])])

    # --- adjacent flags pair left to right
    for _ in range(10):
        c1, c2 = rng.choice(ISO_ALPHA2), rng.choice(ISO_ALPHA2)
        p1 = [RI_A + ord(c) - ord("A") for c in c1]
        p2 = [RI_A + ord(c) - ord("A") for c in c2]
        fx.add("flag-adj", seq_str(p1 + p2), [exp("flag", p1), exp("flag", p2)])

    # --- odd regional indicator runs
    ri = [RI_A + i for i in range(26)]
    fx.add("ri-single", chr(ri[5]), [exp("single", [ri[5]])])
    fx.add("ri-triple", seq_str([ri[5], ri[17], ri[20]]),
           [exp("flag", [ri[5], ri[17]]), exp("single", [ri[20]])])
    fx.add("ri-in-text", f"go {chr(ri[20])}{chr(ri[18])} now",
           [exp("flag", [ri[20], ri[18]])])

    # --- embedded in text
    heart, pray, thumbs = 0x2764, 0x1F64F, 0x1F44D
    fx.add("text", f"stay safe {chr(pray)}{chr(pray)} please {chr(heart)}️",
           [exp("single", [pray]), exp("single", [pray]),
            exp("single", [heart, VS16])])
    fx.add("text", f"{chr(thumbs)}\U0001F3FDx{chr(pray)}",
           [exp("modifier", [thumbs, 0x1F3FD]), exp("single", [pray])])
    fx.add("text", "no emoji here, just text with #hashtag and 123", [])
    fx.add("text", "", [])
    fx.add("text", "call 1⃣ now",
           [exp("keycap", [ord("1"), KEYCAP])])
    fx.add("text", "5x plain digit", [])
    fx.add("text", "100% ascii *stars* #tags", [])

    # --- orphan components
    fx.add("orphan-tone", chr(TONES[2]), [exp("single", [TONES[2]])])
    fx.add("orphan-zwj", f"a‍b", [])
    fx.add("broken-zwj", f"{chr(pray)}‍x", [exp("single", [pray])])
    fx.add("orphan-vs", "x️", [])
    fx.add("keycap-novs", "3️ no keycap", [])

    with out.open("w") as f:
        f.write("case\tinput\texpected\n")
        for row in fx.rows:
            f.write("\t".join(row) + "\n")
    print(f"wrote {out}: {fx.n} cases "
          f"(singles={len(presentation_singles)}, text-default={len(text_default)}, "
          f"bases={len(bases)}, flags={len(ISO_ALPHA2)}, zwj={len(zwj_all)})")


if __name__ == "__main__":
    main()
