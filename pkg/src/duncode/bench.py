"""Size benchmark: Duncode against UTF-8 and UTF-16.

Symbol length is bytes per character, where a character is one Unicode
scalar value.  UTF-16 sizes count surrogate pairs and no BOM.

The synthetic corpora below stand in for Wikipedia text when no dump is at
hand.  They are seeded, so a given (profile, size, seed) always yields the
same text.
"""

import csv
import io
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, List, Optional, Sequence

from .encoder import encode_string
from .errors import InvalidInputError
from .tables import TableSet, default_tables, read_hanzi_list, _resource_text

COLUMNS = [
    "label",
    "n_chars",
    "n_bytes_utf8",
    "n_bytes_duncode",
    "sym_len_utf8",
    "sym_len_duncode",
    "utf8/duncode",
]
UTF16_COLUMNS = ["n_bytes_utf16", "sym_len_utf16"]


def _ratio(num, den):
    return Fraction(num, den) if den else None


@dataclass(frozen=True)
class BenchRow:
    label: str
    n_chars: int
    n_bytes_utf8: int
    n_bytes_utf16: int
    n_bytes_duncode: int

    @property
    def sym_len_utf8(self) -> Optional[Fraction]:
        return _ratio(self.n_bytes_utf8, self.n_chars)

    @property
    def sym_len_utf16(self) -> Optional[Fraction]:
        return _ratio(self.n_bytes_utf16, self.n_chars)

    @property
    def sym_len_duncode(self) -> Optional[Fraction]:
        return _ratio(self.n_bytes_duncode, self.n_chars)

    @property
    def ratio_utf8_over_duncode(self) -> Optional[Fraction]:
        """UTF-8 size over Duncode size, in percent."""
        r = _ratio(self.n_bytes_utf8, self.n_bytes_duncode)
        return None if r is None else 100 * r


def measure(text, tables: Optional[TableSet] = None, label: str = "") -> BenchRow:
    """Measure ``text`` (a str, or UTF-8 bytes)."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidInputError("invalid UTF-8 at byte offset %d" % exc.start, exc.start) from None
    duncode = encode_string(text, tables or default_tables())
    return BenchRow(
        label=label,
        n_chars=len(text),
        n_bytes_utf8=len(text.encode("utf-8")),
        n_bytes_utf16=len(text.encode("utf-16-le")),
        n_bytes_duncode=len(duncode),
    )


def _fmt(value, suffix=""):
    if value is None:
        return "-"
    return "%.2f%s" % (float(value), suffix)


def _cells(row: BenchRow, utf16: bool) -> List[str]:
    cells = [
        row.label,
        str(row.n_chars),
        str(row.n_bytes_utf8),
        str(row.n_bytes_duncode),
        _fmt(row.sym_len_utf8),
        _fmt(row.sym_len_duncode),
        _fmt(row.ratio_utf8_over_duncode, "%"),
    ]
    if utf16:
        cells += [str(row.n_bytes_utf16), _fmt(row.sym_len_utf16)]
    return cells


def report(rows: Iterable[BenchRow], format: str = "csv", utf16: bool = False) -> str:
    """Render rows as CSV or a Markdown pipe table, in input order."""
    header = COLUMNS + (UTF16_COLUMNS if utf16 else [])
    body = [_cells(r, utf16) for r in rows]
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(body)
        return buf.getvalue()
    if format == "markdown":
        lines = ["| " + " | ".join(header) + " |"]
        lines.append("|" + "|".join(["---"] + ["---:"] * (len(header) - 1)) + "|")
        for cells in body:
            cells = [c.replace("|", "\\|") for c in cells]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    raise ValueError("unknown report format %r" % format)


# --- synthetic corpora ------------------------------------------------------


def _zipf(n, s=1.0):
    return list(accumulate(1.0 / (k + 1) ** s for k in range(n)))


class _WordProfile:
    """Words of letters from one script, separated by ASCII spaces."""

    def __init__(self, letters, capitals="", lengths=(), comma=0.08, stop=0.06, digits=0.04, latin=0.04):
        self.letters = letters
        self.capitals = capitals
        self.cum = _zipf(len(letters), 0.9)
        self.lengths = [n for n, _ in lengths]
        self.length_cum = list(accumulate(w for _, w in lengths))
        self.comma = comma
        self.stop = stop
        self.digits = digits
        self.latin = latin

    def word(self, rng, capital):
        r = rng.random()
        if r < self.digits:
            return str(rng.randint(1, 2030))
        if r < self.digits + self.latin:
            return rng.choice(_LATIN_TOKENS)
        n = rng.choices(self.lengths, cum_weights=self.length_cum)[0]
        chars = rng.choices(self.letters, cum_weights=self.cum, k=n)
        if capital and self.capitals:
            chars[0] = self.capitals[self.letters.index(chars[0]) % len(self.capitals)]
        return "".join(chars)

    def generate(self, rng, n_chars):
        out = []
        size = 0
        capital = True
        words = 0
        while size < n_chars:
            w = self.word(rng, capital)
            capital = False
            r = rng.random()
            if r < self.stop:
                w += "."
                capital = True
            elif r < self.stop + self.comma:
                w += ","
            words += 1
            w += "\n" if capital and words % 7 == 0 else " "
            out.append(w)
            size += len(w)
        return "".join(out)[:n_chars]


_LATIN_TOKENS = ["(1998)", "XIX", "km", "ISBN", "(en)", "UTC", "%", "\u2014", "«", "»", "NASA", "II"]

# Word length weights, roughly those of running prose.
_LENGTHS = [(1, 6), (2, 11), (3, 10), (4, 11), (5, 11), (6, 11), (7, 10), (8, 9), (9, 7), (10, 6), (11, 4), (12, 3), (13, 1)]
_ARABIC_LENGTHS = [(1, 2), (2, 9), (3, 14), (4, 17), (5, 17), (6, 14), (7, 11), (8, 8), (9, 5), (10, 3)]

_RUSSIAN = _WordProfile(
    "оеаинтсрвлкмдпуяызьбгчйхжшюцщэфъё",
    capitals="ОЕАИНТСРВЛКМДПУЯЫЗЬБГЧЙХЖШЮЦЩЭФЪЁ",
    lengths=_LENGTHS,
)
_ARABIC = _WordProfile(
    "اليمونرتبعدسهفكقحجشطصخذثزضغظءآأإؤئةى",
    lengths=_ARABIC_LENGTHS,
    comma=0.0,
)
_GREEK = _WordProfile(
    "αοιετνσυρκπμληωδγχθφβξζψ",
    capitals="ΑΟΙΕΤΝΣΥΡΚΠΜΛΗΩΔΓΧΘΦΒΞΖΨ",
    lengths=_LENGTHS,
)
_HINDI = _WordProfile(
    "कहरसनमतपलयदवगबजशचखडथभटधफषछठणढघझञ" + "ा" * 4 + "ि" * 2 + "ी्ेोुैौंू",
    lengths=_LENGTHS[:8],
    stop=0.0,
)
_ENGLISH_WORDS = (
    "the of and to in a is that for it as was with be by on not he this are or his from at which "
    "but have an they you were her she there one been we their has all would when what will more if "
    "no out so said up about other into than its time only could new them these two may first then "
    "do any like my now over such our man me even most made after also did many before must through "
    "years where much your way well down should because each just those people how too little state "
    "good very make world still own see men work long get here between both life being under never"
).split()


def _english(rng, n_chars):
    out = []
    size = 0
    cum = _zipf(len(_ENGLISH_WORDS))
    while size < n_chars:
        w = rng.choices(_ENGLISH_WORDS, cum_weights=cum)[0]
        r = rng.random()
        if r < 0.004:
            w = rng.choice(["café", "naïve", "résumé", "Zürich", "São"])
        elif r < 0.007:
            w = rng.choice(["it’s", "don’t", "“quoted”", "\u2014"])
        elif r < 0.017:
            w = str(rng.randint(1, 2030))
        w += "." if rng.random() < 0.05 else ""
        w += " " if rng.random() > 0.02 else "\n"
        out.append(w)
        size += len(w)
    return "".join(out)[:n_chars]


_HANZI = None


def _common_hanzi():
    global _HANZI
    if _HANZI is None:
        _HANZI = [chr(cp) for cp in read_hanzi_list(_resource_text("hanzi_freq.txt"))[:3000]]
    return _HANZI


def _chinese(rng, n_chars, kana=False):
    hanzi = _common_hanzi()
    cum = _zipf(len(hanzi), 1.0)
    hira = [chr(c) for c in range(0x3041, 0x3094)]
    kata = [chr(c) for c in range(0x30A1, 0x30F7)]
    out = []
    size = 0
    while size < n_chars:
        n = rng.randint(6, 30)
        chars = []
        for i in range(n):
            r = rng.random()
            if kana and r < 0.45:
                chars.append(rng.choice(hira))
            elif kana and r < 0.55:
                chars.append(rng.choice(kata))
            elif r < 0.97:
                chars.append(rng.choices(hanzi, cum_weights=cum)[0])
            else:
                chars.append(str(rng.randint(0, 99)))
            if i and i % 9 == 0:
                chars.append("、" if kana else "，")
        chars.append("。")
        if rng.random() < 0.1:
            chars.append("\n")
        s = "".join(chars)
        out.append(s)
        size += len(s)
    return "".join(out)[:n_chars]


def _korean(rng, n_chars):
    syllables = [chr(c) for c in range(0xAC00, 0xAC00 + 2000)]
    cum = _zipf(len(syllables))
    out = []
    size = 0
    while size < n_chars:
        w = "".join(rng.choices(syllables, cum_weights=cum, k=rng.randint(1, 5)))
        w += "." if rng.random() < 0.08 else ""
        w += " "
        out.append(w)
        size += len(w)
    return "".join(out)[:n_chars]


PROFILES = {
    "english": _english,
    "russian": _RUSSIAN.generate,
    "arabic": _ARABIC.generate,
    "greek": _GREEK.generate,
    "hindi": _HINDI.generate,
    "chinese": _chinese,
    "japanese": lambda rng, n: _chinese(rng, n, kana=True),
    "korean": _korean,
}


def synthetic_text(profile: str, n_chars: int = 100_000, seed: int = 0) -> str:
    """Deterministic pseudo-text in the style of ``profile``."""
    try:
        gen = PROFILES[profile]
    except KeyError:
        raise ValueError("unknown profile %r (have %s)" % (profile, ", ".join(PROFILES))) from None
    return gen(random.Random("%s:%d" % (profile, seed)), n_chars)


def synthetic_rows(
    profiles: Sequence[str] = tuple(PROFILES),
    n_chars: int = 100_000,
    seed: int = 0,
    tables: Optional[TableSet] = None,
) -> List[BenchRow]:
    return [measure(synthetic_text(p, n_chars, seed), tables, label=p) for p in profiles]
