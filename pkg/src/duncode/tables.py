"""Block registry, alphabet numbering and the byte2 map.

A :class:`TableSet` answers two questions.  The encoder asks which zone and
alphabet a code point belongs to (:meth:`TableSet.classify`); the decoder
asks the reverse (:meth:`TableSet.lookup_letter` and ``byte2_reverse``).

Tables are immutable once built.  They can be built from the bundled
resources (:func:`build_default_tables`) or read from the line-oriented
table file format (:func:`parse_tables`).
"""

import enum
import functools
from bisect import bisect_right
from dataclasses import dataclass
from importlib import resources
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .errors import InvalidInputError, MalformedUnitError, TableError

MAX_CODE_POINT = 0x10FFFF
BYTE2_SIZE = 1 << 14
UNASSIGNED = -1

DEFAULT_VERSION = "duncode-default-1 unicode-blocks-17.0.0"


class Zone(enum.IntEnum):
    ASCII = 0
    BYTE2 = 1
    ISOLATE = 2
    BIT8 = 3
    BIT7 = 4

    def __str__(self):
        return self.name.lower()

    @classmethod
    def from_name(cls, name: str) -> "Zone":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError("unknown zone %r" % name) from None


COMPRESSED_ZONES = (Zone.BIT8, Zone.BIT7)

# Number of alphabet ids per zone.  A bit7 lead byte is 1nnnnnnn; ids >= 96
# would start with 111 and read as bit8.
ALPHABET_COUNT = {Zone.BIT8: 4, Zone.BIT7: 96}
# Letter slots per alphabet; the top slot doubles as the pad sentinel.
CAPACITY = {Zone.BIT8: 256, Zone.BIT7: 128}
PAD = {Zone.BIT8: 0xFF, Zone.BIT7: 0x7F}


def is_scalar(cp: int) -> bool:
    return 0 <= cp <= MAX_CODE_POINT and not 0xD800 <= cp <= 0xDFFF


@dataclass(frozen=True)
class DuncodeBlock:
    block_id: int
    began: int
    end: int
    name: str
    zone: Zone
    alphabet_id: Optional[int] = None
    mother_id: Optional[int] = None
    child_offset: int = 0

    @property
    def size(self) -> int:
        return self.end - self.began + 1

    @property
    def is_child(self) -> bool:
        return self.mother_id is not None


@dataclass(frozen=True)
class Classification:
    zone: Zone
    block_id: Optional[int]
    alphabet_id: Optional[int]
    letter_index: int
    byte2_index: Optional[int] = None

    @property
    def compressible(self) -> bool:
        """True if the character may join a bit7/bit8 run."""
        return self.zone in COMPRESSED_ZONES and self.letter_index < PAD[self.zone]


class TableSet:
    """Validated, immutable lookup tables.

    ``byte2`` maps code point to byte2 index.  ``linenos`` is only used to
    point error messages at lines of a table file.
    """

    def __init__(
        self,
        blocks: Iterable[DuncodeBlock],
        byte2: Mapping[int, int],
        version: str = DEFAULT_VERSION,
        linenos: Optional[Dict] = None,
    ):
        self.blocks: Tuple[DuncodeBlock, ...] = tuple(sorted(blocks, key=lambda b: b.began))
        self.byte2_forward: Dict[int, int] = dict(byte2)
        self.version = version
        linenos = linenos or {}

        self._by_id = {}
        for b in self.blocks:
            if b.block_id in self._by_id:
                raise TableError("duplicate block id %d" % b.block_id, linenos.get(b.block_id))
            self._by_id[b.block_id] = b
        self._check_blocks(linenos)
        self._letters = self._build_alphabets(linenos)
        self.byte2_reverse: List[int] = self._build_reverse(linenos)
        self._starts = [b.began for b in self.blocks]

        # Filled lazily by the encoder and decoder.
        self._encode_memo: dict = {}
        self._decode_memo: dict = {}

    def _check_blocks(self, linenos):
        prev = None
        for b in self.blocks:
            line = linenos.get(b.block_id)
            if not 0 <= b.began <= b.end <= MAX_CODE_POINT:
                raise TableError("bad range %X..%X" % (b.began, b.end), line)
            compressed = b.zone in COMPRESSED_ZONES
            if compressed != (b.alphabet_id is not None):
                raise TableError("alphabet id is required for bit7/bit8 blocks only", line)
            if compressed and not 0 <= b.alphabet_id < ALPHABET_COUNT[b.zone]:
                raise TableError(
                    "%s alphabet id %d out of range [0, %d]"
                    % (b.zone, b.alphabet_id, ALPHABET_COUNT[b.zone] - 1),
                    line,
                )
            if prev is not None and b.began <= prev.end:
                raise TableError(
                    "overlapping ranges: %X..%X and %X..%X" % (prev.began, prev.end, b.began, b.end),
                    line,
                )
            if b.child_offset < 0 or (b.mother_id is None and b.child_offset):
                raise TableError("offset is only valid for child blocks", line)
            if b.mother_id is not None:
                mother = self._by_id.get(b.mother_id)
                if mother is None or mother.is_child:
                    raise TableError("mother block %d does not exist" % b.mother_id, line)
                if (mother.zone, mother.alphabet_id) != (b.zone, b.alphabet_id):
                    raise TableError("child zone/alphabet differs from mother", line)
            prev = b

    def _build_alphabets(self, linenos):
        members: Dict[Tuple[Zone, int], List[DuncodeBlock]] = {}
        for b in self.blocks:
            if b.zone in COMPRESSED_ZONES:
                members.setdefault((b.zone, b.alphabet_id), []).append(b)
        letters = {}
        for key, blocks in members.items():
            zone = key[0]
            mothers = [b for b in blocks if not b.is_child]
            if len(mothers) != 1:
                raise TableError(
                    "%s alphabet %d has %d mother blocks" % (zone, key[1], len(mothers)),
                    linenos.get(blocks[-1].block_id),
                )
            table = [UNASSIGNED] * CAPACITY[zone]
            for b in blocks:
                line = linenos.get(b.block_id)
                if b.child_offset + b.size > CAPACITY[zone]:
                    raise TableError(
                        "capacity overflow: %s alphabet %d exceeds %d letters"
                        % (zone, key[1], CAPACITY[zone]),
                        line,
                    )
                for i in range(b.size):
                    if table[b.child_offset + i] != UNASSIGNED:
                        raise TableError("letter indexes of alphabet overlap", line)
                    table[b.child_offset + i] = b.began + i
            # Trailing holes are not letters.
            while table and table[-1] == UNASSIGNED:
                table.pop()
            letters[key] = table
        return letters

    def _build_reverse(self, linenos):
        if len(self.byte2_forward) > BYTE2_SIZE:
            raise TableError("byte2 map has more than %d entries" % BYTE2_SIZE)
        reverse = [UNASSIGNED] * BYTE2_SIZE
        for cp, index in self.byte2_forward.items():
            line = linenos.get(("byte2", index))
            if not 0 <= index < BYTE2_SIZE:
                raise TableError("byte2 index %X out of range" % index, line)
            if not is_scalar(cp) or cp < 0x80:
                raise TableError("byte2 code point %X is not a non-ASCII scalar" % cp, line)
            if reverse[index] != UNASSIGNED:
                raise TableError("byte2 index %X assigned twice" % index, line)
            reverse[index] = cp
        return reverse

    def __eq__(self, other):
        if not isinstance(other, TableSet):
            return NotImplemented
        return (
            self.blocks == other.blocks
            and self.byte2_forward == other.byte2_forward
            and self.version == other.version
        )

    def __repr__(self):
        return "<TableSet %s: %d blocks, %d alphabets, %d byte2>" % (
            self.version,
            len(self.blocks),
            len(self._letters),
            len(self.byte2_forward),
        )

    def block(self, block_id: int) -> DuncodeBlock:
        return self._by_id[block_id]

    def find_block(self, name: str) -> DuncodeBlock:
        for b in self.blocks:
            if b.name == name:
                return b
        raise KeyError(name)

    def block_of(self, cp: int) -> Optional[DuncodeBlock]:
        i = bisect_right(self._starts, cp) - 1
        if i >= 0 and cp <= self.blocks[i].end:
            return self.blocks[i]
        return None

    def alphabets(self, zone: Zone) -> List[int]:
        return sorted(aid for z, aid in self._letters if z == zone)

    def alphabet_size(self, zone: Zone, alphabet_id: int) -> int:
        return len(self._letters[(zone, alphabet_id)])

    def classify(self, cp: int) -> Classification:
        if not is_scalar(cp):
            raise InvalidInputError("U+%04X is not a Unicode scalar value" % cp)
        byte2_index = self.byte2_forward.get(cp)
        block = self.block_of(cp)
        block_id = block.block_id if block is not None else None
        if cp < 0x80:
            return Classification(Zone.ASCII, block_id, None, cp, byte2_index)
        if block is None or block.zone in (Zone.ASCII, Zone.ISOLATE):
            # Isolate payload is the code point itself (zone offset 0).
            return Classification(Zone.ISOLATE, block_id, None, cp, byte2_index)
        index = cp - block.began + block.child_offset
        return Classification(block.zone, block_id, block.alphabet_id, index, byte2_index)

    def lookup_letter(self, zone: Zone, alphabet_id: int, letter_index: int) -> int:
        letters = self._letters.get((zone, alphabet_id))
        if letters is None:
            raise MalformedUnitError("no %s alphabet with id %d" % (Zone(zone), alphabet_id))
        if not 0 <= letter_index < len(letters) or letters[letter_index] == UNASSIGNED:
            raise MalformedUnitError(
                "letter index %d outside %s alphabet %d" % (letter_index, Zone(zone), alphabet_id)
            )
        return letters[letter_index]

    def byte2_char(self, index: int) -> int:
        cp = self.byte2_reverse[index] if 0 <= index < BYTE2_SIZE else UNASSIGNED
        if cp == UNASSIGNED:
            raise MalformedUnitError("byte2 index %d is unassigned" % index)
        return cp


# --- default tables -------------------------------------------------------

BIT8_ALPHABETS = ["Greek and Coptic", "Cyrillic", "Arabic", "Myanmar"]

BYTE2_ZONE_BLOCKS = {
    "Latin-1 Supplement",
    "Latin Extended-A",
    "Latin Extended-B",
    "IPA Extensions",
    "Spacing Modifier Letters",
    "Combining Diacritical Marks",
    "General Punctuation",
    "Tibetan",
    "Mongolian",
    "CJK Symbols and Punctuation",
    "Hiragana",
    "Katakana",
}

# child block -> mother block
CHILD_BLOCKS = {
    "Ancient Greek Numbers": "Greek and Coptic",
    "Myanmar Extended-A": "Myanmar",
    "Myanmar Extended-B": "Myanmar",
    "Syriac Supplement": "Syriac",
    "Arabic Extended-B": "Arabic Supplement",
    "Sundanese Supplement": "Sundanese",
    "Bopomofo Extended": "Bopomofo",
    "Lisu Supplement": "Lisu",
}

# Blocks whose names contain these words hold symbols rather than letters
# and never get a bit7 alphabet.
_NOT_ALPHABETS = (
    "Symbols", "Punctuation", "Arrows", "Operators", "Forms", "Pictures",
    "Drawing", "Elements", "Shapes", "Numbers", "Numerals", "Surrogates",
    "Private Use", "Specials", "Selectors", "Tiles", "Cards", "Dingbats",
    "Technical", "Recognition", "Radicals", "Strokes", "Kanbun", "Tags",
    "Controls", "Hexagram", "Musical", "Notation", "Currency", "Letterlike",
    "Superscripts", "Enclosed", "Description", "Emoticons", "Compatibility",
    "Combining", "Modifier", "Siyaq", "Dominoes", "Alchemical", "Chess",
    "Hieroglyph", "Cuneiform", "Variants", "Ideograms",
)

# Fixed byte2 ranges after the 0x0080..0x07FF identity block, in slot order.
BYTE2_RANGES = [
    (0x3000, 0x303F),  # CJK Symbols and Punctuation
    (0x3040, 0x309F),  # Hiragana
    (0x30A0, 0x30FF),  # Katakana
    (0x2000, 0x206F),  # General Punctuation
    (0x0F00, 0x0FFF),  # Tibetan
    (0x1800, 0x18AF),  # Mongolian
]


def _resource_text(name):
    return resources.files("duncode").joinpath("data", name).read_text(encoding="utf-8")


def read_unicode_blocks(text: str) -> List[Tuple[int, int, str]]:
    """Parse ``Blocks.txt`` style lines: ``0000..007F; Basic Latin``."""
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        span, name = line.split(";", 1)
        lo, hi = span.split("..")
        out.append((int(lo, 16), int(hi, 16), name.strip()))
    return out


def read_hanzi_list(text: str) -> List[int]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(ord(line[0]))
    return out


def build_default_tables(blocks_text: Optional[str] = None, hanzi_text: Optional[str] = None) -> TableSet:
    """Build the default tables from the bundled resources.

    Zone assignment:

    * Basic Latin is ``ascii``.
    * Greek and Coptic, Cyrillic, Arabic and Myanmar are bit8 alphabets 0-3.
    * A handful of Latin, punctuation, kana, Tibetan and Mongolian blocks are
      ``byte2``.
    * Letter blocks of at most 128 code points (after merging the children
      in ``CHILD_BLOCKS``) become bit7 alphabets, numbered in code point
      order until the 96 ids run out.
    * Everything else is ``isolate``.
    """
    try:
        if blocks_text is None:
            blocks_text = _resource_text("blocks.txt")
        if hanzi_text is None:
            hanzi_text = _resource_text("hanzi_freq.txt")
    except (OSError, ModuleNotFoundError) as exc:
        raise TableError("cannot read bundled resource: %s" % exc) from exc

    raw = read_unicode_blocks(blocks_text)
    by_name = {name: i for i, (_, _, name) in enumerate(raw)}
    for child, mother in CHILD_BLOCKS.items():
        if child not in by_name or mother not in by_name:
            raise TableError("block list lacks %r or %r" % (child, mother))

    children: Dict[str, List[str]] = {}
    for child, mother in sorted(CHILD_BLOCKS.items(), key=lambda kv: raw[by_name[kv[0]]][0]):
        children.setdefault(mother, []).append(child)

    def family_size(name):
        lo, hi, _ = raw[by_name[name]]
        return hi - lo + 1 + sum(raw[by_name[c]][1] - raw[by_name[c]][0] + 1 for c in children.get(name, ()))

    zone_of: Dict[str, Zone] = {}
    alphabet_of: Dict[str, int] = {}
    for aid, name in enumerate(BIT8_ALPHABETS):
        zone_of[name], alphabet_of[name] = Zone.BIT8, aid
    next_bit7 = 0
    for lo, hi, name in raw:
        if name == "Basic Latin":
            zone_of[name] = Zone.ASCII
        elif name in zone_of or name in CHILD_BLOCKS:
            continue
        elif name in BYTE2_ZONE_BLOCKS:
            zone_of[name] = Zone.BYTE2
        elif (
            next_bit7 < ALPHABET_COUNT[Zone.BIT7]
            and family_size(name) <= CAPACITY[Zone.BIT7]
            and not any(word in name for word in _NOT_ALPHABETS)
        ):
            zone_of[name], alphabet_of[name] = Zone.BIT7, next_bit7
            next_bit7 += 1
        else:
            zone_of[name] = Zone.ISOLATE

    blocks = []
    offsets: Dict[str, int] = {}
    for block_id, (lo, hi, name) in enumerate(raw):
        mother = CHILD_BLOCKS.get(name)
        if mother is None:
            blocks.append(DuncodeBlock(block_id, lo, hi, name, zone_of[name], alphabet_of.get(name)))
            continue
        m_lo, m_hi, _ = raw[by_name[mother]]
        offset = offsets.get(mother, m_hi - m_lo + 1)
        offsets[mother] = offset + hi - lo + 1
        blocks.append(
            DuncodeBlock(
                block_id, lo, hi, name, zone_of[mother], alphabet_of.get(mother),
                mother_id=by_name[mother], child_offset=offset,
            )
        )

    byte2 = {}
    for cp in range(0x80, 0x800):
        byte2[cp] = cp - 0x80
    for lo, hi in BYTE2_RANGES:
        for cp in range(lo, hi + 1):
            byte2[cp] = len(byte2)
    for cp in read_hanzi_list(hanzi_text):
        if len(byte2) == BYTE2_SIZE:
            break
        if cp not in byte2:
            byte2[cp] = len(byte2)
    if len(byte2) < BYTE2_SIZE:
        raise TableError(
            "Hanzi frequency list too short: byte2 map has %d of %d entries" % (len(byte2), BYTE2_SIZE)
        )
    return TableSet(blocks, byte2, DEFAULT_VERSION)


# --- table file -----------------------------------------------------------


def serialize_tables(tables: TableSet) -> bytes:
    lines = [
        "# Duncode table file",
        "version %s" % tables.version,
    ]
    for b in tables.blocks:
        fields = ["block", str(b.block_id), "%04X" % b.began, "%04X" % b.end, str(b.zone)]
        if b.alphabet_id is not None:
            fields.append("alphabet=%d" % b.alphabet_id)
        if b.mother_id is not None:
            fields.append("mother=%d" % b.mother_id)
            fields.append("offset=%d" % b.child_offset)
        lines.append(" ".join(fields) + " # " + b.name)
    for index, cp in enumerate(tables.byte2_reverse):
        if cp != UNASSIGNED:
            lines.append("byte2 %04X %04X" % (index, cp))
    return ("\n".join(lines) + "\n").encode("utf-8")


def _hex(token, lineno):
    try:
        return int(token, 16)
    except ValueError:
        raise TableError("bad hex number %r" % token, lineno) from None


def _parse_block(tokens, name, lineno):
    if len(tokens) < 5:
        raise TableError("block line needs id, range and zone", lineno)
    try:
        block_id = int(tokens[1])
        zone = Zone.from_name(tokens[4])
    except ValueError as exc:
        raise TableError(str(exc), lineno) from None
    opts = {}
    for tok in tokens[5:]:
        key, sep, value = tok.partition("=")
        if not sep or key not in ("alphabet", "mother", "offset") or key in opts:
            raise TableError("bad block option %r" % tok, lineno)
        try:
            opts[key] = int(value)
        except ValueError:
            raise TableError("bad block option %r" % tok, lineno) from None
    return DuncodeBlock(
        block_id,
        _hex(tokens[2], lineno),
        _hex(tokens[3], lineno),
        name,
        zone,
        alphabet_id=opts.get("alphabet"),
        mother_id=opts.get("mother"),
        child_offset=opts.get("offset", 0),
    )


def parse_tables(data) -> TableSet:
    """Parse a table file (``bytes`` or ``str``) and validate it."""
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise TableError("table file is not UTF-8 (byte %d)" % exc.start) from None
    version = None
    blocks = []
    byte2 = {}
    linenos = {}
    for lineno, line in enumerate(data.splitlines(), 1):
        body, _, comment = line.partition("#")
        tokens = body.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "version":
            if version is not None:
                raise TableError("duplicate version line", lineno)
            version = body.split(None, 1)[1].strip() if len(tokens) > 1 else ""
        elif kind == "block":
            block = _parse_block(tokens, comment.strip(), lineno)
            linenos.setdefault(block.block_id, lineno)
            blocks.append(block)
        elif kind == "byte2":
            if len(tokens) != 3:
                raise TableError("byte2 line needs index and code point", lineno)
            index, cp = _hex(tokens[1], lineno), _hex(tokens[2], lineno)
            if cp in byte2:
                raise TableError("code point %04X mapped twice" % cp, lineno)
            if ("byte2", index) in linenos:
                raise TableError("byte2 index %X assigned twice" % index, lineno)
            byte2[cp] = index
            linenos[("byte2", index)] = lineno
        else:
            raise TableError("unknown line type %r" % kind, lineno)
    if version is None:
        raise TableError("missing version line")
    return TableSet(blocks, byte2, version, linenos)


def load_tables(path) -> TableSet:
    with open(path, "rb") as f:
        return parse_tables(f.read())


@functools.lru_cache(maxsize=None)
def default_tables() -> TableSet:
    """The bundled default tables (shared, immutable)."""
    return parse_tables(resources.files("duncode").joinpath("data", "default.tables").read_bytes())
