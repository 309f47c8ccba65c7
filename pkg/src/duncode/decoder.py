"""Duncode bytes to text.

Units end at the first byte with a clear high bit, so the byte stream can be
cut into units without any context (:func:`segment`), and a reader dropped
at an arbitrary offset finds the next boundary with :func:`resync`.

Two error policies:

``strict``
    raise :class:`~duncode.errors.DecodeError` carrying the byte offset of
    the first bad unit.
``replace``
    emit one U+FFFD per malformed unit and carry on.

A stream whose last unit has no tail byte is truncated; that counts as one
malformed unit.  Well-formed but non-canonical units (an ASCII letter
packed as isolate, say) decode normally; :func:`check_canonical` finds
them.
"""

import re
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .errors import ContractError, DecodeError, MalformedUnitError
from .tables import TableSet, Zone, default_tables
from .unit import DuncodeUnit, unpack_unit

REPLACEMENT = "\ufffd"
STRICT = "strict"
REPLACE = "replace"
POLICIES = (STRICT, REPLACE)

MAX_UNIT = 4
_MEMO_LIMIT = 1 << 18

_UNIT = re.compile(rb"[\x80-\xff]*[\x00-\x7f]")
# An ASCII run is a run of whole units once we are at a boundary.
_TOKEN = re.compile(rb"[\x00-\x7f]+|[\x80-\xff]+[\x00-\x7f]?")
_TAIL = re.compile(rb"[\x00-\x7f]")
_HIGH = bytes(range(0x80, 0x100))


def _check_policy(policy):
    if policy not in POLICIES:
        raise ValueError("policy must be 'strict' or 'replace', not %r" % (policy,))


def segment(data) -> Tuple[List[bytes], bytes]:
    """Split ``data`` after every tail byte.

    Returns the unit slices and whatever trails the last tail byte.  Slices
    longer than four bytes are returned as they are; they are malformed.
    """
    data = bytes(data)
    units = _UNIT.findall(data)
    used = sum(map(len, units))
    return units, data[used:]


def resync(data, start_offset: int) -> int:
    """Offset one past the first tail byte at or after ``start_offset``."""
    n = len(data)
    if not 0 <= start_offset <= n:
        raise ValueError("start_offset %d outside 0..%d" % (start_offset, n))
    m = _TAIL.search(data, start_offset)
    return m.end() if m else n


def unit_text(unit, tables: TableSet) -> str:
    """Decode one tail-terminated unit, raising MalformedUnitError."""
    if len(unit) > MAX_UNIT:
        raise MalformedUnitError("unit exceeds %d bytes" % MAX_UNIT)
    u = unpack_unit(unit)
    zone = u.zone
    if zone == Zone.ASCII or zone == Zone.ISOLATE:
        return chr(u.payload)
    if zone == Zone.BYTE2:
        return chr(tables.byte2_char(u.payload))
    return "".join(chr(tables.lookup_letter(zone, u.alphabet_id, i)) for i in u.letters)


def decode_unit(unit_bytes, tables: Optional[TableSet] = None, policy: str = REPLACE) -> str:
    _check_policy(policy)
    tables = tables or default_tables()
    try:
        return unit_text(bytes(unit_bytes), tables)
    except MalformedUnitError:
        if policy == STRICT:
            raise
        return REPLACEMENT


def _decode_complete(buf, base, tables, policy):
    # ``buf`` is empty or ends with a tail byte.
    memo = tables._decode_memo
    parts = []
    pos = base
    for tok in _TOKEN.findall(buf):
        if tok[0] < 0x80:
            parts.append(tok.decode("ascii"))
        else:
            s = memo.get(tok)
            if s is None:
                try:
                    s = unit_text(tok, tables)
                except MalformedUnitError as exc:
                    if policy == STRICT:
                        raise DecodeError(str(exc), pos) from None
                    s = REPLACEMENT
                else:
                    if len(memo) >= _MEMO_LIMIT:
                        memo.clear()
                    memo[tok] = s
            parts.append(s)
        pos += len(tok)
    return "".join(parts)


class Decoder:
    """Streaming decoder.

    Feeding a stream in any chunking gives the same text as decoding it in
    one piece.  Up to three bytes of an unfinished unit are held back
    between calls; a longer unfinished unit is already known to be
    malformed, so only its start offset is kept.
    """

    def __init__(self, tables: Optional[TableSet] = None, policy: str = REPLACE):
        _check_policy(policy)
        self.tables = tables or default_tables()
        self.policy = policy
        self._carry = b""
        self._pos = 0  # stream offset of the first byte not yet decoded
        self._overlong_at = None

    @property
    def carry(self) -> bytes:
        return self._carry

    @property
    def offset(self) -> int:
        return self._pos

    def _malformed(self, reason, offset):
        if self.policy == STRICT:
            raise DecodeError(reason, offset)
        return REPLACEMENT

    def decode(self, data, final: bool = False) -> str:
        data = bytes(data)
        head = ""
        if self._overlong_at is not None:
            m = _TAIL.search(data)
            if m is None:
                self._pos += len(data)
                if final:
                    at, self._overlong_at = self._overlong_at, None
                    return self._malformed("truncated unit", at)
                return ""
            at, self._overlong_at = self._overlong_at, None
            head = self._malformed("unit exceeds %d bytes" % MAX_UNIT, at)
            self._pos += m.end()
            data = data[m.end():]

        buf = self._carry + data
        cut = len(buf.rstrip(_HIGH))
        text = _decode_complete(buf[:cut], self._pos, self.tables, self.policy)
        self._pos += cut
        carry = buf[cut:]
        self._carry = b""
        tail = ""
        if carry:
            if final:
                tail = self._malformed("truncated unit", self._pos)
                self._pos += len(carry)
            elif len(carry) >= MAX_UNIT:
                self._overlong_at = self._pos
                self._pos += len(carry)
            else:
                self._carry = carry
        return head + text + tail

    def flush(self) -> str:
        return self.decode(b"", final=True)

    def reset(self):
        self._carry = b""
        self._pos = 0
        self._overlong_at = None


def decode_bytes(data, tables: Optional[TableSet] = None, policy: str = REPLACE) -> str:
    return Decoder(tables, policy).decode(data, final=True)


@dataclass(frozen=True)
class UnitRecord:
    offset: int
    raw: bytes
    unit: Optional[DuncodeUnit]
    text: str
    error: Optional[str] = None


def inspect_units(data, tables: Optional[TableSet] = None) -> Iterator[UnitRecord]:
    """Yield one record per unit, malformed ones included."""
    tables = tables or default_tables()
    units, carry = segment(data)
    pos = 0
    for raw in units + ([carry] if carry else []):
        unit = None
        try:
            if raw[-1] & 0x80:
                raise MalformedUnitError("truncated unit")
            if len(raw) <= MAX_UNIT:
                unit = unpack_unit(raw)
            text = unit_text(raw, tables)
        except (MalformedUnitError, ContractError) as exc:
            yield UnitRecord(pos, raw, unit, REPLACEMENT, str(exc))
        else:
            yield UnitRecord(pos, raw, unit, text)
        pos += len(raw)


def check_canonical(data, tables: Optional[TableSet] = None) -> Optional[int]:
    """Offset of the first unit the encoder would not have produced, or None.

    Raises DecodeError if ``data`` does not decode at all.
    """
    from .encoder import encode_string

    data = bytes(data)
    tables = tables or default_tables()
    again = encode_string(decode_bytes(data, tables, STRICT), tables)
    if again == data:
        return None
    i = 0
    for i, (a, b) in enumerate(zip(again, data)):
        if a != b:
            break
    else:
        i = min(len(again), len(data))
    # back up to the start of the unit holding byte i
    while i > 0 and data[i - 1] & 0x80:
        i -= 1
    return i
