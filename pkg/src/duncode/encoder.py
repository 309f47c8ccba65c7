"""Text to Duncode bytes.

Characters of one bit7/bit8 alphabet that arrive back to back are grouped
three at a time into 4-byte units.  A run that ends with one or two
leftover letters is drained into shorter units:

* one letter becomes a byte2 unit if it has a byte2 slot, else isolate;
* two letters become a padded 4-byte unit only if that beats emitting them
  one by one (strictly fewer bytes); a tie keeps the single units.

Any character outside the current alphabet, ASCII space included, ends the
run.
"""

from typing import Optional

from .errors import InvalidInputError
from .tables import PAD, TableSet, Zone, default_tables
from .unit import pack_bit7, pack_bit8

_BIT8 = int(Zone.BIT8)


def _run_key(zone, alphabet_id):
    return int(zone) << 7 | alphabet_id


def _pack(key, x, y, z):
    if key >> 7 == _BIT8:
        return pack_bit8(key & 0x7F, x, y, z)
    return pack_bit7(key & 0x7F, x, y, z)


def _pad(key):
    return PAD[Zone(key >> 7)]


def char_info(tables: TableSet, ch: str):
    """Return ``(run_key, letter_index, single_unit_bytes)`` for ``ch``.

    ``run_key`` is None for characters that never join a run.  Results are
    memoised on the table set.
    """
    info = tables._encode_memo.get(ch)
    if info is not None:
        return info
    cp = ord(ch)
    c = tables.classify(cp)
    if cp < 0x80:
        single = bytes((cp,))
    elif c.byte2_index is not None:
        v = c.byte2_index
        single = bytes((0x80 | v >> 7, v & 0x7F))
    else:
        single = bytes((0x80 | cp >> 14, 0x80 | (cp >> 7) & 0x7F, cp & 0x7F))
    key = _run_key(c.zone, c.alphabet_id) if c.compressible else None
    info = (key, c.letter_index, single)
    tables._encode_memo[ch] = info
    return info


class Encoder:
    """Streaming encoder.

    Output depends only on the characters fed, not on how they are split
    across :meth:`encode` / :meth:`push_char` calls.  Not thread-safe; use
    one encoder per stream.
    """

    def __init__(self, tables: Optional[TableSet] = None):
        self.tables = tables or default_tables()
        self._key = None
        self._pending = []
        self._count = 0

    @property
    def pending(self):
        """Letter indexes waiting for the current run to fill or end."""
        return [info[1] for info in self._pending]

    def encode(self, text: str, final: bool = False) -> bytes:
        memo = self.tables._encode_memo
        tables = self.tables
        out = bytearray()
        key = self._key
        pending = list(self._pending)
        try:
            for ch in text:
                info = memo.get(ch)
                if info is None:
                    info = char_info(tables, ch)
                k = info[0]
                if k is None:
                    if pending:
                        out += _drain(key, pending)
                        pending = []
                        key = None
                    out += info[2]
                elif k == key:
                    pending.append(info)
                    if len(pending) == 3:
                        out += _pack(k, pending[0][1], pending[1][1], info[1])
                        pending = []
                        key = None
                else:
                    if pending:
                        out += _drain(key, pending)
                    pending = [info]
                    key = k
        except InvalidInputError as exc:
            # The first occurrence of the bad character is the one that failed.
            exc.offset = self._count + text.index(ch)
            exc.args = ("%s (character offset %d)" % (exc.args[0], exc.offset),)
            raise
        self._count += len(text)
        if final and pending:
            out += _drain(key, pending)
            pending = []
            key = None
        self._key, self._pending = key, pending
        return bytes(out)

    def push_char(self, cp: int) -> bytes:
        if not 0 <= cp <= 0x10FFFF:
            raise InvalidInputError("U+%04X is not a Unicode scalar value" % cp, self._count)
        return self.encode(chr(cp))

    def flush(self) -> bytes:
        return self.encode("", final=True)


def _drain(key, pending):
    if len(pending) == 1:
        return pending[0][2]
    a, b = pending
    if len(a[2]) + len(b[2]) > 4:
        return _pack(key, a[1], b[1], _pad(key))
    return a[2] + b[2]


def encode_string(text: str, tables: Optional[TableSet] = None) -> bytes:
    return Encoder(tables).encode(text, final=True)


def encoded_size(text: str, tables: Optional[TableSet] = None) -> int:
    return len(encode_string(text, tables))

