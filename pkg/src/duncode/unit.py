"""Bit packing of a single Duncode unit.

Layouts, most significant bit first (``x``, ``y``, ``z`` are letter
indexes, ``n`` the alphabet id)::

    ascii    0xxxxxxx
    byte2    1xxxxxxx 0xxxxxxx
    isolate  1xxxxxxx 1xxxxxxx 0xxxxxxx
    bit8     111nnxxx 1xxxxxyy 1yyyyyyz 0zzzzzzz
    bit7     1nnnnnnn 1xxxxxxx 1yyyyyyy 0zzzzzzz

Only the last byte of a unit (the tail byte) has its high bit clear.  A
bit7/bit8 unit carrying two letters holds the pad value in the ``z`` slot.

This module knows nothing about tables; letter indexes are plain integers.
"""

from dataclasses import dataclass
from typing import Tuple, Union

from .errors import ContractError, MalformedUnitError
from .tables import ALPHABET_COUNT, BYTE2_SIZE, PAD, Zone, is_scalar

UNIT_LENGTH = {Zone.ASCII: 1, Zone.BYTE2: 2, Zone.ISOLATE: 3, Zone.BIT8: 4, Zone.BIT7: 4}


@dataclass(frozen=True)
class DuncodeUnit:
    zone: Zone
    payload: Union[int, Tuple[int, int, int]]
    alphabet_id: int = None

    @classmethod
    def compressed(cls, zone, alphabet_id, letters) -> "DuncodeUnit":
        """Build a bit7/bit8 unit from 2 or 3 letter indexes, padding as needed."""
        letters = tuple(letters)
        if len(letters) == 2:
            letters += (PAD[zone],)
        return cls(Zone(zone), letters, alphabet_id)

    @property
    def letters(self) -> Tuple[int, ...]:
        """Letter indexes without the pad."""
        x, y, z = self.payload
        return (x, y) if z == PAD[self.zone] else (x, y, z)


def _check(unit):
    zone = unit.zone
    if zone in (Zone.BIT8, Zone.BIT7):
        aid = unit.alphabet_id
        if aid is None or not 0 <= aid < ALPHABET_COUNT[zone]:
            raise ContractError("bad %s alphabet id %r" % (zone, aid))
        if not isinstance(unit.payload, tuple) or len(unit.payload) != 3:
            raise ContractError("%s payload must be three letter indexes" % zone)
        pad = PAD[zone]
        x, y, z = unit.payload
        if not (0 <= x < pad and 0 <= y < pad and 0 <= z <= pad):
            raise ContractError("%s letter index out of range: %r" % (zone, unit.payload))
        return
    if unit.alphabet_id is not None or not isinstance(unit.payload, int):
        raise ContractError("%s unit takes a single integer payload" % zone)
    value = unit.payload
    if zone == Zone.ASCII:
        ok = 0 <= value < 0x80
    elif zone == Zone.BYTE2:
        ok = 0 <= value < BYTE2_SIZE
    elif zone == Zone.ISOLATE:
        ok = is_scalar(value)
    else:
        raise ContractError("unknown zone %r" % zone)
    if not ok:
        raise ContractError("%s payload %#x out of range" % (zone, value))


def pack_unit(unit: DuncodeUnit) -> bytes:
    _check(unit)
    zone, v = unit.zone, unit.payload
    if zone == Zone.ASCII:
        return bytes((v,))
    if zone == Zone.BYTE2:
        return bytes((0x80 | v >> 7, v & 0x7F))
    if zone == Zone.ISOLATE:
        return bytes((0x80 | v >> 14, 0x80 | (v >> 7) & 0x7F, v & 0x7F))
    x, y, z = v
    if zone == Zone.BIT8:
        return pack_bit8(unit.alphabet_id, x, y, z)
    return pack_bit7(unit.alphabet_id, x, y, z)


def pack_bit8(n, x, y, z) -> bytes:
    return bytes((
        0xE0 | n << 3 | x >> 5,
        0x80 | (x & 0x1F) << 2 | y >> 6,
        0x80 | (y & 0x3F) << 1 | z >> 7,
        z & 0x7F,
    ))


def pack_bit7(n, x, y, z) -> bytes:
    return bytes((0x80 | n, 0x80 | x, 0x80 | y, z))


def unpack_unit(data) -> DuncodeUnit:
    """Inverse of :func:`pack_unit`.

    Raises :class:`MalformedUnitError` for content errors and
    :class:`ContractError` if ``data`` is not a single tail-terminated unit.
    """
    n = len(data)
    if not 1 <= n <= 4:
        raise MalformedUnitError("unit length %d not in 1..4" % n)
    if data[-1] & 0x80:
        raise ContractError("unit does not end with a tail byte")
    for b in data[:-1]:
        if not b & 0x80:
            raise ContractError("tail byte before end of unit")
    if n == 1:
        return DuncodeUnit(Zone.ASCII, data[0])
    if n == 2:
        return DuncodeUnit(Zone.BYTE2, (data[0] & 0x7F) << 7 | data[1])
    if n == 3:
        cp = (data[0] & 0x7F) << 14 | (data[1] & 0x7F) << 7 | data[2]
        if not is_scalar(cp):
            raise MalformedUnitError("isolate payload %#x is not a scalar value" % cp)
        return DuncodeUnit(Zone.ISOLATE, cp)
    b0, b1, b2, b3 = data
    if b0 >= 0xE0:
        zone = Zone.BIT8
        aid = (b0 >> 3) & 0x03
        x = (b0 & 0x07) << 5 | (b1 & 0x7F) >> 2
        y = (b1 & 0x03) << 6 | (b2 & 0x7F) >> 1
        z = (b2 & 0x01) << 7 | b3
    else:
        zone = Zone.BIT7
        aid = b0 & 0x7F
        x, y, z = b1 & 0x7F, b2 & 0x7F, b3
    pad = PAD[zone]
    if x == pad or y == pad:
        raise MalformedUnitError("pad in a non-final %s slot" % zone)
    return DuncodeUnit(zone, (x, y, z), aid)
