import pytest
from hypothesis import given
from hypothesis import strategies as st

from duncode.errors import ContractError, MalformedUnitError
from duncode.tables import Zone
from duncode.unit import DuncodeUnit, pack_unit, unpack_unit


def bits(value, width):
    return format(value, "0%db" % width)


def from_bits(s):
    s = s.replace(" ", "")
    assert len(s) % 8 == 0
    return bytes(int(s[i:i + 8], 2) for i in range(0, len(s), 8))


def oracle(unit):
    """Pack by spelling out the bit pattern of each layout."""
    z = unit.zone
    if z == Zone.ASCII:
        return from_bits("0" + bits(unit.payload, 7))
    if z == Zone.BYTE2:
        v = bits(unit.payload, 14)
        return from_bits("1" + v[:7] + "0" + v[7:])
    if z == Zone.ISOLATE:
        v = bits(unit.payload, 21)
        return from_bits("1" + v[:7] + "1" + v[7:14] + "0" + v[14:])
    x, y, zz = unit.payload
    if z == Zone.BIT8:
        p = bits(unit.alphabet_id, 2) + bits(x, 8) + bits(y, 8) + bits(zz, 8)
        return from_bits("111" + p[:5] + "1" + p[5:12] + "1" + p[12:19] + "0" + p[19:])
    return from_bits(
        "1" + bits(unit.alphabet_id, 7) + "1" + bits(x, 7) + "1" + bits(y, 7) + "0" + bits(zz, 7)
    )


def test_greek_example():
    u = DuncodeUnit(Zone.BIT8, (0x41, 0x42, 0x43), 0)
    assert pack_unit(u) == bytes.fromhex("E2858443")
    assert unpack_unit(bytes.fromhex("E2858443")) == u


def test_byte2_example():
    assert pack_unit(DuncodeUnit(Zone.BYTE2, 0x331)) == bytes.fromhex("8631")


def test_isolate_example():
    assert pack_unit(DuncodeUnit(Zone.ISOLATE, 0x10000)) == bytes.fromhex("848000")
    assert pack_unit(DuncodeUnit(Zone.ISOLATE, 0xAC00)) == bytes.fromhex("82D800")


def test_padded_units():
    u = DuncodeUnit.compressed(Zone.BIT7, 10, (0x15, 0x16))
    assert u.payload == (0x15, 0x16, 0x7F)
    assert u.letters == (0x15, 0x16)
    assert pack_unit(u) == bytes((0x8A, 0x95, 0x96, 0x7F))
    u8 = DuncodeUnit.compressed(Zone.BIT8, 0, (0x41, 0x42))
    assert u8.payload[2] == 0xFF
    assert unpack_unit(pack_unit(u8)).letters == (0x41, 0x42)


@pytest.mark.parametrize("value", range(0x80))
def test_ascii_round_trip(value):
    u = DuncodeUnit(Zone.ASCII, value)
    assert pack_unit(u) == oracle(u) == bytes((value,))
    assert unpack_unit(bytes((value,))) == u


def test_byte2_round_trip_exhaustive():
    for v in range(1 << 14):
        u = DuncodeUnit(Zone.BYTE2, v)
        b = pack_unit(u)
        assert b == oracle(u)
        assert unpack_unit(b) == u


scalars = st.integers(0, 0x10FFFF).filter(lambda c: not 0xD800 <= c <= 0xDFFF)


@st.composite
def units(draw):
    zone = draw(st.sampled_from(list(Zone)))
    if zone == Zone.ASCII:
        return DuncodeUnit(zone, draw(st.integers(0, 0x7F)))
    if zone == Zone.BYTE2:
        return DuncodeUnit(zone, draw(st.integers(0, 0x3FFF)))
    if zone == Zone.ISOLATE:
        return DuncodeUnit(zone, draw(scalars))
    top = 0xFF if zone == Zone.BIT8 else 0x7F
    aid = draw(st.integers(0, 3 if zone == Zone.BIT8 else 95))
    xy = st.integers(0, top - 1)
    return DuncodeUnit(zone, (draw(xy), draw(xy), draw(st.integers(0, top))), aid)


@given(units())
def test_round_trip_and_oracle(u):
    b = pack_unit(u)
    assert b == oracle(u)
    assert unpack_unit(b) == u


@given(units())
def test_only_last_byte_is_tail(u):
    b = pack_unit(u)
    assert 1 <= len(b) <= 4
    assert b[-1] < 0x80
    assert all(x >= 0x80 for x in b[:-1])


def test_bit7_and_bit8_first_bytes_are_disjoint():
    # bit7 ids stop at 95, so its first byte never reaches 0xE0.
    assert pack_unit(DuncodeUnit(Zone.BIT7, (0, 0, 0), 95))[0] == 0xDF


@pytest.mark.parametrize(
    "unit",
    [
        DuncodeUnit(Zone.ASCII, 0x80),
        DuncodeUnit(Zone.BYTE2, 1 << 14),
        DuncodeUnit(Zone.ISOLATE, 0xD800),
        DuncodeUnit(Zone.ISOLATE, 0x110000),
        DuncodeUnit(Zone.BIT8, (0, 0, 0), 4),
        DuncodeUnit(Zone.BIT7, (0, 0, 0), 96),
        DuncodeUnit(Zone.BIT7, (0x7F, 0, 0), 0),
        DuncodeUnit(Zone.BIT8, (0, 0xFF, 0), 0),
        DuncodeUnit(Zone.BIT7, (0, 0), 0),
        DuncodeUnit(Zone.ASCII, 1, 0),
    ],
)
def test_pack_rejects_bad_units(unit):
    with pytest.raises(ContractError):
        pack_unit(unit)


@pytest.mark.parametrize(
    "data, error",
    [
        (b"", MalformedUnitError),
        (b"\x80\x80\x80\x80\x00", MalformedUnitError),
        (bytes.fromhex("83B000"), MalformedUnitError),  # surrogate U+D800
        (bytes.fromhex("C48000"), MalformedUnitError),  # above U+10FFFF
        (bytes((0x8A, 0xFF, 0x81, 0x05)), MalformedUnitError),  # pad in x
        (bytes((0x8A, 0x81, 0xFF, 0x05)), MalformedUnitError),  # pad in y
        (b"\x80", ContractError),
        (b"\x01\x02", ContractError),
    ],
)
def test_unpack_errors(data, error):
    with pytest.raises(error):
        unpack_unit(data)
