import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from duncode import decode, encode
from duncode.decoder import (
    REPLACEMENT,
    Decoder,
    check_canonical,
    decode_bytes,
    decode_unit,
    inspect_units,
    resync,
    segment,
)
from duncode.errors import DecodeError, MalformedUnitError

texts = st.text(max_size=60).filter(lambda s: not any(0xD800 <= ord(c) <= 0xDFFF for c in s))


def test_segment_example():
    units, carry = segment(bytes.fromhex("E2858443") + b"A" + bytes.fromhex("86"))
    assert units == [bytes.fromhex("E2858443"), b"A"]
    assert carry == b"\x86"


def test_resync_examples():
    data = bytes.fromhex("E2858443") + b"A"
    assert resync(data, 0) == 4
    assert resync(data, 1) == 4
    assert resync(data, 4) == 5
    assert resync(data, 5) == 5
    assert resync(b"\x80\x80", 0) == 2
    with pytest.raises(ValueError):
        resync(data, 6)


def test_decode_examples():
    assert decode(bytes.fromhex("E2858443")) == "αβγ"
    assert decode(bytes.fromhex("8631")) == "α"
    assert decode(bytes.fromhex("848000")) == "\U00010000"
    assert decode(b"") == ""


def test_decode_unit():
    assert decode_unit(bytes.fromhex("8069")) == "é"
    assert decode_unit(b"\x80\x80\x80\x80\x00") == REPLACEMENT
    with pytest.raises(MalformedUnitError):
        decode_unit(b"\x80\x80\x80\x80\x00", policy="strict")
    with pytest.raises(ValueError):
        decode_unit(b"a", policy="ignore")


def test_overlong_unit_strict_offset():
    with pytest.raises(DecodeError) as info:
        decode(b"\x80\x80\x80\x80\x00", policy="strict")
    assert str(info.value) == "unit exceeds 4 bytes at offset 0"
    assert info.value.offset == 0


def test_truncated_unit_strict_offset():
    with pytest.raises(DecodeError) as info:
        decode(b"abc\xe2\x85", policy="strict")
    assert info.value.offset == 3
    assert info.value.reason == "truncated unit"


def test_bad_unit_offset_after_good_units():
    data = encode("αβγ é") + bytes.fromhex("8A81FF05")
    with pytest.raises(DecodeError) as info:
        decode(data, policy="strict")
    assert info.value.offset == len(encode("αβγ é"))


def test_replace_one_fffd_per_unit():
    assert decode(b"a\x80\x80\x80\x80\x00b") == "a�b"
    assert decode(b"a\xe2\x85") == "a�"
    assert decode(bytes.fromhex("8A81FF05")) == REPLACEMENT  # pad in y


def test_unknown_alphabet_or_letter_is_malformed(tables):
    # Greek has 224 letters, so index 0xF0 is unassigned.
    assert decode(bytes((0xE7, 0xC0, 0x80, 0x00))) == REPLACEMENT
    # bit7 alphabet 95 has fewer than 127 letters
    size = tables.alphabet_size(__import__("duncode").Zone.BIT7, 95)
    assert size < 0x7E
    assert decode(bytes((0xDF, 0xFE, 0x80, 0x00))) == REPLACEMENT


def test_isolate_surrogate_is_malformed():
    assert decode(bytes.fromhex("83B000")) == REPLACEMENT


def test_non_canonical_decodes_and_is_flagged():
    data = b"x" + bytes.fromhex("808041")  # "A" packed as isolate
    assert decode(data, policy="strict") == "xA"
    assert check_canonical(data) == 1
    assert check_canonical(encode("xA")) is None


def test_check_canonical_padding():
    # αβ padded is valid but the encoder writes two byte2 units
    data = bytes((0xE2, 0x85, 0x85, 0x7F))
    assert decode(data) == "αβ"
    assert check_canonical(data) == 0


@given(texts)
def test_round_trip(text):
    assert decode_bytes(encode(text), policy="strict") == text


@given(st.binary(max_size=64), st.lists(st.integers(0, 64), max_size=5), st.booleans())
def test_streaming_equals_whole(data, cuts, strict):
    policy = "strict" if strict else "replace"
    try:
        whole = decode_bytes(data, policy=policy)
    except DecodeError as exc:
        whole = exc
    dec = Decoder(policy=policy)
    parts = []
    prev = 0
    try:
        for c in sorted({min(c, len(data)) for c in cuts}) + [len(data)]:
            parts.append(dec.decode(data[prev:c]))
            prev = c
        parts.append(dec.flush())
        got = "".join(parts)
    except DecodeError as exc:
        got = exc
    if isinstance(whole, DecodeError):
        assert isinstance(got, DecodeError)
        assert (got.reason, got.offset) == (whole.reason, whole.offset)
    else:
        assert got == whole


@given(st.binary(max_size=64))
def test_replace_never_raises(data):
    out = decode(data)
    units, carry = segment(data)
    assert out.count(REPLACEMENT) <= len(units) + bool(carry)


def test_carry_holds_at_most_three_bytes():
    dec = Decoder()
    assert dec.decode(b"\xe2\x85\x84") == ""
    assert dec.carry == b"\xe2\x85\x84"
    assert dec.decode(b"\x43") == "αβγ"
    assert dec.decode(b"\x80" * 10) == ""
    assert len(dec.carry) == 0
    assert dec.decode(b"\x00z") == REPLACEMENT + "z"
    assert dec.offset == 4 + 11 + 1
    dec.reset()
    assert dec.offset == 0


def test_long_garbage_strict_reports_start():
    dec = Decoder(policy="strict")
    dec.decode(b"ok")
    dec.decode(b"\x81" * 7)
    with pytest.raises(DecodeError) as info:
        dec.decode(b"\x01")
    assert info.value.offset == 2


@given(texts, st.data())
def test_self_sync(text, data):
    enc = encode(text)
    start = data.draw(st.integers(0, len(enc)))
    r = resync(enc, start)
    # the resync point is a unit boundary of the original stream
    bounds = {0}
    pos = 0
    for u in segment(enc)[0]:
        pos += len(u)
        bounds.add(pos)
    assert r in bounds
    assert decode(enc[r:], policy="strict") == decode(enc[r:])


def test_corruption_is_contained():
    rng = random.Random(1)
    text = "Ελληνικά и русский текст, हिन्दी, 中文 and English." * 4
    enc = encode(text)
    for _ in range(200):
        i = rng.randrange(len(enc))
        bad = bytearray(enc)
        bad[i] = rng.randrange(256)
        out = decode(bytes(bad))
        # everything before the damaged unit survives
        start = i
        while start and enc[start - 1] & 0x80:
            start -= 1
        assert out.startswith(decode(enc[:start]))


def test_inspect_units():
    recs = list(inspect_units(encode("αβγ") + b"A" + b"\x80\x80\x80\x80\x00" + b"\x86"))
    assert [r.offset for r in recs] == [0, 4, 5, 10]
    assert recs[0].text == "αβγ" and recs[0].unit.letters == (0x41, 0x42, 0x43)
    assert recs[1].error is None
    assert recs[2].error == "unit exceeds 4 bytes"
    assert recs[3].error == "truncated unit"
