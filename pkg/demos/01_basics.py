"""Encoding and decoding a few strings, and what the bytes look like."""

import duncode

samples = [
    "plain ASCII stays as it is",
    "αβγ",                # three Greek letters share one 4-byte unit
    "αβ",                 # two of them: two 2-byte units are just as short
    "कखग",                # Devanagari, a bit7 alphabet
    "中文",               # common Hanzi have 2-byte slots
    "한국어",             # Hangul syllables fall back to 3 bytes each
    "😀",
]

for s in samples:
    data = duncode.encode(s)
    print("%-28s utf8=%2d  duncode=%2d  %s" % (s, len(s.encode()), len(data), data.hex(" ")))
    assert duncode.decode(data) == s

# The codec is also registered with Python's codec machinery.
print("Ελληνικά".encode("duncode"))
print(b"\xe2\x85\x84\x43".decode("duncode"))

# Bad input under the default policy gives U+FFFD per broken unit.
print(duncode.decode(b"ok\x80\x80\x80\x80\x00ok"))
try:
    duncode.decode(b"ok\xe2\x85", policy="strict")
except duncode.DecodeError as exc:
    print("strict:", exc)
