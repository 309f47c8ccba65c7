"""Dropping into the middle of a stream, and what one flipped bit costs."""

import duncode
from duncode import resync

text = "Греческий: αβγδε, хинди: नमस्ते, 中文字符."
data = duncode.encode(text)
print(len(data), "bytes")

# Start reading at every offset; each time we land on a unit boundary and
# the rest decodes to a suffix of the text.
for off in range(0, len(data), 7):
    start = resync(data, off)
    tail = duncode.decode(data[start:])
    assert text.endswith(tail)
    print("%3d -> %3d  %s" % (off, start, tail))

# Flip one bit in the middle.
bad = bytearray(data)
bad[len(bad) // 2] ^= 0x10
print(text)
print(duncode.decode(bytes(bad)))

# Feeding the decoder one byte at a time gives the same text.
dec = duncode.Decoder()
pieces = [dec.decode(bytes([b])) for b in data] + [dec.flush()]
assert "".join(pieces) == text
