"""Looking inside a stream: how characters are classified and packed."""

from duncode import Zone, default_tables, encode
from duncode.decoder import inspect_units
from duncode.cli import format_record

tables = default_tables()
print(tables)

for ch in "Aéαкقक中가😀":
    c = tables.classify(ord(ch))
    print("%s U+%04X  %-7s alphabet=%-4s letter=%-6s byte2=%s" % (
        ch, ord(ch), c.zone, c.alphabet_id, c.letter_index, c.byte2_index))

# The four bit8 alphabets and the first few bit7 ones
for aid in tables.alphabets(Zone.BIT8):
    print("bit8", aid, [b.name for b in tables.blocks if b.zone == Zone.BIT8 and b.alphabet_id == aid])
for aid in list(tables.alphabets(Zone.BIT7))[:5]:
    print("bit7", aid, [b.name for b in tables.blocks if b.zone == Zone.BIT7 and b.alphabet_id == aid])

stream = encode("Αθήνα и Москва, दिल्ली 北京")
for rec in inspect_units(stream):
    print(format_record(rec))
