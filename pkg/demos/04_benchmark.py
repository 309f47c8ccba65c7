"""Sizes against UTF-8 on the built-in synthetic corpora."""

from duncode.bench import measure, report, synthetic_rows

rows = synthetic_rows(n_chars=50_000, seed=0)
print(report(rows, format="markdown", utf16=True))

# Any text or UTF-8 file can be measured the same way.
row = measure("Hello", label="hello")
print(report([row]))

# Sizes of pure runs: three letters per four bytes.
for s in ("α" * 300, "क" * 300, "ж" * 300):
    r = measure(s)
    print(s[0], r.n_bytes_utf8, r.n_bytes_duncode, float(r.sym_len_duncode))
