"""Regenerate the bundled resources under src/duncode/data/.

Not needed at runtime.  Requires ``fonttools`` (Unicode block ranges) and
``jieba`` (word frequency dictionary, used to rank Hanzi by summed word
frequency)::

    pip install fonttools jieba
    python tools/gen_data.py
"""

import os
import sys
from collections import Counter

import jieba
from fontTools.unicodedata import Blocks

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, os.pardir, "src", "duncode", "data")

URO = range(0x4E00, 0xA000)  # CJK Unified Ideographs


def write_blocks(path):
    bounds = list(Blocks.RANGES) + [0x110000]
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("# Unicode block ranges, Blocks.txt syntax.\n")
        f.write("# Generated by tools/gen_data.py from fontTools.unicodedata.Blocks.\n")
        for i, name in enumerate(Blocks.VALUES):
            if name == "No_Block":
                continue
            f.write("%04X..%04X; %s\n" % (bounds[i], bounds[i + 1] - 1, name))


def write_hanzi(path):
    dict_path = os.path.join(os.path.dirname(jieba.__file__), "dict.txt")
    freq = Counter()
    with open(dict_path, encoding="utf-8") as f:
        for line in f:
            word, count = line.split()[:2]
            for ch in word:
                if ord(ch) in URO:
                    freq[ch] += int(count)
    ranked = sorted(freq, key=lambda ch: (-freq[ch], ord(ch)))
    seen = set(ranked)
    ranked += [chr(cp) for cp in URO if chr(cp) not in seen]
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("# Hanzi in descending frequency, one per line.\n")
        f.write("# Ranked by summed jieba dict.txt word counts; unranked CJK Unified\n")
        f.write("# Ideographs follow in code point order.\n")
        for ch in ranked:
            f.write(ch + "\n")


if __name__ == "__main__":
    os.makedirs(DATA, exist_ok=True)
    write_blocks(os.path.join(DATA, "blocks.txt"))
    write_hanzi(os.path.join(DATA, "hanzi_freq.txt"))
    sys.stdout.write("wrote %s\n" % os.path.normpath(DATA))
