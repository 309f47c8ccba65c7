"""Benchmark text sources: plain UTF-8 files and MediaWiki XML dumps.

Dump extraction keeps the ``<text>`` of article pages (namespace 0), strips
the most common wiki markup and stops once ``max_bytes`` of UTF-8 output
have been collected.  The markup rules are deliberately small; see
:func:`strip_wikitext`.  Nothing here touches the network.
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Union
from xml.parsers import expat

from .errors import DuncodeError

DEFAULT_MAX_BYTES = 1 << 20
PLAIN = "plain"
WIKIDUMP = "wikidump"
_CHUNK = 1 << 16


class CorpusError(DuncodeError):
    def __init__(self, message, offset=None):
        if offset is not None:
            message = "%s at byte offset %d" % (message, offset)
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class CorpusSpec:
    source: Union[str, Path]
    label: str = None
    max_bytes: int = DEFAULT_MAX_BYTES
    kind: str = PLAIN

    def __post_init__(self):
        if self.max_bytes <= 0:
            raise ValueError("max_bytes must be positive")
        if self.kind not in (PLAIN, WIKIDUMP):
            raise ValueError("kind must be 'plain' or 'wikidump'")
        if self.label is None:
            object.__setattr__(self, "label", Path(self.source).stem)


def truncate_utf8(data: bytes, max_bytes: int) -> bytes:
    """Cut ``data`` to at most ``max_bytes`` without splitting a character."""
    if len(data) <= max_bytes:
        return data
    end = max_bytes
    # back off continuation bytes 10xxxxxx
    while end > 0 and data[end] & 0xC0 == 0x80:
        end -= 1
    return data[:end]


def _decode_utf8(data, source):
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorpusError("%s: invalid UTF-8" % source, exc.start) from None


# --- wikitext ---------------------------------------------------------------

_COMMENT = re.compile(r"<!--.*?-->", re.S)
_REF = re.compile(r"<ref[^>/]*/>|<ref[^>]*>.*?</ref>", re.S | re.I)
_TAG = re.compile(r"</?[A-Za-z][^<>]*>")
_FILE_LINK = re.compile(r"\[\[(?:File|Image|Category|Datei|Fichier|Archivo|Файл|Категория):[^\[\]]*(?:\[\[[^\[\]]*\]\][^\[\]]*)*\]\]", re.I)
_LINK = re.compile(r"\[\[([^\[\]|]*)(?:\|([^\[\]]*))?\]\]")
_EXT_LINK = re.compile(r"\[(?:https?:)?//[^\s\]]+(?:\s([^\]]*))?\]")
_EMPHASIS = re.compile(r"'{2,}")
_HEADING = re.compile(r"^(=+)[ \t]*(.*?)[ \t]*\1[ \t]*$", re.M)
_BLANKS = re.compile(r"\n{3,}")


def _strip_nested(text, open_, close):
    """Remove balanced ``open_ ... close`` spans.  Unclosed spans run to the end."""
    out = []
    depth = 0
    start = 0
    for m in re.finditer(re.escape(open_) + "|" + re.escape(close), text):
        if m.group() == open_:
            if depth == 0:
                out.append(text[start:m.start()])
            depth += 1
        elif depth:
            depth -= 1
            if depth == 0:
                start = m.end()
    if depth == 0:
        out.append(text[start:])
    return "".join(out)


def strip_wikitext(text: str) -> str:
    """Reduce wikitext to roughly its running prose.

    Removes comments, ``<ref>`` notes, templates ``{{...}}``, tables
    ``{|...|}``, file/category links and remaining tags; ``[[a|b]]`` becomes
    ``b`` and ``[[a]]`` becomes ``a``; ``[url label]`` becomes ``label``;
    bold/italic quotes and heading markers are dropped.
    """
    text = _COMMENT.sub("", text)
    text = _REF.sub("", text)
    text = _strip_nested(text, "{{", "}}")
    text = _strip_nested(text, "{|", "|}")
    text = _FILE_LINK.sub("", text)
    text = _LINK.sub(lambda m: m.group(2) if m.group(2) is not None else m.group(1), text)
    text = _EXT_LINK.sub(lambda m: m.group(1) or "", text)
    text = _TAG.sub("", text)
    text = _EMPHASIS.sub("", text)
    text = _HEADING.sub(r"\2", text)
    text = _BLANKS.sub("\n\n", text)
    return text.strip()


def iter_dump_articles(path) -> Iterator[str]:
    """Yield the raw wikitext of each namespace-0 page in a dump, in order."""
    parser = expat.ParserCreate()
    stack = []
    page = {}
    buf = []
    done = []

    def local(name):
        return name.rsplit("}", 1)[-1].rsplit(":", 1)[-1]

    def start(name, attrs):
        name = local(name)
        stack.append(name)
        if name == "page":
            page.clear()
        if name in ("ns", "text", "title"):
            buf.clear()

    def end(name):
        name = local(name)
        stack.pop()
        if name in ("ns", "title") and stack and stack[-1] == "page":
            page[name] = "".join(buf)
        elif name == "text":
            page["text"] = "".join(buf)
        elif name == "page":
            if page.get("ns", "0").strip() == "0" and page.get("text"):
                done.append(page["text"])

    def chars(data):
        if stack and stack[-1] in ("ns", "text", "title"):
            buf.append(data)

    parser.StartElementHandler = start
    parser.EndElementHandler = end
    parser.CharacterDataHandler = chars
    parser.buffer_text = True

    with open(path, "rb") as f:
        while True:
            chunk = f.read(_CHUNK)
            try:
                parser.Parse(chunk, not chunk)
            except expat.ExpatError as exc:
                raise CorpusError(
                    "%s: malformed XML (%s)" % (path, expat.ErrorString(exc.code)),
                    parser.CurrentByteIndex,
                ) from None
            yield from done
            done.clear()
            if not chunk:
                break


def extract(spec: CorpusSpec) -> str:
    try:
        if spec.kind == PLAIN:
            with open(spec.source, "rb") as f:
                data = f.read(spec.max_bytes + 4)
            return _decode_utf8(truncate_utf8(data, spec.max_bytes), spec.source)

        parts = []
        size = 0
        for raw in iter_dump_articles(spec.source):
            text = strip_wikitext(raw)
            if not text:
                continue
            piece = ("\n" if parts else "") + text
            parts.append(piece)
            size += len(piece.encode("utf-8"))
            if size >= spec.max_bytes:
                break
        data = "".join(parts).encode("utf-8")
        return truncate_utf8(data, spec.max_bytes).decode("utf-8")
    except OSError as exc:
        raise CorpusError("cannot read %s: %s" % (spec.source, exc.strerror or exc)) from None


def write_text(text: str, path) -> None:
    Path(path).write_bytes(text.encode("utf-8"))
