from pathlib import Path

import pytest

from duncode.corpus import (
    CorpusError,
    CorpusSpec,
    extract,
    iter_dump_articles,
    strip_wikitext,
    truncate_utf8,
    write_text,
)

FIXTURES = Path(__file__).parent / "fixtures"


def test_plain_cap(tmp_path):
    p = tmp_path / "abc.txt"
    p.write_bytes(b"abc")
    assert extract(CorpusSpec(p, max_bytes=2)) == "ab"
    assert CorpusSpec(p).label == "abc"


def test_plain_cap_backs_off_multibyte(tmp_path):
    p = tmp_path / "x.txt"
    write_text("aé€", p)
    assert extract(CorpusSpec(p, max_bytes=4)) == "aé"
    assert extract(CorpusSpec(p, max_bytes=2)) == "a"


def test_truncate_utf8():
    data = "😀x".encode()
    assert truncate_utf8(data, 3) == b""
    assert truncate_utf8(data, 4) == "😀".encode()
    assert truncate_utf8(data, 99) == data


def test_invalid_utf8_file(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_bytes(b"ok\xc3(")
    with pytest.raises(CorpusError, match="at byte offset 2"):
        extract(CorpusSpec(p))


def test_missing_file(tmp_path):
    with pytest.raises(CorpusError, match="cannot read"):
        extract(CorpusSpec(tmp_path / "nope.txt"))


def test_spec_validation():
    with pytest.raises(ValueError):
        CorpusSpec("a", max_bytes=0)
    with pytest.raises(ValueError):
        CorpusSpec("a", kind="html")


def test_strip_wikitext():
    src = (
        "'''Bold''' in [[France|French]] and [[Paris]].<!-- hidden -->"
        "{{Infobox|x={{inner}}}}<ref name=a>note</ref>"
        "[[File:X.jpg|thumb|a [[link]] inside]]\n"
        "== Heading ==\n{| class=wikitable\n|cell\n|}\n"
        "[https://example.org label] <br/>end"
    )
    assert strip_wikitext(src) == "Bold in French and Paris.\nHeading\n\nlabel end"


def test_dump_articles_keep_namespace_zero():
    arts = list(iter_dump_articles(FIXTURES / "mini_dump.xml"))
    assert len(arts) == 2
    assert arts[1] == "Η [[Αθήνα]] είναι πόλη."


def test_dump_extract():
    text = extract(CorpusSpec(FIXTURES / "mini_dump.xml", kind="wikidump"))
    assert text.startswith("Paris is the capital of French republic.")
    assert "talk page" not in text
    assert "citation" not in text and "Category" not in text
    assert text.endswith("Η Αθήνα είναι πόλη.")


def test_dump_extract_cap():
    text = extract(CorpusSpec(FIXTURES / "mini_dump.xml", kind="wikidump", max_bytes=20))
    assert text == "Paris is the capital"


def test_malformed_dump(tmp_path):
    p = tmp_path / "bad.xml"
    p.write_bytes(b"<mediawiki><page><ns>0</ns></oops></mediawiki>")
    with pytest.raises(CorpusError) as info:
        list(iter_dump_articles(p))
    bad = p.read_bytes().index(b"</oops>")
    assert bad <= info.value.offset < bad + len(b"</oops>")
    assert "malformed XML" in str(info.value)
