"""Command line interface.

    duncode encode [INPUT] [-o OUTPUT]         UTF-8 in, Duncode out
    duncode decode [INPUT] [-o OUTPUT]         Duncode in, UTF-8 out
    duncode inspect [INPUT]                    one line per unit
    duncode bench [FILE ...] [--synthetic]     size report
    duncode tables dump | validate PATH

INPUT defaults to stdin and OUTPUT to stdout.  Exit status is 0 on success,
1 on bad data and 2 on bad usage.
"""

import argparse
import codecs
import sys

from .bench import PROFILES, measure, report, synthetic_rows
from .corpus import DEFAULT_MAX_BYTES, PLAIN, WIKIDUMP, CorpusSpec, extract
from .decoder import REPLACE, STRICT, Decoder, check_canonical, inspect_units
from .encoder import Encoder
from .errors import DuncodeError
from .tables import Zone, default_tables, load_tables, serialize_tables

CHUNK = 1 << 16


class _Fail(Exception):
    pass


def _open_in(path, stdin):
    if path in (None, "-"):
        return stdin, False
    try:
        return open(path, "rb"), True
    except OSError as exc:
        raise _Fail("cannot open %s: %s" % (path, exc.strerror)) from None


def _open_out(path, stdout):
    if path in (None, "-"):
        return stdout, False
    try:
        return open(path, "wb"), True
    except OSError as exc:
        raise _Fail("cannot open %s: %s" % (path, exc.strerror)) from None


def _chunks(f):
    while True:
        chunk = f.read(CHUNK)
        if not chunk:
            return
        yield chunk


def _tables(args):
    if getattr(args, "tables", None):
        return load_tables(args.tables)
    return default_tables()


def cmd_encode(args, io):
    encoder = Encoder(_tables(args))
    utf8 = codecs.getincrementaldecoder("utf-8")()
    src, close_in = _open_in(args.input, io.stdin)
    dst, close_out = _open_out(args.output, io.stdout)
    seen = 0
    try:
        for chunk in _chunks(src):
            try:
                text = utf8.decode(chunk)
            except UnicodeDecodeError as exc:
                raise _Fail("invalid UTF-8 at byte offset %d" % (seen + exc.start)) from None
            seen += len(chunk)
            dst.write(encoder.encode(text))
        try:
            utf8.decode(b"", final=True)
        except UnicodeDecodeError:
            raise _Fail("truncated UTF-8 at end of input") from None
        dst.write(encoder.flush())
    finally:
        if close_in:
            src.close()
        if close_out:
            dst.close()
    return 0


def cmd_decode(args, io):
    tables = _tables(args)
    policy = STRICT if args.strict or args.strict_canonical else REPLACE
    decoder = Decoder(tables, policy)
    src, close_in = _open_in(args.input, io.stdin)
    dst, close_out = _open_out(args.output, io.stdout)
    try:
        if args.strict_canonical:
            data = src.read()
            dst.write(decoder.decode(data, final=True).encode("utf-8"))
            offset = check_canonical(data, tables)
            if offset is not None:
                raise _Fail("non-canonical unit at offset %d" % offset)
            return 0
        for chunk in _chunks(src):
            dst.write(decoder.decode(chunk).encode("utf-8"))
        dst.write(decoder.flush().encode("utf-8"))
    finally:
        if close_in:
            src.close()
        if close_out:
            dst.close()
    return 0


def format_record(rec) -> str:
    raw = " ".join("%02X" % b for b in rec.raw)
    if rec.error:
        return "%08d  %-11s  malformed: %s" % (rec.offset, raw, rec.error)
    unit = rec.unit
    if unit.zone in (Zone.BIT7, Zone.BIT8):
        detail = "alphabet %d  indexes %s" % (
            unit.alphabet_id,
            " ".join("%02X" % i for i in unit.letters),
        )
    elif unit.zone == Zone.BYTE2:
        detail = "index %04X" % unit.payload
    else:
        detail = "U+%04X" % unit.payload
    return '%08d  %-11s  %-7s  %s  "%s"' % (rec.offset, raw, unit.zone, detail, rec.text)


def cmd_inspect(args, io):
    tables = _tables(args)
    src, close_in = _open_in(args.input, io.stdin)
    try:
        data = src.read()
    finally:
        if close_in:
            src.close()
    bad = 0
    for rec in inspect_units(data, tables):
        bad += rec.error is not None
        io.stdout.write((format_record(rec) + "\n").encode("utf-8"))
    return 1 if bad else 0


def cmd_bench(args, io):
    tables = _tables(args)
    rows = []
    kind = WIKIDUMP if args.wikidump else PLAIN
    for path in args.files:
        spec = CorpusSpec(path, max_bytes=args.max_bytes, kind=kind)
        rows.append(measure(extract(spec), tables, label=spec.label))
    if args.synthetic is not None:
        profiles = args.synthetic or list(PROFILES)
        rows += synthetic_rows(profiles, n_chars=args.chars, seed=args.seed, tables=tables)
    if not rows:
        raise _Fail("nothing to measure: give files or --synthetic")
    io.stdout.write(report(rows, args.format, utf16=args.utf16).encode("utf-8"))
    return 0


def cmd_tables(args, io):
    if args.action == "validate":
        tables = load_tables(args.path)
        io.stdout.write(("ok: %r\n" % tables).encode("utf-8"))
        return 0
    dst, close_out = _open_out(args.output, io.stdout)
    try:
        dst.write(serialize_tables(_tables(args)))
    finally:
        if close_out:
            dst.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="duncode", description="Duncode text encoding tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--tables", metavar="PATH", help="table file (default: bundled tables)")

    p = sub.add_parser("encode", help="UTF-8 text to Duncode")
    p.add_argument("input", nargs="?")
    p.add_argument("-o", "--output")
    common(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="Duncode to UTF-8 text")
    p.add_argument("input", nargs="?")
    p.add_argument("-o", "--output")
    p.add_argument("--strict", action="store_true", help="fail on the first malformed unit")
    p.add_argument(
        "--strict-canonical",
        action="store_true",
        help="also fail if the input is not exactly what the encoder produces",
    )
    common(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("inspect", help="list the units of a Duncode stream")
    p.add_argument("input", nargs="?")
    common(p)
    p.set_defaults(func=cmd_inspect)

    p = sub.add_parser("bench", help="compare sizes with UTF-8")
    p.add_argument("files", nargs="*")
    p.add_argument("--wikidump", action="store_true", help="files are MediaWiki XML dumps")
    p.add_argument("--max-bytes", type=int, default=DEFAULT_MAX_BYTES)
    p.add_argument("--format", choices=("csv", "markdown"), default="csv")
    p.add_argument("--utf16", action="store_true", help="add UTF-16 columns")
    p.add_argument(
        "--synthetic", nargs="*", metavar="PROFILE", choices=list(PROFILES),
        help="add synthetic corpora (all profiles if none named)",
    )
    p.add_argument("--chars", type=int, default=100_000, help="synthetic corpus size")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("tables", help="dump or validate a table file")
    tsub = p.add_subparsers(dest="action", required=True)
    d = tsub.add_parser("dump")
    d.add_argument("-o", "--output")
    common(d)
    v = tsub.add_parser("validate")
    v.add_argument("path")
    p.set_defaults(func=cmd_tables)
    return parser


class _IO:
    def __init__(self, stdin, stdout, stderr):
        self.stdin = stdin
        self.stdout = stdout
        self.stderr = stderr


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    """Run the CLI on binary streams and return the exit status."""
    io = _IO(
        stdin if stdin is not None else sys.stdin.buffer,
        stdout if stdout is not None else sys.stdout.buffer,
        stderr if stderr is not None else sys.stderr,
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, io)
    except (_Fail, DuncodeError) as exc:
        io.stdout.flush()
        io.stderr.write("duncode %s: error: %s\n" % (args.command, exc))
        return 1


def main():
    sys.exit(run())
