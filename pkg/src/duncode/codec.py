"""``codecs`` registration, so that ``"αβγ".encode("duncode")`` works.

Only the ``strict`` and ``replace`` error handlers are supported.
"""

import codecs

from .decoder import Decoder, decode_bytes
from .encoder import Encoder, encode_string
from .tables import default_tables

NAME = "duncode"


def _policy(errors):
    if errors not in ("strict", "replace"):
        raise ValueError("duncode supports errors='strict' or 'replace', not %r" % errors)
    return errors


def encode(text, errors="strict"):
    _policy(errors)
    return encode_string(text, default_tables()), len(text)


def decode(data, errors="strict"):
    data = bytes(data)
    return decode_bytes(data, default_tables(), _policy(errors)), len(data)


class IncrementalEncoder(codecs.IncrementalEncoder):
    def __init__(self, errors="strict"):
        super().__init__(_policy(errors))
        self._encoder = Encoder(default_tables())

    def encode(self, text, final=False):
        return self._encoder.encode(text, final)

    def reset(self):
        self._encoder = Encoder(default_tables())


class IncrementalDecoder(codecs.IncrementalDecoder):
    def __init__(self, errors="strict"):
        super().__init__(_policy(errors))
        self._decoder = Decoder(default_tables(), errors)

    def decode(self, data, final=False):
        return self._decoder.decode(data, final)

    def reset(self):
        self._decoder.reset()


class StreamWriter(codecs.StreamWriter):
    def encode(self, text, errors="strict"):
        return encode(text, errors)


class StreamReader(codecs.StreamReader):
    def decode(self, data, errors="strict"):
        return decode(data, errors)


def search(name):
    if name.replace("-", "_").lower() != NAME:
        return None
    return codecs.CodecInfo(
        name=NAME,
        encode=encode,
        decode=decode,
        incrementalencoder=IncrementalEncoder,
        incrementaldecoder=IncrementalDecoder,
        streamwriter=StreamWriter,
        streamreader=StreamReader,
    )


codecs.register(search)
