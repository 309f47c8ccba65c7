"""Duncode: a self-synchronizing, compact Unicode text encoding.

Quick use::

    >>> import duncode
    >>> duncode.encode("αβγ").hex()
    'e2858443'
    >>> duncode.decode(bytes.fromhex("e2858443"))
    'αβγ'

Importing the package also registers a ``"duncode"`` text codec.
"""

from . import codec  # noqa: F401  registers the "duncode" codec
from .decoder import Decoder, decode_bytes, decode_unit, resync, segment
from .encoder import Encoder, encode_string
from .errors import (
    ContractError,
    DecodeError,
    DuncodeError,
    InvalidInputError,
    MalformedUnitError,
    TableError,
)
from .tables import (
    Classification,
    DuncodeBlock,
    TableSet,
    Zone,
    build_default_tables,
    default_tables,
    load_tables,
    parse_tables,
    serialize_tables,
)
from .unit import DuncodeUnit, pack_unit, unpack_unit

__version__ = "0.1.0"


def encode(text: str, tables: TableSet = None) -> bytes:
    return encode_string(text, tables)


def decode(data, tables: TableSet = None, policy: str = "replace") -> str:
    return decode_bytes(data, tables, policy)
