"""Matrix text formats: ``bin``, ``hex`` and McKay's digraph6.

digraph6 layout: a ``&`` header, the vertex count in the graph6 size
encoding, then the ``n*n`` adjacency bits row-major, packed big-endian into
6-bit groups each offset by 63.
"""

from __future__ import annotations

from .core import BottMatrix, _coerce_raw, topological_order
from .errors import MalformedD6, MalformedInput, NotAcyclic

_HEADER = ">>digraph6<<"


def _encode_size(n):
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"n={n} too large for digraph6")


def _decode_size(data):
    if not data:
        raise MalformedD6("missing size")
    first = ord(data[0]) - 63
    if not 0 <= first <= 63:
        raise MalformedD6(f"bad size byte {data[0]!r}")
    if first < 63:
        return first, 1
    if len(data) >= 2 and data[1] == "~":
        raise MalformedD6("digraphs with more than 258047 vertices are not supported")
    if len(data) < 4:
        raise MalformedD6("truncated size field")
    n = 0
    for ch in data[1:4]:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise MalformedD6(f"bad size byte {ch!r}")
        n = (n << 6) | v
    return n, 4


def decode_digraph6(line: str):
    """Raw ``(n, rows)`` of a digraph6 record, without the acyclicity check."""
    line = line.strip()
    if line.startswith(_HEADER):
        line = line[len(_HEADER):]
    if not line.startswith("&"):
        raise MalformedD6("digraph6 records start with '&'")
    n, used = _decode_size(line[1:])
    body = line[1 + used:]
    nbits = n * n
    if len(body) != -(-nbits // 6):
        raise MalformedD6(f"expected {-(-nbits // 6)} data bytes for n={n}, got {len(body)}")
    bits = 0
    for ch in body:
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise MalformedD6(f"bad data byte {ch!r}")
        bits = (bits << 6) | v
    pad = len(body) * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise MalformedD6("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if (bits >> (nbits - 1 - (i * n + j))) & 1:
                rows[i] |= 1 << j
    return n, tuple(rows)


def parse_digraph6(line: str) -> BottMatrix:
    n, rows = decode_digraph6(line)
    if n < 1:
        raise MalformedD6("digraph has no vertices")
    if topological_order(n, rows) is None:
        raise NotAcyclic("digraph6 record describes a digraph with a cycle or loop")
    return BottMatrix._trusted(n, rows)


def encode_digraph6(m) -> str:
    n, rows = _coerce_raw(m)
    nbits = n * n
    bits = 0
    for i in range(n):
        for j in range(n):
            bits = (bits << 1) | ((rows[i] >> j) & 1)
    nbytes = -(-nbits // 6)
    bits <<= nbytes * 6 - nbits
    body = "".join(chr(((bits >> (6 * (nbytes - 1 - k))) & 63) + 63) for k in range(nbytes))
    return "&" + _encode_size(n) + body


def read_digraph6_file(path):
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield parse_digraph6(line)


def parse_matrix(text: str, fmt: str | None = None) -> BottMatrix:
    """Parse ``text`` as ``bin``, ``hex`` or ``d6``; guess when ``fmt`` is None."""
    text = text.strip()
    if fmt is None:
        if text.startswith("&") or text.startswith(_HEADER):
            fmt = "d6"
        elif ":" in text:
            fmt = "hex"
        else:
            fmt = "bin"
    if fmt == "bin":
        return BottMatrix.from_bin(text)
    if fmt == "hex":
        return BottMatrix.from_hex(text)
    if fmt == "d6":
        return parse_digraph6(text)
    raise MalformedInput(f"unknown format {fmt!r}")


def format_matrix(m: BottMatrix, fmt: str = "hex") -> str:
    if fmt == "bin":
        return m.to_bin("/")
    if fmt == "d6":
        return encode_digraph6(m)
    if m.is_strictly_upper():
        return m.to_hex()
    return m.to_bin("/")
