"""Plain-text persistence for Bernoulli tables.

Format: a header line ``BERNCACHE 1 <convention>`` followed by one
``n numerator denominator`` line per index, contiguous from 0.  Writes are
atomic (temp file in the target directory, then replace) so a crashed or
concurrent writer never leaves a torn file behind.
"""
from __future__ import annotations

import os
import tempfile
from fractions import Fraction
from math import gcd

from .sequences import MINUS_HALF, PLUS_HALF, BernoulliTable

__all__ = ["CorruptCache", "ConventionMismatch", "save", "load"]

MAGIC = "BERNCACHE"
VERSION = 1

_CONVENTIONS = (MINUS_HALF, PLUS_HALF)


class CorruptCache(ValueError):
    """Cache file failed structural or arithmetic validation."""


class ConventionMismatch(ValueError):
    """Cache file stores the other sign convention for B_1."""


def save(table: BernoulliTable, path: str | os.PathLike) -> None:
    """Write the table atomically; readers see old or new, never partial."""
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    lines = [f"{MAGIC} {VERSION} {table.convention}\n"]
    for n, value in table.items():
        lines.append(f"{n} {value.numerator} {value.denominator}\n")
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".berncache-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.writelines(lines)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _parse_header(line: str, path: str) -> str:
    fields = line.split()
    if len(fields) != 3 or fields[0] != MAGIC:
        raise CorruptCache(f"{path}: not a Bernoulli cache file")
    if fields[1] != str(VERSION):
        raise CorruptCache(f"{path}: unsupported cache version {fields[1]!r}")
    if fields[2] not in _CONVENTIONS:
        raise CorruptCache(f"{path}: unknown convention {fields[2]!r}")
    return fields[2]


def load(path: str | os.PathLike,
         convention: str | None = None) -> BernoulliTable:
    """Read and fully validate a cache file.

    Raises CorruptCache for any structural or arithmetic defect,
    ConventionMismatch when ``convention`` is given and disagrees with the
    header, and OSError when the file cannot be read at all.
    """
    path = os.fspath(path)
    with open(path, "r") as handle:
        raw = handle.read()
    lines = raw.splitlines()
    if not lines:
        raise CorruptCache(f"{path}: empty file")
    file_convention = _parse_header(lines[0], path)
    if convention is not None and convention != file_convention:
        raise ConventionMismatch(
            f"{path}: stores {file_convention}, caller wants {convention}"
        )
    entries: dict[int, Fraction] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split()
        if len(fields) != 3:
            raise CorruptCache(f"{path}:{lineno}: expected 'n num den'")
        try:
            n, num, den = (int(f) for f in fields)
        except ValueError:
            raise CorruptCache(
                f"{path}:{lineno}: non-integer field"
            ) from None
        if n < 0 or n in entries:
            raise CorruptCache(f"{path}:{lineno}: bad or repeated index {n}")
        if den <= 0:
            raise CorruptCache(f"{path}:{lineno}: denominator must be > 0")
        if gcd(num, den) != 1:
            raise CorruptCache(f"{path}:{lineno}: fraction not reduced")
        entries[n] = Fraction(num, den)
    if not entries:
        raise CorruptCache(f"{path}: header but no entries")
    if sorted(entries) != list(range(len(entries))):
        raise CorruptCache(f"{path}: indices not contiguous from 0")
    try:
        table = BernoulliTable(file_convention, entries=entries)
        table.validate()
    except ValueError as exc:
        raise CorruptCache(f"{path}: {exc}") from None
    return table
