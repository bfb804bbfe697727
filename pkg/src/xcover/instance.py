"""Exact-cover instances: data model, parsing, serialization.

An instance is a universe of named columns plus a family of named rows,
where each row is the set of column indices it covers.  An exact cover is
a subset of rows covering every column exactly once.

Two text formats are supported.

``xc`` (sparse, named)::

    # optional comment
    1 2 3 4 5 6
    A: 1 2 3 4
    B: 1 4

Line 1 lists the column names; every following non-blank line is
``<rowname>: <col> <col> ...`` with columns referenced by name.  Lines
whose first non-blank character is ``#`` are comments.

``matrix`` (dense 0/1)::

    2 3
    1 0 1
    0 1 0

Line 1 is ``<nrows> <ncols>``; names are derived as R1..Rn and C1..Cm.

Names must be non-empty, contain no whitespace or ``:``, and must not
start with ``#`` (so that serialized files parse back unambiguously).
"""

from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed instance text; carries the 1-based offending line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _valid_name(name: str) -> bool:
    if not name or name.startswith("#"):
        return False
    return not any(ch.isspace() or ch == ":" for ch in name)


@dataclass(frozen=True)
class Instance:
    """Immutable exact-cover instance.

    ``rows`` holds ``(name, column_indices)`` pairs with each index tuple
    strictly increasing.  Construct unnormalized data via :meth:`build`.
    """

    columns: tuple[str, ...]
    rows: tuple[tuple[str, tuple[int, ...]], ...]

    def __post_init__(self):
        if not self.columns:
            raise ValueError("instance needs at least one column")
        for name in self.columns:
            if not _valid_name(name):
                raise ValueError(f"bad column name {name!r}")
        if len(set(self.columns)) != len(self.columns):
            raise ValueError("duplicate column name")
        seen = set()
        n = len(self.columns)
        for name, cols in self.rows:
            if not _valid_name(name):
                raise ValueError(f"bad row name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate row name {name!r}")
            seen.add(name)
            if not cols:
                raise ValueError(f"row {name!r} is empty")
            if any(c < 0 or c >= n for c in cols):
                raise ValueError(f"row {name!r} references a column out of range")
            if any(a >= b for a, b in zip(cols, cols[1:])):
                raise ValueError(f"row {name!r} columns not strictly increasing")

    @classmethod
    def build(cls, columns, rows) -> "Instance":
        """Normalize (sort and deduplicate each row's columns) and validate."""
        norm = tuple((name, tuple(sorted(set(cols)))) for name, cols in rows)
        return cls(tuple(columns), norm)

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def row_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.rows)

    def rows_of_column(self, c: int) -> tuple[int, ...]:
        """Indices of the rows covering column ``c``."""
        if c < 0 or c >= len(self.columns):
            raise IndexError(c)
        return tuple(i for i, (_, cols) in enumerate(self.rows) if c in cols)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_xc(text: str) -> Instance:
    lines = _content_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty file") from None
    columns = header.split()
    col_index = {}
    for name in columns:
        if name in col_index:
            raise ParseError(header_no, f"duplicate column name {name!r}")
        col_index[name] = len(col_index)
    rows = []
    row_names = set()
    for lineno, line in lines:
        name, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(lineno, "expected '<rowname>: <col> ...'")
        name = name.strip()
        if name in row_names:
            raise ParseError(lineno, f"duplicate row name {name!r}")
        row_names.add(name)
        refs = rest.split()
        if not refs:
            raise ParseError(lineno, f"row {name!r} is empty")
        cols = []
        for ref in refs:
            if ref not in col_index:
                raise ParseError(lineno, f"unknown column reference {ref!r}")
            cols.append(col_index[ref])
        rows.append((name, cols))
    try:
        return Instance.build(columns, rows)
    except ValueError as exc:
        raise ParseError(header_no, str(exc)) from None


def _parse_matrix(text: str) -> Instance:
    lines = _content_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty file") from None
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(header_no, "expected '<nrows> <ncols>'")
    n_rows, n_cols = int(parts[0]), int(parts[1])
    if n_cols == 0:
        raise ParseError(header_no, "instance needs at least one column")
    rows = []
    for i in range(n_rows):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise ParseError(header_no, f"expected {n_rows} matrix rows") from None
        bits = line.split()
        if len(bits) != n_cols or any(b not in ("0", "1") for b in bits):
            raise ParseError(lineno, f"expected {n_cols} 0/1 entries")
        cols = [c for c, b in enumerate(bits) if b == "1"]
        if not cols:
            raise ParseError(lineno, f"row R{i + 1} is empty")
        rows.append((f"R{i + 1}", cols))
    for lineno, _ in lines:
        raise ParseError(lineno, "trailing content after matrix rows")
    return Instance.build([f"C{c + 1}" for c in range(n_cols)], rows)


def parse_instance(source, fmt: str = "xc") -> Instance:
    """Parse instance text (a string or an open text file) in ``fmt``."""
    text = source.read() if hasattr(source, "read") else source
    if fmt == "xc":
        return _parse_xc(text)
    if fmt == "matrix":
        return _parse_matrix(text)
    raise ValueError(f"unknown format {fmt!r}")


def serialize_instance(inst: Instance, fmt: str = "xc") -> str:
    """Render ``inst`` in ``fmt``.

    ``xc`` round-trips exactly.  ``matrix`` writes only the 0/1 grid, so a
    round trip restores names only when they already are the canonical
    R1../C1.. ones that matrix parsing derives.
    """
    if fmt == "xc":
        out = [" ".join(inst.columns)]
        for name, cols in inst.rows:
            out.append(f"{name}: " + " ".join(inst.columns[c] for c in cols))
        return "\n".join(out) + "\n"
    if fmt == "matrix":
        out = [f"{inst.n_rows} {inst.n_cols}"]
        for _, cols in inst.rows:
            marks = set(cols)
            out.append(" ".join("1" if c in marks else "0" for c in range(inst.n_cols)))
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
