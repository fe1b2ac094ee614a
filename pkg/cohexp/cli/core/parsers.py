from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal, Optional

from cohexp.bracket import BracketAlgebra, sl2
from cohexp.cohom import IntegerMatrix
from cohexp.exceptions import ContractError
from cohexp.fpla import PrimeField
from cohexp.groups import TableGroup


class ParseError(ContractError):
    """Raised for malformed input files and group specs."""

    def __init__(self, message: str, line: Optional[int] = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    """(line number, tokens) for every non-blank line, with # comments removed."""
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            out.append((number, tokens))
    return out


def _int(token: str, line: int, source: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line, source) from None


def parse_structure_constants(text: str, source: str = "<input>") -> BracketAlgebra:
    """
    Read a bracket algebra from the structure-constants format:

        p 3
        dim 3
        names h x+ x-
        bracket 0 1 -> 0 2 0
        bracket 0 2 -> 0 0 -2
        bracket 1 2 -> 1 0 0

    Only pairs i < j are given; the rest follow from the alternating law and
    missing pairs bracket to zero. Entries are reduced mod p.
    """
    p: Optional[int] = None
    dim: Optional[int] = None
    names: Optional[tuple[str, ...]] = None
    brackets: dict[tuple[int, int], tuple[int, ...]] = {}
    for line, tokens in _content_lines(text):
        key, rest = tokens[0], tokens[1:]
        if key == "p":
            if len(rest) != 1:
                raise ParseError("expected 'p <prime>'", line, source)
            p = _int(rest[0], line, source)
        elif key == "dim":
            if len(rest) != 1:
                raise ParseError("expected 'dim <n>'", line, source)
            dim = _int(rest[0], line, source)
        elif key == "names":
            names = tuple(rest)
        elif key == "bracket":
            if dim is None:
                raise ParseError("'dim' must come before the first bracket", line, source)
            if len(rest) != dim + 3 or rest[2] != "->":
                raise ParseError(f"expected 'bracket i j -> c0 .. c{dim - 1}'", line, source)
            i, j = _int(rest[0], line, source), _int(rest[1], line, source)
            if not (0 <= i < j < dim):
                raise ParseError(f"bracket indices must satisfy 0 <= i < j < {dim}", line, source)
            if (i, j) in brackets:
                raise ParseError(f"bracket {i} {j} given twice", line, source)
            brackets[(i, j)] = tuple(_int(t, line, source) for t in rest[3:])
        else:
            raise ParseError(f"unknown directive {key!r}", line, source)
    if p is None or dim is None:
        raise ParseError("both 'p' and 'dim' are required", source=source)
    if dim < 1:
        raise ParseError(f"dim must be positive, got {dim}", source=source)
    if names is None:
        names = tuple(f"e{i}" for i in range(dim))
    if len(names) != dim:
        raise ParseError(f"{len(names)} names given for dim {dim}", source=source)
    return BracketAlgebra.from_brackets(PrimeField(p), names, brackets)


def load_algebra(path: Path) -> BracketAlgebra:
    return parse_structure_constants(path.read_text(), source=str(path))


def parse_table(text: str, source: str = "<input>") -> TableGroup:
    """
    A group from ``order n`` followed by n rows of n labels in 0 .. n-1. The
    table is validated as a group.
    """
    lines = _content_lines(text)
    if not lines or lines[0][1][0] != "order" or len(lines[0][1]) != 2:
        raise ParseError("first line must be 'order <n>'", lines[0][0] if lines else None, source)
    n = _int(lines[0][1][1], lines[0][0], source)
    rows = lines[1:]
    if n < 1 or len(rows) != n:
        raise ParseError(f"expected {n} table rows, got {len(rows)}", source=source)
    table = []
    for line, tokens in rows:
        if len(tokens) != n:
            raise ParseError(f"expected {n} entries, got {len(tokens)}", line, source)
        table.append([_int(t, line, source) for t in tokens])
    try:
        return TableGroup(table, name=Path(source).stem if source != "<input>" else "table")
    except ContractError as e:
        raise ParseError(str(e), source=source) from e


def load_table(path: Path) -> TableGroup:
    return parse_table(path.read_text(), source=str(path))


@dataclass(frozen=True)
class GroupSpec:
    """Parsed form of ``cyclic:m``, ``abelian:m1,m2,...`` or ``table:FILE``."""

    kind: Literal["cyclic", "abelian", "table"]
    factors: tuple[int, ...] = ()
    path: Optional[Path] = None
    table: Optional[TableGroup] = field(default=None, compare=False)

    def target(self) -> TableGroup | tuple[int, ...]:
        if self.kind == "table":
            assert self.table is not None
            return self.table
        return self.factors


def parse_group_spec(spec: str) -> GroupSpec:
    kind, sep, value = spec.partition(":")
    if not sep or not value:
        raise ParseError(f"group spec {spec!r} must look like kind:value", source="--group")
    if kind == "table":
        path = Path(value)
        if not path.is_file():
            raise ParseError(f"no such table file: {value}", source="--group")
        return GroupSpec(kind="table", path=path, table=load_table(path))
    if kind not in ("cyclic", "abelian"):
        raise ParseError(
            f"unknown group kind {kind!r}; use cyclic, abelian or table", source="--group"
        )
    factors = tuple(_int(t.strip(), 1, "--group") for t in value.split(","))
    if kind == "cyclic" and len(factors) != 1:
        raise ParseError("cyclic takes a single order", source="--group")
    if any(m < 2 for m in factors):
        raise ParseError(f"factor orders must be >= 2, got {list(factors)}", source="--group")
    return GroupSpec(kind=kind, factors=factors)  # type: ignore[arg-type]


def parse_matrix(text: str) -> IntegerMatrix:
    """Rows separated by ';', entries by spaces or commas: ``"2 4; 6 8"``."""
    rows = [r.replace(",", " ").split() for r in text.split(";")]
    rows = [r for r in rows if r]
    if not rows:
        raise ParseError("empty matrix", source="--matrix")
    data = [[_int(t, i + 1, "--matrix") for t in r] for i, r in enumerate(rows)]
    if any(len(r) != len(data[0]) for r in data):
        raise ParseError("rows have different lengths", source="--matrix")
    return IntegerMatrix.from_dense(data)


def parse_algebra_spec(spec: str, p: Optional[int] = None) -> BracketAlgebra:
    """
    ``sl2``, ``zero:n`` or the path of a structure-constants file. Builtins
    need ``p``; a file carries its own p, which must agree with ``p`` if given.
    """
    if spec == "sl2" or spec.startswith("zero:"):
        if p is None:
            raise ParseError(f"--p is required for the builtin algebra {spec!r}", source="--algebra")
        prime_field = PrimeField(p)
        if spec == "sl2":
            return sl2(prime_field)
        n = _int(spec.partition(":")[2], 1, "--algebra")
        if n < 1:
            raise ParseError(f"zero algebra dimension must be positive, got {n}", source="--algebra")
        return BracketAlgebra.zero(prime_field, n)
    path = Path(spec)
    if not path.is_file():
        raise ParseError(f"{spec!r} is neither a builtin algebra nor a file", source="--algebra")
    algebra = load_algebra(path)
    if p is not None and algebra.field.p != p:
        raise ParseError(f"file declares p={algebra.field.p} but --p {p} was given", source=spec)
    return algebra
