"""Generate the table of lens spaces and lambda classes, and diff it against a golden copy.

Table files are UTF-8, tab separated, one ``p q lambda`` triple per line.
Continuation lines leave ``p`` (and ``q``) empty to inherit them from the line
above; lines starting with ``#`` are comments.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .errors import NonCanonical, NonUnit, ParseError
from .families import FamilyId, enumerate_family
from .lens import LambdaClass, LensSpace

Triple = tuple[int, int, int]

DEFAULT_EXCLUDED = frozenset({FamilyId.TORUS, FamilyId.CABLE})


@dataclass(frozen=True)
class TableRow:
    p: int
    q: int
    lambdas: tuple[int, ...]

    def __post_init__(self):
        LensSpace(self.p, self.q)
        for lam in self.lambdas:
            LambdaClass(self.p, lam)
        if list(self.lambdas) != sorted(set(self.lambdas)):
            raise ValueError(f"lambdas for L({self.p},{self.q}) must be strictly increasing")

    def triples(self) -> list[Triple]:
        return [(self.p, self.q, lam) for lam in self.lambdas]


def rows_from_triples(triples: Iterable[Triple]) -> list[TableRow]:
    grouped: dict[tuple[int, int], set[int]] = {}
    for p, q, lam in triples:
        grouped.setdefault((p, q), set()).add(lam)
    return [TableRow(p, q, tuple(sorted(lams))) for (p, q), lams in sorted(grouped.items())]


def table_triples(rows: Iterable[TableRow]) -> list[Triple]:
    return [t for row in rows for t in row.triples()]


def _family_triples(args: tuple[FamilyId, int]) -> list[Triple]:
    f, p_max = args
    return [(m.result.space.p, m.result.space.q, m.result.lam.value)
            for m in enumerate_family(f, p_max)]


def generate_table(p_max: int, excluded: Iterable[FamilyId | str] = DEFAULT_EXCLUDED,
                   workers: int = 1) -> list[TableRow]:
    """Rows ``(p, q, lambdas)`` for every ``p <= p_max`` reached by a non-excluded family.

    With ``workers > 1`` families are enumerated in separate processes; the
    merge is a set union followed by a sort, so the result does not depend on
    the worker count.
    """
    if p_max < 2:
        raise ValueError(f"p_max must be >= 2, got {p_max}")
    skip = {FamilyId(f) for f in excluded}
    jobs = [(f, p_max) for f in FamilyId if f not in skip]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_family_triples, jobs))
    else:
        parts = [_family_triples(job) for job in jobs]
    return rows_from_triples(t for part in parts for t in part)


def serialize_table(rows: Iterable[TableRow], header: str | None = None) -> str:
    """Golden-format text with continuation lines for repeated ``p`` and ``q``."""
    lines = [f"# {line}" for line in header.splitlines()] if header else []
    last_p = None
    for row in rows:
        for i, lam in enumerate(row.lambdas):
            if i:
                lines.append(f"\t\t{lam}")
            elif row.p == last_p:
                lines.append(f"\t{row.q}\t{lam}")
            else:
                lines.append(f"{row.p}\t{row.q}\t{lam}")
        last_p = row.p
    return "".join(line + "\n" for line in lines)


def _int_field(text: str, name: str, lineno: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{name} is not an integer: {text!r}", lineno) from None


def _iter_table_lines(text: str | bytes, columns: int):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        cells = [c.strip() for c in raw.split("\t")]
        if len(cells) < columns:
            raise ParseError(f"expected {columns} tab-separated fields, got {len(cells)}", lineno)
        yield lineno, cells


def parse_golden(text: str | bytes) -> list[TableRow]:
    """Parse golden-format text into rows.

    Entries are checked, not repaired: a ``q`` or ``lambda`` that is not the
    minimum of its orbit (or not a unit at all) raises :class:`NonCanonical`.
    A ``(p, q)`` pair that reappears later is merged; an exact duplicate
    triple is an error.

    >>> parse_golden("37\\t10\\t8\\n\\t\\t10\\n")
    [TableRow(p=37, q=10, lambdas=(8, 10))]
    """
    seen: dict[Triple, int] = {}
    p = q = None
    for lineno, cells in _iter_table_lines(text, 3):
        if len(cells) > 3 and any(cells[3:]):
            raise ParseError("too many fields", lineno)
        p_cell, q_cell, lam_cell = cells[:3]
        if p_cell:
            p = _int_field(p_cell, "p", lineno)
            if not q_cell:
                raise ParseError("q may only be inherited together with p", lineno)
        elif p is None:
            raise ParseError("continuation line with no row above", lineno)
        if q_cell:
            q = _int_field(q_cell, "q", lineno)
        if not lam_cell:
            raise ParseError("missing lambda", lineno)
        lam = _int_field(lam_cell, "lambda", lineno)
        triple = (p, q, lam)
        try:
            LensSpace(p, q)
            LambdaClass(p, lam)
        except (NonCanonical, NonUnit) as exc:
            # a non-unit is no orbit's minimum either
            raise NonCanonical(f"line {lineno}: {triple}: {exc}") from None
        except ValueError as exc:
            raise ParseError(f"{triple}: {exc}", lineno) from None
        if triple in seen:
            raise ParseError(f"duplicate triple {triple} (first on line {seen[triple]})", lineno)
        seen[triple] = lineno
    return rows_from_triples(seen)


@dataclass(frozen=True)
class AllowlistEntry:
    triple: Triple
    justification: str


def parse_allowlist(text: str | bytes) -> list[AllowlistEntry]:
    """Lines ``p q lambda justification``; the justification must be non-empty."""
    entries = []
    for lineno, cells in _iter_table_lines(text, 4):
        triple = tuple(_int_field(c, name, lineno) for c, name in zip(cells, ("p", "q", "lambda")))
        why = "\t".join(cells[3:]).strip()
        if not why:
            raise ParseError("allowlist entries need a justification", lineno)
        entries.append(AllowlistEntry(triple, why))
    return entries


@dataclass(frozen=True)
class DiffReport:
    missing: tuple[Triple, ...]
    extra: tuple[Triple, ...]
    allowed: tuple[Triple, ...] = field(default=())

    @property
    def clean(self) -> bool:
        """True when nothing in the golden table is missing from the generated one."""
        return not self.missing

    @property
    def identical(self) -> bool:
        return not self.missing and not self.extra

    def summary(self) -> str:
        line = f"# missing={len(self.missing)} extra={len(self.extra)}"
        if self.allowed:
            line += f" allowlisted={len(self.allowed)}"
        return line

    def format(self) -> str:
        out = ["missing:"]
        out += ["\t".join(map(str, t)) for t in self.missing]
        out.append("extra:")
        out += ["\t".join(map(str, t)) for t in self.extra]
        out.append(self.summary())
        return "\n".join(out) + "\n"


def diff_tables(generated: Iterable[TableRow], golden: Iterable[TableRow],
                allowlist: Iterable[AllowlistEntry] = ()) -> DiffReport:
    """Triple-level set difference; allowlisted triples are dropped from ``missing``."""
    gen, gold = set(table_triples(generated)), set(table_triples(golden))
    allowed = {e.triple for e in allowlist}
    missing = gold - gen
    return DiffReport(tuple(sorted(missing - allowed)), tuple(sorted(gen - gold)),
                      tuple(sorted(missing & allowed)))


def _data_file(name: str) -> Path:
    return Path(str(resources.files("lensknots") / "data" / name))


def golden_path() -> Path:
    """The bundled transcription of the printed ``p <= 500`` table."""
    return _data_file("golden.tsv")


def allowlist_path() -> Path:
    return _data_file("allowlist.tsv")
