"""3-CNF formulas and the DIMACS reader/writer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class CnfFormatError(ValueError):
    pass


class Lit(NamedTuple):
    var: int  # 0-based variable index
    positive: bool

    def value(self, assignment: Sequence[bool]) -> bool:
        return assignment[self.var] == self.positive

    def dimacs(self) -> int:
        return self.var + 1 if self.positive else -(self.var + 1)


@dataclass(frozen=True)
class CnfFormula:
    """Variables ``0..num_vars-1`` and clauses of exactly three literals."""

    num_vars: int
    clauses: tuple[tuple[Lit, Lit, Lit], ...]

    def __post_init__(self):
        clauses = tuple(tuple(Lit(int(v), bool(p)) for v, p in c) for c in self.clauses)
        for j, clause in enumerate(clauses):
            if len(clause) != 3:
                raise ValueError(f"clause {j + 1} has {len(clause)} literals, expected 3")
            for lit in clause:
                if not 0 <= lit.var < self.num_vars:
                    raise ValueError(f"clause {j + 1} uses variable {lit.var + 1} outside 1..{self.num_vars}")
        object.__setattr__(self, "clauses", clauses)

    @classmethod
    def from_dimacs_clauses(cls, num_vars: int, clauses: Iterable[Iterable[int]]) -> "CnfFormula":
        """Build from signed 1-based literals, e.g. ``[[1, -2, 3]]``."""
        return cls(num_vars, tuple(tuple(Lit(abs(x) - 1, x > 0) for x in c) for c in clauses))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def has_distinct_variables(self) -> bool:
        return all(len({lit.var for lit in c}) == 3 for c in self.clauses)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        if len(assignment) != self.num_vars:
            raise ValueError(f"assignment has {len(assignment)} values for {self.num_vars} variables")
        return all(any(lit.value(assignment) for lit in c) for c in self.clauses)


def parse_dimacs(text: str, require_distinct: bool = False) -> CnfFormula:
    """Read ``p cnf k l`` and ``l`` zero-terminated clauses of width 3.

    ``c`` lines are comments and a line starting with ``%`` ends the input.
    With ``require_distinct`` a clause repeating a variable is rejected.
    """
    header = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            toks = line.split()
            if header is not None or len(toks) != 4 or toks[1] != "cnf":
                raise CnfFormatError(f"line {lineno}: bad header {line!r}")
            try:
                header = (int(toks[2]), int(toks[3]))
            except ValueError:
                raise CnfFormatError(f"line {lineno}: bad header {line!r}") from None
            if min(header) < 0:
                raise CnfFormatError(f"line {lineno}: negative count in header")
            continue
        if header is None:
            raise CnfFormatError(f"line {lineno}: clause before 'p cnf' header")
        for tok in line.split():
            try:
                x = int(tok)
            except ValueError:
                raise CnfFormatError(f"line {lineno}: not an integer: {tok!r}") from None
            if x == 0:
                if len(current) != 3:
                    raise CnfFormatError(f"line {lineno}: clause width {len(current)}, expected 3")
                clauses.append(current)
                current = []
                continue
            if abs(x) > header[0]:
                raise CnfFormatError(f"line {lineno}: variable {abs(x)} out of range 1..{header[0]}")
            current.append(x)
    if header is None:
        raise CnfFormatError("missing 'p cnf' header")
    if current:
        raise CnfFormatError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise CnfFormatError(f"header announces {header[1]} clauses, found {len(clauses)}")
    formula = CnfFormula.from_dimacs_clauses(header[0], clauses)
    if require_distinct and not formula.has_distinct_variables():
        raise CnfFormatError("a clause repeats a variable")
    return formula


def render_dimacs(F: CnfFormula) -> str:
    lines = [f"p cnf {F.num_vars} {F.num_clauses}"]
    lines.extend(" ".join(str(lit.dimacs()) for lit in c) + " 0" for c in F.clauses)
    return "\n".join(lines) + "\n"
