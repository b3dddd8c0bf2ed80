"""Exact rational linear algebra: rank, PSD testing, Gram matrices, and
pivoted LDL^T rank factorizations.

Everything runs over Fraction; no floating point.  Rank certificates and
PSD decisions are therefore exact, which is what makes the extremality
checks downstream sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import ParseError, PreconditionError

Rat = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_to_str(x: Fraction) -> str:
    """ "a/b", or "a" when integral."""
    x = _frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rat_from_str(s) -> Fraction:
    if not isinstance(s, str):
        raise ParseError(f"rational must be a string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}") from exc


@dataclass(frozen=True)
class SymMat:
    """Exactly symmetric p x p rational matrix."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(_frac(x) for x in row) for row in self.entries)
        p = len(rows)
        if p < 1 or any(len(row) != p for row in rows):
            raise ValueError("matrix must be square and nonempty")
        for i in range(p):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"not symmetric at ({i + 1},{j + 1})")
        object.__setattr__(self, "entries", rows)

    @property
    def p(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> Fraction:
        """Entry in 1-based vertex labels, matching graph indexing."""
        return self.entries[i - 1][j - 1]

    def trace(self) -> Fraction:
        return sum(self.entries[i][i] for i in range(self.p))

    def scaled(self, c) -> "SymMat":
        c = _frac(c)
        return SymMat(tuple(tuple(c * x for x in row) for row in self.entries))

    def __add__(self, other: "SymMat") -> "SymMat":
        if self.p != other.p:
            raise ValueError("dimension mismatch")
        return SymMat(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.entries, other.entries)
        ))


def symmat(rows) -> SymMat:
    """Build a SymMat from any nested sequence of ints/strings/Fractions."""
    return SymMat(tuple(tuple(_frac(x) for x in row) for row in rows))


def _integer_rows(rows) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; rank is unchanged."""
    out = []
    for row in rows:
        fr = [_frac(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        out.append([int(x * den) for x in fr])
    return out


def _reduce_row(row: list[int]) -> None:
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return
    if g > 1:
        for c in range(len(row)):
            row[c] //= g


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank over the rationals via integer row echelon.

    Rows are cleared to integers, then eliminated with cross-multiplied
    row operations; a gcd reduction after each update keeps entries small.
    """
    m = [r for r in _integer_rows(rows) if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rnk = 0
    col = 0
    while rnk < len(m) and col < ncols:
        piv = next((r for r in range(rnk, len(m)) if m[r][col]), None)
        if piv is None:
            col += 1
            continue
        m[rnk], m[piv] = m[piv], m[rnk]
        prow = m[rnk]
        pv = prow[col]
        for r in range(rnk + 1, len(m)):
            f = m[r][col]
            if f:
                row = m[r]
                for c in range(col, ncols):
                    row[c] = row[c] * pv - prow[c] * f
                _reduce_row(row)
        rnk += 1
        col += 1
    return rnk


def gram(vectors: Sequence[Sequence]) -> SymMat:
    """Gram matrix of a list of rational vectors (all the same dimension)."""
    vs = [tuple(_frac(x) for x in v) for v in vectors]
    if not vs:
        raise ValueError("need at least one vector")
    k = len(vs[0])
    if any(len(v) != k for v in vs):
        raise ValueError("vectors must share one dimension")
    return SymMat(tuple(
        tuple(sum(a * b for a, b in zip(vs[i], vs[j])) for j in range(len(vs)))
        for i in range(len(vs))
    ))


def is_psd(m: SymMat) -> bool:
    """Exact PSD test by symmetric elimination.

    A negative pivot refutes; a zero pivot whose remaining row is nonzero
    refutes (a PSD matrix with zero diagonal entry has a zero row there);
    otherwise the zero pivot is skipped.  No square roots are taken.
    """
    p = m.p
    a = [list(row) for row in m.entries]
    for i in range(p):
        d = a[i][i]
        if d < 0:
            return False
        if d == 0:
            if any(a[i][j] != 0 for j in range(i + 1, p)):
                return False
            continue
        for r in range(i + 1, p):
            f = a[r][i] / d
            if f:
                arow, irow = a[r], a[i]
                for c in range(i + 1, p):
                    arow[c] -= f * irow[c]
    return True


@dataclass(frozen=True)
class RankFactorization:
    """X = B diag(pivots) B^T with B of full column rank.

    ``rows`` is B stored row-major (p rows, k = rank(X) columns); the
    pivots stay separate and positive so that nothing ever needs a square
    root.
    """

    rows: tuple[tuple[Fraction, ...], ...]
    pivots: tuple[Fraction, ...]

    @property
    def k(self) -> int:
        return len(self.pivots)

    def reconstruct(self) -> SymMat:
        p = len(self.rows)
        ent = [[Fraction(0)] * p for _ in range(p)]
        for i in range(p):
            for j in range(i + 1):
                v = sum(d * self.rows[i][t] * self.rows[j][t]
                        for t, d in enumerate(self.pivots))
                ent[i][j] = ent[j][i] = v
        return SymMat(tuple(tuple(row) for row in ent))


def rank_factorize(m: SymMat) -> RankFactorization:
    """Pivoted LDL^T over Q, skipping zero pivots.

    Raises PreconditionError when the elimination refutes positive
    semidefiniteness.
    """
    p = m.p
    a = [list(row) for row in m.entries]
    cols: list[list[Fraction]] = []
    pivots: list[Fraction] = []
    for i in range(p):
        d = a[i][i]
        if d < 0:
            raise PreconditionError("matrix is not positive semidefinite")
        if d == 0:
            if any(a[i][j] != 0 for j in range(i + 1, p)):
                raise PreconditionError("matrix is not positive semidefinite")
            continue
        col = [Fraction(0)] * p
        col[i] = Fraction(1)
        for r in range(i + 1, p):
            col[r] = a[r][i] / d
        cols.append(col)
        pivots.append(d)
        for r in range(i + 1, p):
            f = a[r][i] / d
            if f:
                arow, irow = a[r], a[i]
                for c in range(i + 1, p):
                    arow[c] -= f * irow[c]
    rows = tuple(tuple(col[t] for col in cols) for t in range(p))
    return RankFactorization(rows, tuple(pivots))


def symmat_to_json(m: SymMat) -> dict:
    return {"p": m.p,
            "entries": [[rat_to_str(x) for x in row] for row in m.entries]}


def symmat_from_json(obj) -> SymMat:
    if not isinstance(obj, dict) or set(obj) != {"p", "entries"}:
        raise ParseError('matrix JSON must be {"p": ..., "entries": [[...]]}')
    p, entries = obj["p"], obj["entries"]
    if (not isinstance(p, int) or not isinstance(entries, list)
            or len(entries) != p
            or any(not isinstance(r, list) or len(r) != p for r in entries)):
        raise ParseError("matrix JSON has wrong shape")
    try:
        return SymMat(tuple(tuple(rat_from_str(x) for x in row) for row in entries))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
