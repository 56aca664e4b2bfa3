"""Disk group presentations and Fox calculus.

A ribbon code determines a presentation of the fundamental group of the
complement of the pushed-in disk: one generator per vertex, and for each
edge [i1, m1, ..., mk, i2] the conjugation relation x_i1 w x_i2^-1 w^-1,
where the k-th letter of w is x_|mk| with an exponent read off from the
marking sign and the side of the edge holding the marked vertex.

Fox derivatives of the relations, evaluated at every generator -> t, give
the Alexander matrix; any maximal minor is the disk polynomial, and the
knot polynomial is disk(t) * disk(1/t).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .codes import HEAD_SIDE, RibbonCode, side_of
from .laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    canonicalize,
    div_exact,
    mul_reciprocal,
)

# A word in a free group: letters are nonzero ints, sign = exponent.
Word = tuple[int, ...]


def word_inverse(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Word) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def exponent_sum(w: Word) -> int:
    return sum(1 if x > 0 else -1 for x in w)


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relations: tuple[Word, ...]

    def __str__(self) -> str:
        gens = ",".join(f"x{i}" for i in range(1, self.generator_count + 1))
        rels = ", ".join(format_word(r) for r in self.relations)
        return f"<{gens} | {rels}>"


def format_word(w: Word) -> str:
    if not w:
        return "1"
    parts = []
    for x in w:
        parts.append(f"x{x}" if x > 0 else f"x{-x}^-1")
    return "".join(parts)


def presentation_of(code: RibbonCode) -> GroupPresentation:
    """The disk group presentation of a ribbon code.

    For a marking m on an edge directed tail -> head, the letter is
    x_|m|^e with e = sign(m) when v_|m| sits on the head side and
    e = -sign(m) when it sits on the tail side; endpoints count as their
    own side.
    """
    relations = []
    for e in code.edges:
        w = []
        for m in e.marks:
            eps = 1 if side_of(code, e, m) == HEAD_SIDE else -1
            if m < 0:
                eps = -eps
            w.append(eps * abs(m))
        w = tuple(w)
        relations.append((e.tail,) + w + (-e.head,) + word_inverse(w))
    return GroupPresentation(code.vertex_count, tuple(relations))


def fox_derivative_eval(w: Word, generator: int) -> LaurentPoly:
    """The Fox derivative d(w)/d(x_generator) with every x_i sent to t.

    Product rule d(uv) = d(u) + phi(u) d(v) with phi(u) = t^(exp sum of u);
    d(x_g) = 1 and d(x_g^-1) = -t^-1.
    """
    terms: dict[int, int] = {}
    s = 0
    for x in w:
        if x == generator:
            terms[s] = terms.get(s, 0) + 1
            s += 1
        elif x == -generator:
            terms[s - 1] = terms.get(s - 1, 0) - 1
            s -= 1
        else:
            s += 1 if x > 0 else -1
    if not terms:
        return ZERO
    lo, hi = min(terms), max(terms)
    return LaurentPoly(lo, [terms.get(k, 0) for k in range(lo, hi + 1)])


@dataclass(frozen=True)
class AlexMatrix:
    """(V-1) x V matrix of evaluated Fox derivatives; every row sums to 0."""

    generator_count: int
    rows: tuple[tuple[LaurentPoly, ...], ...]


def alexander_matrix(p: GroupPresentation) -> AlexMatrix:
    rows = []
    for r in p.relations:
        if exponent_sum(r) != 0:
            raise ValueError(f"relation {format_word(r)} has nonzero exponent sum")
        row = tuple(fox_derivative_eval(r, g) for g in range(1, p.generator_count + 1))
        total = ZERO
        for entry in row:
            total = total + entry
        if not total.is_zero():
            raise AssertionError("Fox fundamental identity violated: row sum nonzero")
        rows.append(row)
    return AlexMatrix(p.generator_count, tuple(rows))


def det_bareiss(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square polynomial matrix.

    Fraction-free Bareiss elimination; every division is exact in Z[t].
    Rows are first shifted by units so all entries are ordinary polynomials,
    which changes the result only by a unit (harmless: callers canonicalize).
    """
    n = len(rows)
    if n == 0:
        return ONE
    m = []
    for row in rows:
        shift = min((e.min_deg for e in row if not e.is_zero()), default=0)
        m.append([e.shift(-shift) if not e.is_zero() else e for e in row])
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = div_exact(num, prev) if not num.is_zero() else ZERO
            m[i][k] = ZERO
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def disk_polynomial(matrix: AlexMatrix) -> LaurentPoly:
    """Canonical generator of the first elementary ideal of the matrix.

    Because the columns of an Alexander matrix sum to zero, the V maximal
    minors (one per deleted column) agree up to units; this is verified at
    runtime rather than assumed, and the common canonical value is returned.
    """
    v = matrix.generator_count
    if len(matrix.rows) != v - 1:
        raise ValueError("expected a (V-1) x V matrix")
    if v == 1:
        return ONE
    minors = []
    for drop in range(v):
        rows = [[row[j] for j in range(v) if j != drop] for row in matrix.rows]
        minors.append(det_bareiss(rows))
    if any(d.is_zero() for d in minors):
        raise AssertionError("zero maximal minor in an Alexander matrix")
    canon = {canonicalize(d) for d in minors}
    if len(canon) != 1:
        raise AssertionError("maximal minors disagree beyond units")
    return canon.pop()


class KnotPolynomials(NamedTuple):
    disk: LaurentPoly
    knot: LaurentPoly


def knot_polynomial(code: RibbonCode) -> KnotPolynomials:
    """Disk and knot Alexander polynomials of a ribbon code (canonical).

    The knot polynomial is disk(t) * disk(1/t), canonically; it is always
    palindromic and evaluates to +-1 at t = 1.
    """
    disk = disk_polynomial(alexander_matrix(presentation_of(code)))
    return KnotPolynomials(disk, mul_reciprocal(disk))
