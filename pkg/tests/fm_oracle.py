"""Fourier-Motzkin elimination oracle for hull membership.

Test-suite-only reference implementation, fully independent of the simplex
kernel: the membership question is posed as a system of linear inequalities
over the combination coefficients, and variables are eliminated one at a
time by combining opposite-sign rows. Exponential in the worst case, which
is fine at test sizes; rows are normalized and deduplicated and variables
are eliminated smallest-fill-first to keep the growth down.
"""

from fractions import Fraction
from typing import Iterable, Optional, Set, Tuple

from csl import Dist

Row = Tuple[Tuple[Fraction, ...], Fraction]  # coeffs . alpha <= const

ZERO = Fraction(0)
ONE = Fraction(1)


def _normalized(coeffs: Tuple[Fraction, ...], const: Fraction) -> Row:
    for c in coeffs:
        if c != 0:
            scale = abs(c)
            return tuple(x / scale for x in coeffs), const / scale
    return coeffs, const


def _add(rows: Set[Row], coeffs: Tuple[Fraction, ...], const: Fraction) -> Optional[bool]:
    """Insert a row, pruning trivial ones; returns False on 0 <= negative."""
    if all(c == 0 for c in coeffs):
        return False if const < 0 else None
    rows.add(_normalized(coeffs, const))
    return None


def _eliminate(rows: Set[Row], var: int) -> Optional[Set[Row]]:
    """Project the variable away; None signals detected infeasibility."""
    pos, neg, rest = [], [], set()
    for coeffs, const in rows:
        c = coeffs[var]
        if c > 0:
            pos.append((coeffs, const))
        elif c < 0:
            neg.append((coeffs, const))
        else:
            rest.add((coeffs, const))
    for pc, pconst in pos:
        for nc, nconst in neg:
            a = -nc[var]  # positive
            b = pc[var]  # positive
            coeffs = tuple(a * x + b * y for x, y in zip(pc, nc))
            const = a * pconst + b * nconst
            if _add(rest, coeffs, const) is False:
                return None
    return rest


def member_of_hull_fm(d: Dist, gens: Iterable[Dist]) -> bool:
    """Is d a convex combination of gens? Decided by variable elimination."""
    gen_list = list(gens)
    k = len(gen_list)
    atoms = set(d.atoms)
    for g in gen_list:
        atoms.update(g.atoms)

    rows: Set[Row] = set()
    for x in sorted(atoms):
        coeffs = tuple(g.weight(x) for g in gen_list)
        target = d.weight(x)
        if _add(rows, coeffs, target) is False:
            return False
        if _add(rows, tuple(-c for c in coeffs), -target) is False:
            return False
    ones = tuple(ONE for _ in range(k))
    rows.add((ones, ONE))
    rows.add(_normalized(tuple(-ONE for _ in range(k)), -ONE))
    for j in range(k):
        coeffs = tuple(-ONE if i == j else ZERO for i in range(k))
        rows.add((coeffs, ZERO))

    remaining = set(range(k))
    while remaining:
        # smallest pos*neg product first, the classic fill heuristic
        def fill(var: int) -> int:
            p = sum(1 for coeffs, _ in rows if coeffs[var] > 0)
            n = sum(1 for coeffs, _ in rows if coeffs[var] < 0)
            return p * n

        var = min(remaining, key=fill)
        remaining.discard(var)
        projected = _eliminate(rows, var)
        if projected is None:
            return False
        rows = projected
    return all(const >= 0 for _, const in rows)
