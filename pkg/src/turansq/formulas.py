"""Closed-form Turán values and bounds, in exact integer/rational arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError


class TuranTarget(str, Enum):
    P3sq = "P3sq"
    P4sq = "P4sq"
    P5sq = "P5sq"
    P6sq = "P6sq"
    FlatTetra = "FlatTetra"


SQUARE_PATH_TARGETS = {3: TuranTarget.P3sq, 4: TuranTarget.P4sq, 5: TuranTarget.P5sq,
                       6: TuranTarget.P6sq}


def f_T(n: int) -> int:
    if n % 4 == 2:
        return n * n // 4 + n // 2 - 1
    return n * n // 4 + n // 2


def f_P6(n: int) -> int:
    if n % 6 in (1, 2, 3):
        return n * n // 4 + (n - 1) // 2
    return n * n // 4 + (n + 1) // 2


def valid_range(target: TuranTarget, n: int) -> bool:
    target = TuranTarget(target)
    if n < 1:
        return False
    if target is TuranTarget.P4sq:
        return n >= 4
    if target is TuranTarget.P5sq:
        return n >= 5
    if target in (TuranTarget.FlatTetra, TuranTarget.P6sq):
        return n != 5
    return True


def closed_form_ex(target: TuranTarget | str, n: int) -> int:
    """Closed-form ex(n, H) for a named target, within its validity range."""
    target = TuranTarget(target)
    if not valid_range(target, n):
        why = {
            TuranTarget.P3sq: "n >= 1",
            TuranTarget.P4sq: "n >= 4",
            TuranTarget.P5sq: "n >= 5",
            TuranTarget.FlatTetra: "n >= 1 and n != 5",
            TuranTarget.P6sq: "n >= 1 and n != 5",
        }[target]
        raise DomainError(f"{target.value} formula holds only for {why}; got n={n}")
    if target in (TuranTarget.P3sq, TuranTarget.P4sq):
        return n * n // 4
    if target is TuranTarget.P5sq:
        return (n * n + n) // 4
    if target is TuranTarget.FlatTetra:
        return f_T(n)
    return f_P6(n)


def erdos_gallai_bound(n: int, l: int) -> Fraction:
    """Upper bound n(l-2)/2 on the edges of a P_l-free graph."""
    if l < 2:
        raise DomainError(f"path order l must be >= 2, got {l}")
    return Fraction(n * (l - 2), 2)


def faudree_schelp_ex(n: int, l: int) -> int:
    """Exact ex(n, P_l) with the residue normalised to 0 <= r < l - 1."""
    if n < 1 or l < 3:
        raise DomainError(f"need n >= 1 and l >= 3, got n={n}, l={l}")
    r = n % (l - 1)
    twice = (l - 2) * n - r * (l - 1 - r)
    return twice // 2


@dataclass(frozen=True)
class BoundValue:
    value: Fraction
    argmax_i: int


def conjecture_bound(k: int, n: int) -> BoundValue:
    """max over 0 <= i <= n of i*(floor(2k/3) - 2)/2 + i*(n - i); smallest argmax."""
    if k < 3 or n < 1:
        raise DomainError(f"need k >= 3 and n >= 1, got k={k}, n={n}")
    coef = Fraction(2 * k // 3 - 2, 2)
    best = None
    arg = 0
    for i in range(n + 1):
        val = coef * i + i * (n - i)
        if best is None or val > best:
            best, arg = val, i
    return BoundValue(best, arg)
