"""Generalized open-set classes and space-level predicates.

Each class decider evaluates its defining Int/Cl formula literally.
Class closures and interiors are computed by scanning all 2^n subsets
(intersecting class-closed supersets / uniting class-open subsets), so
the textbook closure formulas remain available as independent checks.
"""

from __future__ import annotations

import enum
import itertools
from functools import lru_cache

from .core import Topology, closure_table, interior_table


class SetClassId(enum.Enum):
    OPEN = "open"
    CLOSED = "closed"
    REGULAR_OPEN = "regular_open"
    REGULAR_CLOSED = "regular_closed"
    PREOPEN = "preopen"
    PRECLOSED = "preclosed"
    SEMIOPEN = "semiopen"
    SEMICLOSED = "semiclosed"
    ALPHA_OPEN = "alpha_open"
    ALPHA_CLOSED = "alpha_closed"
    BETA_OPEN = "beta_open"
    BETA_CLOSED = "beta_closed"


_OPEN_OF_CLOSED = {
    SetClassId.CLOSED: SetClassId.OPEN,
    SetClassId.REGULAR_CLOSED: SetClassId.REGULAR_OPEN,
    SetClassId.PRECLOSED: SetClassId.PREOPEN,
    SetClassId.SEMICLOSED: SetClassId.SEMIOPEN,
    SetClassId.ALPHA_CLOSED: SetClassId.ALPHA_OPEN,
    SetClassId.BETA_CLOSED: SetClassId.BETA_OPEN,
}

#: Closure "kind" of each class id, for class_closure / class_interior.
_CLOSURE_KIND = {
    SetClassId.OPEN: SetClassId.OPEN,
    SetClassId.CLOSED: SetClassId.OPEN,
    SetClassId.PREOPEN: SetClassId.PREOPEN,
    SetClassId.PRECLOSED: SetClassId.PREOPEN,
    SetClassId.SEMIOPEN: SetClassId.SEMIOPEN,
    SetClassId.SEMICLOSED: SetClassId.SEMIOPEN,
    SetClassId.ALPHA_OPEN: SetClassId.ALPHA_OPEN,
    SetClassId.ALPHA_CLOSED: SetClassId.ALPHA_OPEN,
    SetClassId.BETA_OPEN: SetClassId.BETA_OPEN,
    SetClassId.BETA_CLOSED: SetClassId.BETA_OPEN,
}


def is_in_class(t: Topology, s: int, c: SetClassId) -> bool:
    """Decide membership of subset `s` in set class `c`."""
    t.ground.check_mask(s)
    full = t.full_mask
    if c is SetClassId.REGULAR_CLOSED:
        # Tested directly against its own defining formula S = Cl(Int(S)).
        cl, it = closure_table(t), interior_table(t)
        return s == cl[it[s]]
    if c in _OPEN_OF_CLOSED:
        return is_in_class(t, full & ~s, _OPEN_OF_CLOSED[c])
    cl, it = closure_table(t), interior_table(t)
    if c is SetClassId.OPEN:
        return t.is_open(s)
    if c is SetClassId.REGULAR_OPEN:
        return s == it[cl[s]]
    if c is SetClassId.PREOPEN:
        return s & ~it[cl[s]] == 0
    if c is SetClassId.SEMIOPEN:
        return s & ~cl[it[s]] == 0
    if c is SetClassId.ALPHA_OPEN:
        return s & ~it[cl[it[s]]] == 0
    if c is SetClassId.BETA_OPEN:
        return s & ~cl[it[cl[s]]] == 0
    raise ValueError(f"unknown set class {c!r}")


def _closure_kind(c: SetClassId) -> SetClassId:
    kind = _CLOSURE_KIND.get(c)
    if kind is None:
        raise ValueError(f"{c.value} does not designate a closure kind")
    return kind


def class_closure(t: Topology, s: int, c: SetClassId) -> int:
    """Intersection of all c-closed supersets of `s`."""
    kind = _closure_kind(c)
    closed = _OPEN_OF_CLOSED_INV[kind]
    t.ground.check_mask(s)
    acc = t.full_mask
    for u in range(t.full_mask + 1):
        if u & s == s and is_in_class(t, u, closed):
            acc &= u
    return acc


def class_interior(t: Topology, s: int, c: SetClassId) -> int:
    """Union of all c-open subsets of `s`."""
    kind = _closure_kind(c)
    t.ground.check_mask(s)
    acc = 0
    for u in range(t.full_mask + 1):
        if u & ~s == 0 and is_in_class(t, u, kind):
            acc |= u
    return acc


_OPEN_OF_CLOSED_INV = {
    SetClassId.OPEN: SetClassId.CLOSED,
    SetClassId.PREOPEN: SetClassId.PRECLOSED,
    SetClassId.SEMIOPEN: SetClassId.SEMICLOSED,
    SetClassId.ALPHA_OPEN: SetClassId.ALPHA_CLOSED,
    SetClassId.BETA_OPEN: SetClassId.BETA_CLOSED,
}


@lru_cache(maxsize=65536)
def members_of_class(t: Topology, c: SetClassId) -> tuple[int, ...]:
    """All subsets of `t` in class `c`, ascending by mask."""
    return tuple(s for s in range(t.full_mask + 1) if is_in_class(t, s, c))


def is_extremally_disconnected(t: Topology) -> bool:
    """Closures of open sets are open."""
    cl = closure_table(t)
    return all(cl[u] in t.opens for u in t.opens)


def is_urysohn(t: Topology) -> bool:
    """Distinct points have open neighbourhoods with disjoint closures."""
    cl = closure_table(t)
    opens = t.opens_sorted()
    for x, y in itertools.combinations(range(t.ground.size), 2):
        bx, by = 1 << x, 1 << y
        if not any(
            u & bx and v & by and cl[u] & cl[v] == 0
            for u in opens
            for v in opens
        ):
            return False
    return True


def is_sigma_space(t: Topology) -> bool:
    """Every open set is a union of regular closed sets."""
    regclosed = members_of_class(t, SetClassId.REGULAR_CLOSED)
    for u in t.opens:
        acc = 0
        for r in regclosed:
            if r & ~u == 0:
                acc |= r
        if acc != u:
            return False
    return True


def is_r_compact(t: Topology) -> bool:
    """Every regular-open cover has a finite subcover.

    On a finite ground set every cover is itself finite, so every finite
    topology is R-compact; the predicate is kept for fidelity to the
    proposition statements that mention it.
    """
    # Any subfamily of the finitely many regular open sets is finite and
    # hence is its own finite subcover.
    return True
