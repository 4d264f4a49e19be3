"""Internal evaluation contexts: precomputed tables per space / operator space.

Deciders are vectorized along one axis: the set of candidate functions
from X to Y, given as an (M, nx) array of codomain indices.  Set values
are bitmasks, either plain ints (map-independent) or int arrays of
length M (map-dependent); boolean values are plain bools or bool arrays.
The helpers at the bottom keep the two representations interchangeable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import setclasses
from .core import Topology, closure_table, interior_table
from .operators import (
    OperatorSpace,
    operator_table,
    tstar_closed_sets,
    tstar_closure_table,
)
from .setclasses import SetClassId


@dataclass(frozen=True, eq=False)
class SpaceCtx:
    """Tables for one topology (no operator attached)."""

    topology: Topology
    n: int
    full: int
    int_t: np.ndarray
    cl_t: np.ndarray
    pcl_t: np.ndarray
    scl_t: np.ndarray
    bcl_t: np.ndarray
    class_t: dict  # SetClassId -> bool ndarray over masks
    opens: tuple[int, ...]
    closeds: tuple[int, ...]
    regopen: tuple[int, ...]
    regclosed: tuple[int, ...]
    clopen: tuple[int, ...]
    pairs_closed_open: tuple[tuple[int, int], ...]
    pairs_regclosed_regopen: tuple[tuple[int, int], ...]

    def members(self, c: SetClassId) -> tuple[int, ...]:
        return setclasses.members_of_class(self.topology, c)


@dataclass(frozen=True, eq=False)
class OpCtx(SpaceCtx):
    """SpaceCtx plus operator-dependent tables (domain side)."""

    space: OperatorSpace = None
    t_t: np.ndarray = None
    tcl_t: np.ndarray = None
    tstar_open_t: np.ndarray = None
    tstar_closed_t: np.ndarray = None
    tstar_closed: tuple[int, ...] = ()
    gtsr_t: np.ndarray = None
    gtsr: tuple[int, ...] = ()


def _meet_table(full: int, closed_family: tuple[int, ...]) -> np.ndarray:
    out = np.empty(full + 1, dtype=np.int64)
    for s in range(full + 1):
        acc = full
        for c in closed_family:
            if c & s == s:
                acc &= c
        out[s] = acc
    return out


def _space_fields(t: Topology) -> dict:
    full = t.full_mask
    int_t = np.array(interior_table(t), dtype=np.int64)
    cl_t = np.array(closure_table(t), dtype=np.int64)
    class_t = {}
    for c in SetClassId:
        mem = setclasses.members_of_class(t, c)
        arr = np.zeros(full + 1, dtype=bool)
        arr[list(mem)] = True
        class_t[c] = arr
    opens = t.opens_sorted()
    closeds = setclasses.members_of_class(t, SetClassId.CLOSED)
    regopen = setclasses.members_of_class(t, SetClassId.REGULAR_OPEN)
    regclosed = setclasses.members_of_class(t, SetClassId.REGULAR_CLOSED)
    clopen = tuple(s for s in opens if t.is_closed(s))
    pcl_t = _meet_table(full, setclasses.members_of_class(t, SetClassId.PRECLOSED))
    scl_t = _meet_table(full, setclasses.members_of_class(t, SetClassId.SEMICLOSED))
    bcl_t = _meet_table(full, setclasses.members_of_class(t, SetClassId.BETA_CLOSED))
    return dict(
        topology=t,
        n=t.ground.size,
        full=full,
        int_t=int_t,
        cl_t=cl_t,
        pcl_t=pcl_t,
        scl_t=scl_t,
        bcl_t=bcl_t,
        class_t=class_t,
        opens=opens,
        closeds=closeds,
        regopen=regopen,
        regclosed=regclosed,
        clopen=clopen,
        pairs_closed_open=tuple(
            (s, v) for s in closeds for v in opens if s & ~v == 0
        ),
        pairs_regclosed_regopen=tuple(
            (s, v) for s in regclosed for v in regopen if s & ~v == 0
        ),
    )


@lru_cache(maxsize=16384)
def space_ctx(t: Topology) -> SpaceCtx:
    return SpaceCtx(**_space_fields(t))


@lru_cache(maxsize=16384)
def op_ctx(os: OperatorSpace) -> OpCtx:
    t = os.topology
    fields = _space_fields(t)
    full = t.full_mask
    t_t = np.array(operator_table(t, os.operator), dtype=np.int64)
    tcl_t = np.array(tstar_closure_table(os), dtype=np.int64)
    masks = np.arange(full + 1, dtype=np.int64)
    tstar_open_t = (masks & ~t_t) == 0
    closed = tstar_closed_sets(os)
    tstar_closed_t = np.zeros(full + 1, dtype=bool)
    tstar_closed_t[list(closed)] = True
    regopen = fields["regopen"]
    gtsr_t = np.zeros(full + 1, dtype=bool)
    for s in range(full + 1):
        gtsr_t[s] = all(
            tcl_t[s] & ~u == 0 for u in regopen if s & ~u == 0
        )
    gtsr = tuple(int(s) for s in range(full + 1) if gtsr_t[s])
    return OpCtx(
        space=os,
        t_t=t_t,
        tcl_t=tcl_t,
        tstar_open_t=tstar_open_t,
        tstar_closed_t=tstar_closed_t,
        tstar_closed=closed,
        gtsr_t=gtsr_t,
        gtsr=gtsr,
        **fields,
    )


@lru_cache(maxsize=256)
def _shifts(nx: int) -> np.ndarray:
    return (1 << np.arange(nx, dtype=np.int64))


@lru_cache(maxsize=256)
def maps_array(nx: int, ny: int) -> np.ndarray:
    """All functions X -> Y as an (ny^nx, nx) array, lexicographic order."""
    prod = list(itertools.product(range(ny), repeat=nx))
    return np.array(prod, dtype=np.int64).reshape(len(prod), nx)


@lru_cache(maxsize=256)
def surjective_mask(nx: int, ny: int) -> np.ndarray:
    maps = maps_array(nx, ny)
    covered = np.zeros(len(maps), dtype=np.int64)
    for x in range(nx):
        covered |= np.int64(1) << maps[:, x]
    return covered == (1 << ny) - 1


def preimages(maps: np.ndarray, v, nx: int) -> np.ndarray:
    """f^{-1}(v) per map; v is a scalar mask or a per-map mask array."""
    if isinstance(v, np.ndarray):
        bits = (v[:, None] >> maps) & 1
    else:
        bits = (v >> maps) & 1
    return bits @ _shifts(nx)


def images(maps: np.ndarray, a, ny: int) -> np.ndarray:
    """f(a) per map; a is a scalar mask or a per-map mask array."""
    img = np.zeros(len(maps), dtype=np.int64)
    nx = maps.shape[1]
    for x in range(nx):
        sel = (a >> x) & 1
        img |= sel * (np.int64(1) << maps[:, x])
    return img


def b_not(p):
    if isinstance(p, (bool, np.bool_)):
        return not p
    return ~p


def b_and(p, q):
    if p is True:
        return q
    if q is True:
        return p
    return p & q


def b_or(p, q):
    if p is False:
        return q
    if q is False:
        return p
    return p | q


def b_implies(p, q):
    return b_or(b_not(p), q)


def b_all(p) -> bool:
    return bool(np.all(p))


def b_any(p) -> bool:
    return bool(np.any(p))
