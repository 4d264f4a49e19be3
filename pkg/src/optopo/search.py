"""Exhaustive verification and counterexample search over small instances.

The engine iterates, within bounds, every topology pair, every total map
between the ground sets, and every listed operator, in a fixed canonical
order: domain topology (sizes ascending, enumeration order), then
codomain topology, then map (lexicographic), then operator (declared
order).  The first counterexample in that order is canonical, so
verdicts, witnesses, and counts are reproducible across runs and across
degrees of parallelism.

For a counterexample the reported `checked` count is the canonical rank
of the witness plus one (the number of instances up to and including it
in scan order), computed arithmetically; this keeps the statistic
independent of how the scan was scheduled.
"""

from __future__ import annotations

import concurrent.futures
import enum
import multiprocessing
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence, Union

import numpy as np

from . import dsl, setclasses
from ._ctx import b_and, b_not, images, maps_array, op_ctx, space_ctx, surjective_mask
from .core import BoundsExceeded, Topology, enumerate_topologies
from .functions import (
    DECIDERS,
    FunctionClassId,
    FunctionInstance,
    GraphPropertyId,
    graph_decider,
)
from .operators import Operator, OperatorKind, OperatorSpace, bind_operator

MAX_SEARCH_POINTS = 4

ClassSpec = Union[FunctionClassId, dsl.Definition, str]


@dataclass(frozen=True)
class SearchBounds:
    max_points_x: int = 3
    max_points_y: int = 3
    min_points_x: int = 1
    min_points_y: int = 1
    operators: tuple[Operator, ...] = (Operator(OperatorKind.INT_CL),)
    surjective_only: bool = False

    def __post_init__(self):
        if not (1 <= self.min_points_x <= self.max_points_x <= MAX_SEARCH_POINTS):
            raise BoundsExceeded(f"domain bounds must fit 1..{MAX_SEARCH_POINTS}")
        if not (1 <= self.min_points_y <= self.max_points_y <= MAX_SEARCH_POINTS):
            raise BoundsExceeded(f"codomain bounds must fit 1..{MAX_SEARCH_POINTS}")
        if not self.operators:
            raise ValueError("at least one operator is required")


class Outcome(enum.Enum):
    HOLDS_EXHAUSTIVELY = "holds_exhaustively"
    COUNTEREXAMPLE = "counterexample"
    INCONCLUSIVE = "inconclusive"


@dataclass
class Verdict:
    outcome: Outcome
    witness: Optional[dict] = None
    checked: int = 0
    qualifying: Optional[int] = None
    elapsed_ms: float = 0.0

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "outcome": self.outcome.value,
            "witness": self.witness,
            "checked": self.checked,
        }
        if self.qualifying is not None:
            out["qualifying"] = self.qualifying
        if include_timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out


# ---------------------------------------------------------------------------
# Canonical instance space

@lru_cache(maxsize=8)
def _topologies(min_n: int, max_n: int) -> tuple[tuple[int, Topology], ...]:
    out = []
    for n in range(min_n, max_n + 1):
        out.extend((n, t) for t in enumerate_topologies(n))
    return tuple(out)


def _x_list(b: SearchBounds):
    return _topologies(b.min_points_x, b.max_points_x)


def _y_list(b: SearchBounds):
    return _topologies(b.min_points_y, b.max_points_y)


def _y_block(b: SearchBounds, nx: int) -> int:
    """Instances per domain topology of size nx (all Y, maps, operators)."""
    nops = len(b.operators)
    return sum(ny**nx * nops for ny, _ in _y_list(b))


def total_instances(b: SearchBounds) -> int:
    return sum(_y_block(b, nx) for nx, _ in _x_list(b))


def _rank(b: SearchBounds, xi: int, yi: int, map_idx: int, op_idx: int) -> int:
    xs, ys = _x_list(b), _y_list(b)
    nx = xs[xi][0]
    nops = len(b.operators)
    r = sum(_y_block(b, x_n) for x_n, _ in xs[:xi])
    r += sum(ny**nx * nops for ny, _ in ys[:yi])
    r += map_idx * nops + op_idx
    return r


# ---------------------------------------------------------------------------
# Evaluator specs (picklable descriptions of what to evaluate per instance)

def _class_evaluator(spec: ClassSpec):
    if isinstance(spec, FunctionClassId):
        return DECIDERS[spec]
    if isinstance(spec, dsl.Definition):
        return dsl.funclass_batch(spec)
    if isinstance(spec, str):
        try:
            return DECIDERS[FunctionClassId(spec)]
        except ValueError:
            return dsl.funclass_batch(dsl.parse_target(spec))
    raise TypeError(f"cannot evaluate {spec!r} as a function class")


def class_spec_name(spec: ClassSpec) -> str:
    if isinstance(spec, FunctionClassId):
        return spec.value
    if isinstance(spec, dsl.Definition):
        return spec.name
    return spec


#: Named space-level side conditions usable in verify_implication.
SIDE_CONDITIONS = {
    "codomain_extremally_disconnected": lambda xc, yc: setclasses.is_extremally_disconnected(
        yc.topology
    ),
    "codomain_urysohn": lambda xc, yc: setclasses.is_urysohn(yc.topology),
    "codomain_sigma_space": lambda xc, yc: setclasses.is_sigma_space(yc.topology),
}


def _lemma_cl_int_form(xc, yc, maps):
    """Cl(Int(f^{-1}(S))) subset f^{-1}(V) over regular closed S in regular open V."""
    from ._ctx import preimages

    acc = True
    for s, v in yc.pairs_regclosed_regopen:
        a = preimages(maps, s, xc.n)
        bm = preimages(maps, v, xc.n)
        acc = b_and(acc, (xc.cl_t[xc.int_t[a]] & ~bm) == 0)
    return acc


def _images_of_gtsr_regular_closed(xc, yc, maps):
    table = yc.class_t[setclasses.SetClassId.REGULAR_CLOSED]
    acc = True
    for a in xc.gtsr:
        acc = b_and(acc, table[images(maps, a, yc.n)])
    return acc


def _surjective(xc, yc, maps):
    return surjective_mask(xc.n, yc.n)


def _always(xc, yc, maps):
    return True


_WACT = FunctionClassId.WEAKLY_ALMOST_CONTRA_TSTAR_CONT


class PropositionId(enum.Enum):
    LEMMA_3_1 = "LEMMA_3_1"
    REM_3_2a = "REM_3_2a"
    REM_3_2b = "REM_3_2b"
    P3_3 = "P3_3"
    P3_4 = "P3_4"
    COR_3_5 = "COR_3_5"
    P3_6 = "P3_6"
    P3_7 = "P3_7"
    P_COMPACT = "P_COMPACT"
    P_GRAPH = "P_GRAPH"
    P_IRRESOLUTE = "P_IRRESOLUTE"
    P_GTSR = "P_GTSR"


@dataclass(frozen=True)
class _PropSpec:
    hypotheses: tuple = ()  # map-level evaluators (class specs or functions)
    conclusions: tuple = ()
    side: tuple[str, ...] = ()  # names in SIDE_CONDITIONS
    equivalence: bool = False  # check hyp <-> conclusion instead of ->
    operators: Optional[tuple[Operator, ...]] = None  # force operator list


_GRAPH_TSTAR = graph_decider(GraphPropertyId.TSTAR_REGULAR)
_GRAPH_CONTRA = graph_decider(GraphPropertyId.CONTRA_TSTAR_REGULAR)


def _graph_tstar(xc, yc, maps):
    return _GRAPH_TSTAR(xc, yc, maps)


def _graph_contra(xc, yc, maps):
    return _GRAPH_CONTRA(xc, yc, maps)

_PROPOSITIONS = {
    PropositionId.LEMMA_3_1: _PropSpec(
        hypotheses=(_WACT,),
        conclusions=(_lemma_cl_int_form,),
        equivalence=True,
        operators=(Operator(OperatorKind.INT_CL),),
    ),
    PropositionId.REM_3_2a: _PropSpec(
        hypotheses=(FunctionClassId.CONTRA_TSTAR_CONT,),
        conclusions=(FunctionClassId.WEAKLY_CONTRA_TSTAR_CONT,),
    ),
    PropositionId.REM_3_2b: _PropSpec(
        hypotheses=(FunctionClassId.WEAKLY_CONTRA_TSTAR_CONT,),
        conclusions=(_WACT,),
    ),
    PropositionId.P3_3: _PropSpec(
        hypotheses=(FunctionClassId.ALMOST_TSTAR_CONT,),
        conclusions=(_WACT,),
    ),
    PropositionId.P3_4: _PropSpec(
        hypotheses=(_WACT,),
        conclusions=(FunctionClassId.ALMOST_TSTAR_CONT,),
        side=("codomain_extremally_disconnected",),
    ),
    PropositionId.COR_3_5: _PropSpec(
        hypotheses=(_WACT,),
        conclusions=(FunctionClassId.ALMOST_TSTAR_CONT,),
        side=("codomain_extremally_disconnected",),
        equivalence=True,
    ),
    PropositionId.P3_6: _PropSpec(
        hypotheses=(FunctionClassId.ALMOST_CONTRA_TSTAR_CONT,),
        conclusions=(_WACT,),
    ),
    PropositionId.P3_7: _PropSpec(
        hypotheses=(_WACT,),
        conclusions=(FunctionClassId.SLIGHTLY_CONTRA_TSTAR_CONT,),
    ),
    PropositionId.P_COMPACT: _PropSpec(
        hypotheses=(_surjective, _WACT, _always),  # compactness of X is trivial
        conclusions=(_always,),  # R-compactness of Y is trivial
        side=("codomain_sigma_space",),
    ),
    PropositionId.P_GRAPH: _PropSpec(
        hypotheses=(_WACT,),
        conclusions=(_graph_tstar, _graph_contra),
        side=("codomain_urysohn",),
    ),
    PropositionId.P_IRRESOLUTE: _PropSpec(
        hypotheses=(_WACT, _images_of_gtsr_regular_closed),
        conclusions=(FunctionClassId.ATSR_IRRESOLUTE,),
    ),
    PropositionId.P_GTSR: _PropSpec(
        hypotheses=(
            FunctionClassId.ALMOST_GTSR_CONT,
            FunctionClassId.ATSR_IRRESOLUTE,
        ),
        conclusions=(_WACT,),
    ),
}


# ---------------------------------------------------------------------------
# The scan

def _as_evaluator(item):
    if callable(item):
        return item
    return _class_evaluator(item)


def _build_job(job):
    """Turn a picklable job tuple into (hyp_fn, viol_fn, side_fns)."""
    kind = job[0]
    if kind == "implication":
        _, ant, cons, side, equivalence = job
        ant_fns = [_as_evaluator(a) for a in ant]
        cons_fns = [_as_evaluator(c) for c in cons]
        side_fns = [SIDE_CONDITIONS[name] for name in side]

        def hyp(xc, yc, maps):
            acc = True
            for fn in ant_fns:
                acc = b_and(acc, fn(xc, yc, maps))
                if acc is False:
                    break
            return acc

        def viol(xc, yc, maps, h):
            acc = True
            for fn in cons_fns:
                acc = b_and(acc, fn(xc, yc, maps))
            if equivalence:
                return h != acc if isinstance(h, bool) and isinstance(acc, bool) else (
                    np.asarray(h) != np.asarray(acc)
                )
            return b_and(h, b_not(acc))

        return hyp, viol, side_fns
    if kind == "target":
        (_, target) = job
        fn = _as_evaluator(target)

        def hyp(xc, yc, maps):
            return True

        def viol(xc, yc, maps, h):
            return fn(xc, yc, maps)

        return hyp, viol, []
    raise ValueError(job)


def _scan_partition(job, bounds: SearchBounds, x_indices: Sequence[int]):
    """Scan the given domain-topology indices; return (best, qualifying).

    `best` is (rank, xi, yi, map_idx, op_idx) of the earliest violation
    in this partition, or None.  `qualifying` counts hypothesis-passing
    instances over everything this partition actually scanned; it is
    only meaningful when the whole scan completed (no violation found).
    """
    hyp_fn, viol_fn, side_fns = _build_job(job)
    xs, ys = _x_list(bounds), _y_list(bounds)
    qualifying = 0
    surj = bounds.surjective_only
    for xi in x_indices:
        nx, tx = xs[xi]
        xcs = [op_ctx(bind_operator(tx, op)) for op in bounds.operators]
        best = None  # (yi, map_idx, op_idx) for this xi
        for yi, (ny, ty) in enumerate(ys):
            yc = space_ctx(ty)
            maps = maps_array(nx, ny)
            nmaps = len(maps)
            for op_idx, xc in enumerate(xcs):
                ok_sides = all(fn(xc, yc) for fn in side_fns)
                h = hyp_fn(xc, yc, maps) if ok_sides else False
                if surj:
                    h = b_and(h, surjective_mask(nx, ny))
                if h is False:
                    continue
                if h is True:
                    qualifying += nmaps
                else:
                    qualifying += int(np.count_nonzero(h))
                v = viol_fn(xc, yc, maps, h)
                if v is False or (not isinstance(v, (bool, np.bool_)) and not v.any()):
                    continue
                if isinstance(v, (bool, np.bool_)):
                    map_idx = 0
                else:
                    map_idx = int(np.argmax(v))
                cand = (yi, map_idx, op_idx)
                if best is None or cand < best:
                    best = cand
        if best is not None:
            yi, map_idx, op_idx = best
            return (_rank(bounds, xi, yi, map_idx, op_idx), xi, yi, map_idx, op_idx), qualifying
    return None, qualifying


def _witness_instance(bounds: SearchBounds, xi, yi, map_idx, op_idx) -> FunctionInstance:
    nx, tx = _x_list(bounds)[xi]
    ny, ty = _y_list(bounds)[yi]
    mapping = tuple(int(v) for v in maps_array(nx, ny)[map_idx])
    return FunctionInstance(bind_operator(tx, bounds.operators[op_idx]), ty, mapping)


def _run(job, bounds: SearchBounds, jobs: int = 1) -> Verdict:
    t0 = time.monotonic()
    nx_count = len(_x_list(bounds))
    indices = list(range(nx_count))
    if jobs <= 1 or nx_count <= 1:
        results = [_scan_partition(job, bounds, indices)]
    else:
        chunks = [indices[i::jobs] for i in range(jobs)]
        # Contiguity is not required: each partition reports a global rank
        # and the reduction below picks the minimum.
        ctx = multiprocessing.get_context("fork")
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=jobs, mp_context=ctx
        ) as pool:
            results = list(
                pool.map(_scan_partition, *zip(*[(job, bounds, c) for c in chunks]))
            )
    elapsed = (time.monotonic() - t0) * 1000.0
    bests = [r[0] for r in results if r[0] is not None]
    if bests:
        rank, xi, yi, map_idx, op_idx = min(bests)
        inst = _witness_instance(bounds, xi, yi, map_idx, op_idx)
        return Verdict(
            Outcome.COUNTEREXAMPLE,
            witness={"instance": inst.to_dict()},
            checked=rank + 1,
            elapsed_ms=elapsed,
        )
    qualifying = sum(r[1] for r in results)
    return Verdict(
        Outcome.HOLDS_EXHAUSTIVELY,
        checked=total_instances(bounds),
        qualifying=qualifying,
        elapsed_ms=elapsed,
    )


# ---------------------------------------------------------------------------
# Public operations

def verify_implication(
    antecedent: ClassSpec,
    consequent: ClassSpec,
    side_conditions: Sequence[str] = (),
    bounds: SearchBounds = SearchBounds(),
    jobs: int = 1,
) -> Verdict:
    """Check antecedent => consequent on every in-bounds instance.

    Side conditions are names from SIDE_CONDITIONS.  The verdict is a
    counterexample with the canonical earliest witness, or an exhaustive
    pass with the count of hypothesis-satisfying instances.
    """
    for name in side_conditions:
        if name not in SIDE_CONDITIONS:
            raise ValueError(f"unknown side condition {name!r}")
    job = ("implication", (antecedent,), (consequent,), tuple(side_conditions), False)
    return _run(job, bounds, jobs)


def verify_proposition(
    prop: Union[PropositionId, str],
    bounds: SearchBounds = SearchBounds(),
    jobs: int = 1,
) -> Verdict:
    """Check one of the canned propositions under its exact hypotheses."""
    if isinstance(prop, str):
        prop = PropositionId(prop)
    spec = _PROPOSITIONS[prop]
    if spec.operators is not None:
        bounds = SearchBounds(
            bounds.max_points_x,
            bounds.max_points_y,
            bounds.min_points_x,
            bounds.min_points_y,
            spec.operators,
            bounds.surjective_only,
        )
    job = ("implication", spec.hypotheses, spec.conclusions, spec.side, spec.equivalence)
    return _run(job, bounds, jobs)


def find_counterexample(
    target: ClassSpec,
    bounds: SearchBounds = SearchBounds(),
    jobs: int = 1,
) -> Verdict:
    """Search for the canonical earliest instance satisfying `target`.

    A COUNTEREXAMPLE verdict carries the witness; HOLDS_EXHAUSTIVELY
    means the negation of the target holds on every in-bounds instance.
    """
    job = ("target", target)
    return _run(job, bounds, jobs)
