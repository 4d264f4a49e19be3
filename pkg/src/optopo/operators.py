"""Operators associated with a topology and T*-open/closed machinery."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import Topology, closure_table, interior_table


class NotAssociated(ValueError):
    """The operator fails U subset T(U) on some open set."""

    def __init__(self, witness: int):
        self.witness = witness
        super().__init__(f"operator is not associated: open {witness:#x} escapes")


class OperatorKind(enum.Enum):
    IDENTITY = "identity"
    INT_CL = "int_cl"
    CL_INT = "cl_int"
    CL = "cl"
    INT_CL_INT = "int_cl_int"
    CL_INT_CL = "cl_int_cl"
    DSL = "dsl"


# Int/Cl composition of each built-in kind, applied left to right.
_COMPOSITION = {
    OperatorKind.IDENTITY: "",
    OperatorKind.INT_CL: "ci",  # Int(Cl(S)): Cl first, then Int
    OperatorKind.CL_INT: "ic",
    OperatorKind.CL: "c",
    OperatorKind.INT_CL_INT: "ici",
    OperatorKind.CL_INT_CL: "cic",
}


@dataclass(frozen=True)
class Operator:
    """A named or DSL-defined map from subsets to subsets."""

    kind: OperatorKind
    definition: Optional[object] = None  # dsl.Definition for kind DSL

    def __post_init__(self):
        if (self.kind is OperatorKind.DSL) != (self.definition is not None):
            raise ValueError("a definition is required iff kind is DSL")

    @property
    def name(self) -> str:
        if self.kind is OperatorKind.DSL:
            return f"dsl:{self.definition.name}"
        return self.kind.value


@dataclass(frozen=True)
class OperatorSpace:
    """A topology together with a validated associated operator."""

    topology: Topology
    operator: Operator


@lru_cache(maxsize=65536)
def operator_table(t: Topology, op: Operator) -> tuple[int, ...]:
    """T(s) for every subset mask s, indexed by mask."""
    if op.kind is OperatorKind.DSL:
        from . import dsl  # deferred: dsl imports this module

        return dsl.eval_operator_table(op.definition, t)
    steps = _COMPOSITION[op.kind]
    it, cl = interior_table(t), closure_table(t)
    out = []
    for s in range(t.full_mask + 1):
        v = s
        for step in steps:
            v = cl[v] if step == "c" else it[v]
        out.append(v)
    return tuple(out)


def bind_operator(t: Topology, op: Operator) -> OperatorSpace:
    """Validate the associated-with-tau law and pair operator with topology.

    Every built-in kind satisfies the law on any topology; the check can
    only fail for DSL-defined operators.
    """
    table = operator_table(t, op)
    for u in t.opens_sorted():
        if u & ~table[u]:
            raise NotAssociated(u)
    return OperatorSpace(t, op)


def apply_operator(os: OperatorSpace, s: int) -> int:
    os.topology.ground.check_mask(s)
    return operator_table(os.topology, os.operator)[s]


def is_tstar_open(os: OperatorSpace, s: int) -> bool:
    """S is T*-open iff S is contained in T(S)."""
    return s & ~apply_operator(os, s) == 0


def is_tstar_closed(os: OperatorSpace, s: int) -> bool:
    os.topology.ground.check_mask(s)
    return is_tstar_open(os, os.topology.full_mask & ~s)


@lru_cache(maxsize=65536)
def tstar_closed_sets(os: OperatorSpace) -> tuple[int, ...]:
    """All T*-closed subsets, ascending by mask."""
    full = os.topology.full_mask
    table = operator_table(os.topology, os.operator)
    return tuple(
        s for s in range(full + 1) if (full & ~s) & ~table[full & ~s] == 0
    )


@lru_cache(maxsize=65536)
def tstar_closure_table(os: OperatorSpace) -> tuple[int, ...]:
    """T*Cl(s) for every subset mask: meet of T*-closed supersets."""
    full = os.topology.full_mask
    closed = tstar_closed_sets(os)
    out = []
    for s in range(full + 1):
        acc = full  # X is always T*-closed, so the family is nonempty
        for c in closed:
            if c & s == s:
                acc &= c
        out.append(acc)
    return tuple(out)


def tstar_closure(os: OperatorSpace, s: int) -> int:
    os.topology.ground.check_mask(s)
    return tstar_closure_table(os)[s]


def operator_from_name(name: str, definitions: Optional[dict] = None) -> Operator:
    """Resolve an operator name as used in files and on the CLI.

    Built-in names are the OperatorKind values; "dsl:<name>" looks the
    definition up in `definitions` (a name -> dsl.Definition mapping).
    """
    if name.startswith("dsl:"):
        defname = name[4:]
        if not definitions or defname not in definitions:
            raise ValueError(f"unknown DSL operator {defname!r}")
        return Operator(OperatorKind.DSL, definitions[defname])
    try:
        kind = OperatorKind(name)
    except ValueError:
        raise ValueError(f"unknown operator name {name!r}") from None
    if kind is OperatorKind.DSL:
        raise ValueError("DSL operators must be named as dsl:<name>")
    return Operator(kind)
