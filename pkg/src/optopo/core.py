"""Finite topological spaces over bitmask-encoded subsets.

Points of an n-element ground set are indexed 0..n-1 and a subset is the
int whose bit i is set iff point i belongs to it.  All set algebra is
plain machine-word bit twiddling; labels exist only for presentation and
I/O.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MAX_DECIDER_POINTS = 10
MAX_ENUM_POINTS = 5

_DEFAULT_LABELS = "abcdefghij"


class AxiomViolation(ValueError):
    """The given family of subsets is not a topology."""


class BoundsExceeded(ValueError):
    """A requested ground-set size is above the supported cap."""


@dataclass(frozen=True)
class GroundSet:
    """An ordered, labelled finite set of points."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate point labels: {self.labels!r}")
        if len(self.labels) > MAX_DECIDER_POINTS:
            raise BoundsExceeded(
                f"ground sets are capped at {MAX_DECIDER_POINTS} points"
            )

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        """Ground set with the default labels a, b, c, ..."""
        if not 0 <= n <= MAX_DECIDER_POINTS:
            raise BoundsExceeded(f"size must be in 0..{MAX_DECIDER_POINTS}")
        return cls(tuple(_DEFAULT_LABELS[:n]))

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def mask_of(self, names: Iterable[str]) -> int:
        """Bitmask of the subset given by point labels."""
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def names_of(self, mask: int) -> list[str]:
        """Point labels of a bitmask, in ground-set order."""
        self.check_mask(mask)
        return [lab for i, lab in enumerate(self.labels) if mask >> i & 1]

    def check_mask(self, mask: int) -> None:
        if mask < 0 or mask & ~self.full_mask:
            raise ValueError(f"mask {mask:#x} is not a subset of {self.labels!r}")


@dataclass(frozen=True)
class Topology:
    """A validated family of open subsets of a ground set.

    Construct through :func:`make_topology`; the constructor itself does
    not re-check the axioms.
    """

    ground: GroundSet
    opens: frozenset[int]

    @property
    def full_mask(self) -> int:
        return self.ground.full_mask

    def is_open(self, s: int) -> bool:
        return s in self.opens

    def is_closed(self, s: int) -> bool:
        return (self.full_mask & ~s) in self.opens

    def opens_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens))

    def to_dict(self) -> dict:
        return {
            "points": list(self.ground.labels),
            "opens": [self.ground.names_of(s) for s in self.opens_sorted()],
        }


def make_topology(ground: GroundSet, opens: Iterable[int]) -> Topology:
    """Validate a family of subset masks as a topology on `ground`.

    Raises AxiomViolation naming the missing set or an escape witness if
    the family is not closed under union / intersection.
    """
    family = frozenset(opens)
    full = ground.full_mask
    for s in family:
        ground.check_mask(s)
    if 0 not in family:
        raise AxiomViolation("the empty set is not open")
    if full not in family:
        raise AxiomViolation("the whole space is not open")
    members = sorted(family)
    for a, b in itertools.combinations(members, 2):
        if a | b not in family:
            raise AxiomViolation(f"union escape: {a:#x} | {b:#x} = {a | b:#x} not open")
        if a & b not in family:
            raise AxiomViolation(
                f"intersection escape: {a:#x} & {b:#x} = {a & b:#x} not open"
            )
    return Topology(ground, family)


def topology_from_dict(data: dict) -> Topology:
    """Build a topology from the JSON space format.

    Expected shape: ``{"points": ["a", ...], "opens": [["a"], ...]}``.
    """
    ground = GroundSet(tuple(data["points"]))
    return make_topology(ground, [ground.mask_of(names) for names in data["opens"]])


@lru_cache(maxsize=65536)
def interior_table(t: Topology) -> tuple[int, ...]:
    """Interior of every subset mask, indexed by mask."""
    opens = t.opens_sorted()
    out = []
    for s in range(t.full_mask + 1):
        acc = 0
        for o in opens:
            if o & ~s == 0:
                acc |= o
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=65536)
def closure_table(t: Topology) -> tuple[int, ...]:
    """Closure of every subset mask, via Int/Cl duality."""
    full = t.full_mask
    ints = interior_table(t)
    return tuple(full & ~ints[full & ~s] for s in range(full + 1))


def interior(t: Topology, s: int) -> int:
    """Union of all open sets contained in `s`."""
    t.ground.check_mask(s)
    return interior_table(t)[s]


def closure(t: Topology, s: int) -> int:
    """Intersection of all closed sets containing `s`."""
    t.ground.check_mask(s)
    return closure_table(t)[s]


def clopen_sets(t: Topology) -> list[int]:
    """All subsets that are both open and closed, ascending by mask."""
    return [s for s in t.opens_sorted() if t.is_closed(s)]


def enumerate_topologies(n: int) -> Iterator[Topology]:
    """Yield every topology on n labelled points exactly once.

    Finite topologies are in bijection with preorders: map each point x
    to its minimal open neighbourhood U_x; reflexivity is x in U_x and
    transitivity is y in U_x implies U_y subset U_x.  We scan the
    2^(n*(n-1)) candidate neighbourhood assignments in ascending encoded
    order, which both avoids the 2^(2^n) family scan and fixes a
    deterministic output order.
    """
    if not 0 <= n <= MAX_ENUM_POINTS:
        raise BoundsExceeded(f"enumeration is capped at {MAX_ENUM_POINTS} points")
    ground = GroundSet.of_size(n)
    if n == 0:
        yield Topology(ground, frozenset({0}))
        return
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    nbits = len(offdiag)
    full = (1 << n) - 1
    for code in range(1 << nbits):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(offdiag):
            if code >> k & 1:
                rows[i] |= 1 << j
        if not _transitive(rows, n):
            continue
        opens = [0]
        for s in range(1, full + 1):
            req = 0
            for x in range(n):
                if s >> x & 1:
                    req |= rows[x]
            if req & ~s == 0:
                opens.append(s)
        yield Topology(ground, frozenset(opens))


def _transitive(rows: list[int], n: int) -> bool:
    for i in range(n):
        r = rows[i]
        for j in range(n):
            if r >> j & 1 and rows[j] & ~r:
                return False
    return True


def count_topologies(n: int) -> int:
    return sum(1 for _ in enumerate_topologies(n))
