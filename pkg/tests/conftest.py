import itertools

import pytest

from optopo.core import GroundSet, Topology, enumerate_topologies


def brute_force_topologies(n: int) -> set[frozenset[int]]:
    """All topologies on n points by filtering every subset family.

    Deliberately naive: pick any collection of the intermediate masks,
    add the two mandatory members, and keep it if closed under union
    and intersection.  Independent of the preorder-based enumerator.
    """
    full = (1 << n) - 1
    middle = [s for s in range(full + 1) if s not in (0, full)]
    found = set()
    for r in range(len(middle) + 1):
        for extra in itertools.combinations(middle, r):
            fam = {0, full} | set(extra)
            if all(a | b in fam and a & b in fam for a in fam for b in fam):
                found.add(frozenset(fam))
    return found


def topologies_upto(n: int) -> list[Topology]:
    out = []
    for k in range(1, n + 1):
        out.extend(enumerate_topologies(k))
    return out


@pytest.fixture(scope="session")
def small_topologies() -> list[Topology]:
    return topologies_upto(3)
