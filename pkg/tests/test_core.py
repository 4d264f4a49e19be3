import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from optopo.core import (
    AxiomViolation,
    BoundsExceeded,
    GroundSet,
    closure,
    closure_table,
    count_topologies,
    enumerate_topologies,
    interior,
    interior_table,
    make_topology,
    topology_from_dict,
)

from conftest import brute_force_topologies


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 4), (3, 29)])
def test_enumeration_matches_brute_force(n, count):
    ours = {frozenset(t.opens) for t in enumerate_topologies(n)}
    oracle = brute_force_topologies(n)
    assert ours == oracle
    assert len(ours) == count


def test_enumeration_order_is_deterministic():
    a = [t.opens_sorted() for t in enumerate_topologies(3)]
    b = [t.opens_sorted() for t in enumerate_topologies(3)]
    assert a == b
    assert len(a) == len(set(map(tuple, a)))


def test_count_four_points():
    # labeled topologies on 4 points, cross-checked against published tables
    assert count_topologies(4) == 355


def test_enumeration_bounds():
    with pytest.raises(BoundsExceeded):
        list(enumerate_topologies(6))


def test_axiom_violations_are_reported():
    g = GroundSet.of_size(2)
    with pytest.raises(AxiomViolation):
        make_topology(g, [0])  # missing X
    with pytest.raises(AxiomViolation):
        make_topology(g, [3])  # missing empty set
    g3 = GroundSet.of_size(3)
    with pytest.raises(AxiomViolation):
        make_topology(g3, [0, 1, 2, 7])  # {a} | {b} missing
    with pytest.raises(AxiomViolation):
        make_topology(g3, [0, 3, 5, 7])  # {a,b} & {a,c} missing


def test_json_roundtrip(small_topologies):
    for t in small_topologies:
        assert topology_from_dict(t.to_dict()) == t


def test_kuratowski_closure_axioms(small_topologies):
    for t in small_topologies:
        cl = closure_table(t)
        full = t.full_mask
        assert cl[0] == 0
        for s in range(full + 1):
            assert s & ~cl[s] == 0  # extensive
            assert cl[cl[s]] == cl[s]  # idempotent
            for u in range(full + 1):
                assert cl[s | u] == cl[s] | cl[u]  # additive


def test_interior_closure_duality(small_topologies):
    for t in small_topologies:
        full = t.full_mask
        for s in range(full + 1):
            assert interior(t, s) == full & ~closure(t, full & ~s)
            assert t.is_open(interior(t, s))
            assert t.is_closed(closure(t, s))


@settings(max_examples=60, deadline=None)
@given(idx=st.integers(0, 354), s=st.integers(0, 15), u=st.integers(0, 15))
def test_closure_axioms_sampled_n4(idx, s, u):
    t = list(enumerate_topologies(4))[idx]
    cl = closure_table(t)
    assert s & ~cl[s] == 0
    assert cl[cl[s]] == cl[s]
    assert cl[s | u] == cl[s] | cl[u]


def test_mask_label_mapping():
    g = GroundSet(("a", "b", "c"))
    assert g.mask_of(["a", "c"]) == 0b101
    assert g.names_of(0b101) == ["a", "c"]
    with pytest.raises(ValueError):
        g.mask_of(["z"])
