import itertools
import json
from pathlib import Path

import pytest

from optopo.core import GroundSet, enumerate_topologies, make_topology
from optopo.functions import (
    FunctionClassId as F,
    FunctionInstance,
    GraphPropertyId,
    function_instance_from_dict,
    graph_has,
    is_contra_tstar_compact,
    is_gtsr_closed,
    preimage,
    satisfies,
)
from optopo.operators import Operator, OperatorKind, bind_operator, tstar_closure
from optopo.setclasses import SetClassId as C, members_of_class

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def load(name):
    return function_instance_from_dict(json.loads((INSTANCES / name).read_text()))


def test_fixture_bullet2():
    f = load("bullet2.json")
    assert satisfies(f, F.WEAKLY_ALMOST_CONTRA_TSTAR_CONT)
    assert not satisfies(f, F.WEAKLY_CONTRA_TSTAR_CONT)
    # only trivial regular opens in the codomain
    assert members_of_class(f.codomain, C.REGULAR_OPEN) == (0, f.codomain.full_mask)


def test_fixture_bullet3():
    f = load("bullet3.json")
    assert satisfies(f, F.ALMOST_TSTAR_CONT)
    assert not satisfies(f, F.ALMOST_CONTRA_TSTAR_CONT)


def test_fixture_bullet4():
    f = load("bullet4.json")
    assert satisfies(f, F.ALMOST_CONTRA_TSTAR_CONT)
    assert not satisfies(f, F.ALMOST_TSTAR_CONT)
    a = f.codomain.ground.mask_of(["a"])
    assert a in members_of_class(f.codomain, C.REGULAR_OPEN)
    from optopo.operators import is_tstar_open
    assert not is_tstar_open(f.domain, preimage(f, a))


def _wact_oracle(f: FunctionInstance) -> bool:
    """Scalar re-statement of the weakly-almost-contra condition."""
    y = f.codomain
    for s in members_of_class(y, C.REGULAR_CLOSED):
        for v in members_of_class(y, C.REGULAR_OPEN):
            if s & ~v:
                continue
            if tstar_closure(f.domain, preimage(f, s)) & ~preimage(f, v):
                return False
    return True


def _all_instances(nx, ny, kind):
    op = Operator(kind)
    for tx in enumerate_topologies(nx):
        dom = bind_operator(tx, op)
        for ty in enumerate_topologies(ny):
            for m in itertools.product(range(ny), repeat=nx):
                yield FunctionInstance(dom, ty, m)


@pytest.mark.parametrize("kind", [OperatorKind.INT_CL, OperatorKind.CL_INT])
def test_wact_decider_against_scalar_oracle(kind):
    for f in _all_instances(2, 3, kind):
        assert satisfies(f, F.WEAKLY_ALMOST_CONTRA_TSTAR_CONT) == _wact_oracle(f)


def test_gtsr_closed_oracle():
    op = Operator(OperatorKind.INT_CL)
    for t in enumerate_topologies(3):
        os = bind_operator(t, op)
        regopen = members_of_class(t, C.REGULAR_OPEN)
        for s in range(t.full_mask + 1):
            expected = all(
                tstar_closure(os, s) & ~u == 0
                for u in regopen if s & ~u == 0
            )
            assert is_gtsr_closed(os, s) == expected


def test_identity_operator_makes_contra_trivial():
    # with T = identity every set is T*-closed, so contra classes all hold
    for f in _all_instances(2, 2, OperatorKind.IDENTITY):
        assert satisfies(f, F.CONTRA_TSTAR_CONT)
        assert satisfies(f, F.WEAKLY_CONTRA_TSTAR_CONT)
        assert satisfies(f, F.WEAKLY_ALMOST_CONTRA_TSTAR_CONT)


def test_graph_properties_on_discrete_identity():
    g = GroundSet.of_size(2)
    discrete = make_topology(g, [0, 1, 2, 3])
    dom = bind_operator(discrete, Operator(OperatorKind.INT_CL))
    ident = FunctionInstance(dom, discrete, (0, 1))
    assert graph_has(ident, GraphPropertyId.TSTAR_REGULAR)
    assert graph_has(ident, GraphPropertyId.CONTRA_TSTAR_REGULAR)
    # constant map into an indiscrete codomain has no separating structure
    indiscrete = make_topology(g, [0, 3])
    const = FunctionInstance(dom, indiscrete, (0, 0))
    assert not graph_has(const, GraphPropertyId.TSTAR_REGULAR)


def test_instance_validation():
    g = GroundSet.of_size(2)
    t = make_topology(g, [0, 3])
    dom = bind_operator(t, Operator(OperatorKind.INT_CL))
    with pytest.raises(ValueError):
        FunctionInstance(dom, t, (0, 5))  # out-of-range point
    with pytest.raises(ValueError):
        FunctionInstance(dom, t, (0,))  # not total


def test_instance_json_roundtrip():
    f = load("bullet2.json")
    assert function_instance_from_dict(f.to_dict()) == f


def test_compactness_predicate_is_trivially_true():
    f = load("bullet2.json")
    assert is_contra_tstar_compact(f.domain)
