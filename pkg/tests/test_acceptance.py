"""End-to-end acceptance suite.

Each test prints exactly one PASS/FAIL line so the whole gate can be
read at a glance with `pytest -v -s tests/test_acceptance.py`.
"""

import itertools
import json
import time
from pathlib import Path

import numpy as np

from optopo import dsl
from optopo._ctx import maps_array, op_ctx, space_ctx
from optopo.cli import run as cli_run
from optopo.core import (
    closure,
    closure_table,
    count_topologies,
    enumerate_topologies,
    interior,
)
from optopo.functions import (
    DECIDERS,
    FunctionClassId as F,
    function_instance_from_dict,
    preimage,
    satisfies,
)
from optopo.operators import (
    Operator,
    OperatorKind,
    apply_operator,
    bind_operator,
    is_tstar_open,
    tstar_closure,
)
from optopo.search import (
    Outcome,
    PropositionId,
    SearchBounds,
    find_counterexample,
    verify_implication,
    verify_proposition,
)
from optopo.setclasses import (
    SetClassId as C,
    class_closure,
    is_in_class,
    is_urysohn,
    members_of_class,
)

from conftest import brute_force_topologies, topologies_upto

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def _report(num, ok, detail=""):
    line = f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def _load(name):
    return function_instance_from_dict(
        json.loads((INSTANCES / name).read_text())
    )


def test_acceptance_01_reference_fixtures():
    t0 = time.monotonic()
    b2, b3, b4 = _load("bullet2.json"), _load("bullet3.json"), _load("bullet4.json")
    ok = (
        satisfies(b2, F.WEAKLY_ALMOST_CONTRA_TSTAR_CONT)
        and not satisfies(b2, F.WEAKLY_CONTRA_TSTAR_CONT)
        and satisfies(b3, F.ALMOST_TSTAR_CONT)
        and not satisfies(b3, F.ALMOST_CONTRA_TSTAR_CONT)
        and satisfies(b4, F.ALMOST_CONTRA_TSTAR_CONT)
    )
    a = b4.codomain.ground.mask_of(["a"])
    ok = ok and a in members_of_class(b4.codomain, C.REGULAR_OPEN)
    ok = ok and not is_tstar_open(b4.domain, preimage(b4, a))
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 1.0
    _report(1, ok, f"{elapsed:.2f}s")


def test_acceptance_02_lemma_equivalence_22707():
    t0 = time.monotonic()
    b = SearchBounds(3, 3, min_points_x=3, min_points_y=3)
    v = verify_proposition(PropositionId.LEMMA_3_1, b)
    elapsed = time.monotonic() - t0
    ok = (
        v.outcome == Outcome.HOLDS_EXHAUSTIVELY
        and v.checked == 22707 == 29 * 29 * 27
        and elapsed < 10.0
    )
    _report(2, ok, f"checked={v.checked}, {elapsed:.2f}s")


def test_acceptance_03_implication_diagram():
    ops = tuple(
        Operator(k) for k in (OperatorKind.IDENTITY, OperatorKind.INT_CL,
                              OperatorKind.CL_INT)
    )
    b = SearchBounds(3, 3, operators=ops)
    verdicts = [
        verify_proposition(p, b)
        for p in (PropositionId.REM_3_2a, PropositionId.REM_3_2b,
                  PropositionId.P3_3, PropositionId.P3_6, PropositionId.P3_7)
    ]
    verdicts.append(
        verify_implication(F.WEAKLY_CONTRA_CONT, F.WEAKLY_CONTRA_TSTAR_CONT, bounds=b)
    )
    ok = all(v.outcome == Outcome.HOLDS_EXHAUSTIVELY for v in verdicts)
    _report(3, ok, f"{len(verdicts)} arrows, checked={verdicts[0].checked} each")


def test_acceptance_04_extremally_disconnected_equivalence():
    b = SearchBounds(3, 3)
    v34 = verify_proposition(PropositionId.P3_4, b)
    v35 = verify_proposition(PropositionId.COR_3_5, b)
    ok = (
        v34.outcome == Outcome.HOLDS_EXHAUSTIVELY
        and v35.outcome == Outcome.HOLDS_EXHAUSTIVELY
        and v34.qualifying > 0
        and v35.qualifying > 0
    )
    _report(4, ok, f"qualifying={v34.qualifying}")


def test_acceptance_05_non_reversibility_witnesses():
    b3 = SearchBounds(3, 3)
    targets = [
        (F.WEAKLY_ALMOST_CONTRA_TSTAR_CONT, F.WEAKLY_CONTRA_TSTAR_CONT),
        (F.ALMOST_TSTAR_CONT, F.ALMOST_CONTRA_TSTAR_CONT),
        (F.ALMOST_CONTRA_TSTAR_CONT, F.ALMOST_TSTAR_CONT),
    ]
    ok = True
    for want, refute in targets:
        v = find_counterexample(f"{want.value}(f) and not {refute.value}(f)", bounds=b3)
        if v.outcome != Outcome.COUNTEREXAMPLE:
            ok = False
            continue
        inst = function_instance_from_dict(v.witness["instance"])
        ok = ok and satisfies(inst, want) and not satisfies(inst, refute)
    v4 = find_counterexample(
        "slightly_contra_tstar_cont(f) and not weakly_almost_contra_tstar_cont(f)",
        bounds=SearchBounds(4, 4),
    )
    if v4.outcome == Outcome.COUNTEREXAMPLE:
        inst = function_instance_from_dict(v4.witness["instance"])
        ok = ok and satisfies(inst, F.SLIGHTLY_CONTRA_TSTAR_CONT)
        ok = ok and not satisfies(inst, F.WEAKLY_ALMOST_CONTRA_TSTAR_CONT)
        detail4 = f"witness at rank {v4.checked - 1}"
    else:
        ok = ok and v4.outcome == Outcome.HOLDS_EXHAUSTIVELY
        detail4 = f"no finite witness up to 4 points ({v4.checked} instances scanned)"
    _report(5, ok, detail4)


def test_acceptance_06_gtsr_and_irresolute_props():
    b = SearchBounds(3, 3)
    vi = verify_proposition(PropositionId.P_IRRESOLUTE, b)
    vg = verify_proposition(PropositionId.P_GTSR, b)
    ok = (
        vi.outcome == Outcome.HOLDS_EXHAUSTIVELY and vi.qualifying > 0
        and vg.outcome == Outcome.HOLDS_EXHAUSTIVELY and vg.qualifying > 0
    )
    _report(6, ok, f"qualifying={vi.qualifying}/{vg.qualifying}")


def test_acceptance_07_graph_property():
    b = SearchBounds(3, 3)
    v = verify_proposition(PropositionId.P_GRAPH, b)
    # a finite Urysohn space is discrete, so qualifying instances exist
    # exactly when the codomain is discrete
    discrete_count = sum(
        1 for t in topologies_upto(3)
        if is_urysohn(t) and len(t.opens) == t.full_mask + 1
    )
    ok = (
        v.outcome == Outcome.HOLDS_EXHAUSTIVELY
        and v.qualifying > 0
        and discrete_count == 3
    )
    _report(7, ok, f"qualifying={v.qualifying}")


def test_acceptance_08_structural_suites():
    ok = True
    for t in topologies_upto(3):
        full = t.full_mask
        cl = closure_table(t)
        for s in range(full + 1):
            ok = ok and s & ~cl[s] == 0 and cl[cl[s]] == cl[s]
            ok = ok and interior(t, s) == full & ~closure(t, full & ~s)
            ok = ok and class_closure(t, s, C.PRECLOSED) == s | closure(t, interior(t, s))
            for u in range(full + 1):
                ok = ok and cl[s | u] == (cl[s] | cl[u])
        osp = bind_operator(t, Operator(OperatorKind.INT_CL))
        oss = bind_operator(t, Operator(OperatorKind.CL_INT))
        for s in range(full + 1):
            ok = ok and is_tstar_open(osp, s) == is_in_class(t, s, C.PREOPEN)
            ok = ok and is_tstar_open(oss, s) == is_in_class(t, s, C.SEMIOPEN)
            c = tstar_closure(osp, s)
            ok = ok and s & ~c == 0 and tstar_closure(osp, c) == c
            for u in range(full + 1):
                if s & ~u == 0:
                    ok = ok and tstar_closure(osp, s) & ~tstar_closure(osp, u) == 0
        if not ok:
            break
    _report(8, ok)


def test_acceptance_09_enumeration_counts():
    t0 = time.monotonic()
    ok = True
    for n, expect in [(0, 1), (1, 1), (2, 4), (3, 29)]:
        ours = {frozenset(t.opens) for t in enumerate_topologies(n)}
        ok = ok and ours == brute_force_topologies(n) and len(ours) == expect
    # 355 labeled topologies on 4 points per the published count
    ok = ok and count_topologies(4) == 355
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 60.0
    _report(9, ok, f"{elapsed:.2f}s")


def test_acceptance_10_dsl_differential():
    env = dsl.stdlib()
    ok = True
    mismatches = 0
    for kind in (OperatorKind.INT_CL, OperatorKind.CL_INT):
        op = Operator(kind)
        for tx in topologies_upto(3):
            xc = op_ctx(bind_operator(tx, op))
            for ty in topologies_upto(3):
                yc = space_ctx(ty)
                maps = maps_array(tx.ground.size, ty.ground.size)
                for c in F:
                    native = np.broadcast_to(
                        np.asarray(DECIDERS[c](xc, yc, maps)), (len(maps),)
                    )
                    via_dsl = np.broadcast_to(
                        np.asarray(dsl.funclass_batch(env[c.value])(xc, yc, maps)),
                        (len(maps),),
                    )
                    if not np.array_equal(native, via_dsl):
                        mismatches += int(np.sum(native != via_dsl))
                        ok = False
    _report(10, ok, f"mismatches={mismatches}")


def test_acceptance_11_deterministic_json(capsys):
    runs = [
        ["verify", "--proposition", "P3_4", "--max-points", "3", "--json"],
        ["search", "--target",
         "weakly_almost_contra_tstar_cont(f) and not almost_tstar_cont(f)",
         "--max-points", "3", "--json"],
    ]
    ok = True
    for argv in runs:
        outs = []
        for extra in ([], [], ["--jobs", "2"], ["--jobs", "3"]):
            cli_run(argv + extra)
            outs.append(capsys.readouterr().out)
        ok = ok and len(set(outs)) == 1
    with capsys.disabled():
        _report(11, ok)
