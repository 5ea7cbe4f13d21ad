import pytest
from conftest import algebra

from hqt.abgroup import ExtensionData
from hqt.catalog import k8
from hqt.hopf import build_hopf
from hqt.oracle import DimensionCapExceeded, compare, dim_cap, solve_all, solve_linear_stage
from hqt.rmatrix import classify_form, enumerate_all, verify_quasitriangular


def test_linear_stage_k8(K8):
    stage = solve_linear_stage(K8)
    assert stage.monomial
    N = K8.n_group
    act = K8.data.act
    moved = {N + g for g in range(N) if act(g) != g}
    # x-terms over moved elements only pair with each other
    assert all((i in moved) == (j in moved) for i, j in stage.support())
    assert {(i, j) for i in moved for j in moved} <= stage.support()
    assert any(stage.in_tt_block(p) for p in range(stage.params))
    assert all(len(b) == len(stage.keys_of(p)) for p, b in enumerate(stage.basis))


def test_unit_lies_in_flat_linear_stage(FLAT8):
    stage = solve_linear_stage(FLAT8)
    unit = FLAT8.tensor_unit(2)
    # 1 (x) 1 is constant on each parameter's support
    for p in range(stage.params):
        vals = {unit.get(k, FLAT8.zero) / c for k in stage.keys_of(p) for c in [stage.param_of[k][1]]}
        assert len(vals) == 1
    assert set(unit) <= stage.support()


def test_unit_outside_k8_linear_stage(K8):
    stage = solve_linear_stage(K8)
    unit = K8.tensor_unit(2)
    consistent = all(
        len({unit.get(k, K8.zero) / stage.param_of[k][1] for k in stage.keys_of(p)}) == 1
        for p in range(stage.params)
    ) and set(unit) <= stage.support()
    assert not consistent


@pytest.mark.parametrize("name,M,count", [("k8", 8, 8), ("k16", 16, 16), ("flat1", None, 8), ("flat2", None, 16)])
def test_oracle_counts(name, M, count):
    H = algebra(name)
    res = solve_all(H, M)
    assert res.exhaustive and len(res.solutions) == count
    assert compare(res, enumerate_all(H)).empty
    assert all(classify_form(R) in ("Trivial", "NonTrivial") for R in res.solutions)


def test_oracle_in_full_field_matches_small_field(K16):
    small = solve_all(K16, 16)
    full = solve_all(K16)
    assert full.ambient_order == K16.order
    assert compare(small, full.solutions).empty


def test_odd_target_is_doubled(K8):
    assert solve_all(K8, 1).ambient_order == 2


@pytest.mark.parametrize("name", ["h18", "a18"])
def test_oracle_trivial_only_at_dim_18(name):
    H = algebra(name)
    assert H.dim > dim_cap()
    res = solve_all(H)
    assert res.exhaustive and len(res.solutions) == 9
    assert all(classify_form(R) == "Trivial" for R in res.solutions)
    assert compare(res, enumerate_all(H)).empty


def test_diff_detects_missing_solution(K8):
    res = solve_all(K8, 8)
    rs = enumerate_all(K8)
    diff = compare(res, rs[1:])
    assert diff.size == 1 and diff.only_oracle == [rs[0]]
    diff = compare(res, rs + [rs[0]])
    assert diff.empty


def test_dimension_cap(monkeypatch):
    H = algebra("k32")
    with pytest.raises(DimensionCapExceeded):
        solve_all(H)
    monkeypatch.setenv("HQT_DIM_CAP", "8")
    assert dim_cap() == 8
    with pytest.raises(DimensionCapExceeded):
        solve_all(algebra("k16"))


def test_oracle_is_sound_on_corrupted_data():
    d = k8()
    G = d.group
    b = G.generator(1)
    t = [list(r) for r in d.tau]
    t[b][b] = -t[b][b]
    H = build_hopf(ExtensionData(G, d.action, d.sigma, tuple(map(tuple, t)), d.order), check=False)
    res = solve_all(H, 8)
    # whatever survives still passes the full check on the broken structure
    assert all(verify_quasitriangular(H, R).ok for R in res.solutions)
    assert len(res.solutions) < len(solve_all(algebra("k8"), 8).solutions)


@pytest.mark.slow
def test_oracle_k32_with_raised_cap(monkeypatch):
    monkeypatch.setenv("HQT_DIM_CAP", "32")
    H = algebra("k32")
    res = solve_all(H)
    assert res.exhaustive and len(res.solutions) == 32
    assert compare(res, enumerate_all(H)).empty
