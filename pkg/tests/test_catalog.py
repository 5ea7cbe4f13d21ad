import json

import pytest

from hqt.abgroup import validate_extension
from hqt.catalog import (
    CatalogSpec,
    InvalidSpec,
    a2n2t,
    ambient_order,
    canonical_json,
    extension_from_json,
    extension_to_json,
    fingerprint,
    from_spec,
    h2n2,
    k8,
    k8n_custom,
    k8n_sigma,
    k8n_zeta,
    primitive_exponent,
)
from hqt.exact import CycNum


def test_ambient_orders():
    assert k8().order == 32
    assert k8n_zeta(2).order == 64
    assert k8n_zeta(4).order == 128
    assert h2n2(3).order == a2n2t(3).order == 288
    assert ambient_order(4, [2]) == 32


def test_k8_tables():
    d = k8()
    G = d.group
    s = {G.label(g): d.sigma[g] for g in range(4)}
    assert s == {"0,0": 1, "0,1": -1, "1,0": 1, "1,1": 1}
    b, a = G.generator(1), G.generator(0)
    assert d.tau[b][a] == -1 and d.tau[a][a] == 1 and d.tau[b][b] == -1


def test_k8n_zeta_sigma():
    d = k8n_zeta(2)
    G = d.group
    zeta = CycNum.zeta(d.order, d.order // 4)
    for i in range(4):
        for j in range(2):
            sign = (-1) ** (i * (i - 1) // 2)
            assert d.sigma[G.element(i, j)] == zeta**i * sign


def test_root_index_selects_other_primitive_root():
    d0, d1 = k8n_zeta(2, 0), k8n_zeta(2, 1)
    a = d0.group.generator(0)
    assert d0.sigma[a] == d1.sigma[a] ** 3
    assert fingerprint(d0) != fingerprint(d1)
    with pytest.raises(InvalidSpec):
        k8n_zeta(2, 5)
    assert primitive_exponent(8, 2) == 5


def test_odd_n_zeta_data_is_inconsistent():
    rep = validate_extension(k8n_zeta(3))
    assert not rep.ok
    assert {f[0] for f in rep.failures} == {"compatibility"}


def test_odd_n_neighbour_is_consistent():
    assert validate_extension(k8n_sigma(3, 12, 1)).ok
    assert validate_extension(k8n_sigma(3, 12, 5)).ok
    assert not validate_extension(k8n_sigma(3, 6, 1)).ok


def test_family_constraints():
    with pytest.raises(InvalidSpec):
        a2n2t(4)
    with pytest.raises(InvalidSpec):
        k8n_zeta(1)
    with pytest.raises(InvalidSpec):
        CatalogSpec("nope")
    with pytest.raises(InvalidSpec):
        from_spec(CatalogSpec("h2n2"))


def test_h2n2_n2_is_k8():
    assert h2n2(2) == k8()
    assert fingerprint(h2n2(2)) == fingerprint(k8())


def test_a2n2t_sigma_trivial():
    d = a2n2t(3)
    assert all(v == 1 for v in d.sigma)


def test_json_roundtrip(tmp_path):
    for d in (k8(), k8n_zeta(2), a2n2t(3)):
        obj = extension_to_json(d)
        assert set(obj) == {"invariants", "action", "sigma", "tau"}
        assert "gen_0" in obj["action"]
        back = extension_from_json(json.loads(canonical_json(obj)))
        assert back == d
    path = tmp_path / "k8.json"
    path.write_text(canonical_json({"data": extension_to_json(k8())}))
    assert from_spec(CatalogSpec("flat_custom", data_file=str(path))) == k8()
    assert from_spec(CatalogSpec("k8n_custom", n=1, data_file=str(path))) == k8()
    with pytest.raises(InvalidSpec):
        from_spec(CatalogSpec("k8n_custom", n=2, data_file=str(path)))


def test_malformed_json():
    with pytest.raises(InvalidSpec):
        extension_from_json({"invariants": [2]})
    obj = extension_to_json(k8())
    del obj["tau"]["0,0|0,0"]
    with pytest.raises(InvalidSpec):
        extension_from_json(obj)


def test_custom_default_is_flat():
    d = k8n_custom(3)
    assert all(v == 1 for v in d.sigma)
    assert all(v == 1 for r in d.tau for v in r)
