import random

import pytest
from conftest import algebra

from hqt.abgroup import Bicharacter, enumerate_bicharacters
from hqt.catalog import k8n_custom
from hqt.exact import CycNum, is_primitive_root
from hqt.hopf import NotK8nShape, build_hopf
from hqt.rmatrix import (
    ConditionViolated,
    NotationCache,
    ParameterConstraintViolated,
    RMatrix,
    UnsupportedFamily,
    VariantMismatch,
    block_matrices,
    classify_form,
    construct_R_alpha_beta,
    construct_trivial,
    enumerate_all,
    enumerate_nontrivial,
    enumerate_trivial,
    identity_suite,
    lr_symmetries,
    minimality,
    minimality_criterion,
    perturb,
    verify_block_conditions,
    verify_quasitriangular,
)

K8N = ["k8", "k16", "k32", "k24s", "flat1", "flat2"]


def gens(H):
    G = H.group
    return G.generator(0), G.generator(1)


def k8_nontrivial(H, k=1):
    z = CycNum.zeta(H.order, H.order // 8 * k)
    return construct_R_alpha_beta(H, z, z.inv())


# ---------------------------------------------------------------------------
# verification


def test_unit_fails_on_k8(K8):
    rep = verify_quasitriangular(K8, K8.tensor_unit(2))
    assert not rep.ok
    assert rep.failures[0][0].startswith("Delta^op")
    assert "x" in rep.failures[0][1]


def test_unit_passes_on_flat(FLAT8):
    assert verify_quasitriangular(FLAT8, FLAT8.tensor_unit(2)).ok


def test_alpha_beta_on_k8(K8):
    R = k8_nontrivial(K8)
    assert verify_quasitriangular(K8, R).ok
    assert classify_form(R) == "NonTrivial"
    assert verify_block_conditions(K8, R).ok


def test_negated_w4_breaks_e315(K8):
    R = k8_nontrivial(K8)
    a, _ = gens(K8)
    blocks = [dict(b) for b in R.w]
    blocks[3][(a, a)] = -blocks[3][(a, a)]
    bad = RMatrix(K8, blocks)
    rep = verify_block_conditions(K8, bad)
    assert not rep.ok
    assert any(name.endswith("multiplicative") for name, _ in rep.failures)
    assert not verify_quasitriangular(K8, bad).ok


@pytest.mark.parametrize("name", ["k8", "k16"])
def test_verifiers_agree_on_perturbations(name):
    H = algebra(name)
    rng = random.Random(7)
    Rs = enumerate_nontrivial(H)
    for _ in range(20):
        R = perturb(rng.choice(Rs), rng)
        full = verify_quasitriangular(H, R, stop_early=True).ok
        assert verify_block_conditions(H, R).ok == full
    for R in Rs:
        assert verify_block_conditions(H, R).ok


def test_zero_is_not_invertible(K8):
    rep = verify_quasitriangular(K8, {})
    assert ("invertible", None) in rep.failures


# ---------------------------------------------------------------------------
# forms


def test_classify_neither(K8):
    a, b = gens(K8)
    R = RMatrix(K8, [{}, {(a, b): K8.one}, {}, {}])
    assert classify_form(R) == "Neither"


def test_trivial_examples(K8):
    G = K8.group
    M = K8.order
    a, b = gens(K8)
    # w(a^i b^j, a^k b^l) = (-1)^(j(k+l))
    table = [[CycNum.zeta(M, M // 2 * (g[1] * (h[0] + h[1]))) for h in G.elements] for g in G.elements]
    R = construct_trivial(K8, Bicharacter(G, table))
    assert classify_form(R) == "Trivial"
    one = Bicharacter(G, [[K8.one] * 4 for _ in range(4)])
    with pytest.raises(ConditionViolated) as exc:
        construct_trivial(K8, one)
    assert exc.value.args[0] == (G.label(b), G.label(a))
    # (a, b) violates the same condition
    from hqt.abgroup import eta

    assert one(K8.data.act(a), K8.data.act(b)) != one(a, b) * eta(K8.data)(a, b)


def test_a18_trivial_example():
    H = algebra("a18")
    G = H.group
    M = H.order
    t = CycNum.zeta(M, M // 3)
    a, b = gens(H)
    # w(a, b) = t^2, w(b, a) = t and w = 1 on the diagonal generator pairs
    table = [[t ** (2 * g[0] * h[1] + g[1] * h[0]) for h in G.elements] for g in G.elements]
    R = construct_trivial(H, Bicharacter(G, table))
    assert R.get(1, a, b) == t**2
    assert verify_quasitriangular(H, R).ok
    # w(b, a) is forced: w = 1 there is rejected
    table = [[t ** (2 * g[0] * h[1]) for h in G.elements] for g in G.elements]
    with pytest.raises(ConditionViolated):
        construct_trivial(H, Bicharacter(G, table))


@pytest.mark.parametrize("name,count", [("k8", 4), ("h18", 9), ("a18", 9), ("k16", 8), ("flat1", 4)])
def test_trivial_counts(name, count):
    H = algebra(name)
    Rs = enumerate_trivial(H)
    assert len(Rs) == count
    assert all(classify_form(R) == "Trivial" for R in Rs)


def test_trivial_counts_by_brute_force(K16):
    # count bicharacters satisfying w(g<|x, h<|x) = w(g, h) eta(g, h) directly
    from hqt.abgroup import eta

    H = K16
    act, e = H.data.act, eta(H.data)
    N = H.n_group
    good = 0
    for w in enumerate_bicharacters(H.group, H.order):
        if all(w(act(g), act(h)) == w(g, h) * e(g, h) for g in range(N) for h in range(N)):
            good += 1
    assert good == len(enumerate_trivial(H)) == 8


# ---------------------------------------------------------------------------
# nontrivial family


def test_parameter_constraint(K8):
    with pytest.raises(ParameterConstraintViolated):
        construct_R_alpha_beta(K8, K8.one, K8.one)


def test_variant_mismatch(K8):
    z = CycNum.zeta(K8.order, K8.order // 8)
    with pytest.raises(VariantMismatch):
        construct_R_alpha_beta(K8, z, z.inv(), variant=1)


def test_flat_alpha_beta_one(FLAT8):
    R = construct_R_alpha_beta(FLAT8, FLAT8.one, FLAT8.one)
    assert verify_quasitriangular(FLAT8, R).ok


@pytest.mark.parametrize("name,n", [("k8", 1), ("k16", 2), ("k32", 4), ("k24s", 3), ("flat1", 1), ("flat2", 2)])
def test_nontrivial_count_law(name, n):
    H = algebra(name)
    Rs = enumerate_nontrivial(H)
    assert len(Rs) == 4 * n
    assert all(classify_form(R) == "NonTrivial" for R in Rs)


def test_k8_nontrivial_parameters(K8):
    a, b = gens(K8)
    ab = K8.group.mul[a][b]
    for R in enumerate_nontrivial(K8):
        al, be = R.get(4, a, a), R.get(4, a, ab)
        assert al**4 == -1 and al * be == 1


@pytest.mark.parametrize("name", ["k8", "h18", "a18"])
def test_enumerate_all_counts(name):
    assert len(enumerate_all(algebra(name))) == {"k8": 8, "h18": 9, "a18": 9}[name]


def test_enumerate_all_unsupported():
    from hqt.abgroup import AbelianGroup, Action, ExtensionData

    # Z4 x Z2 with a<|x = a^-1 b: K(8n)-like fixed points but not in K(8n) generator form
    G = AbelianGroup([4, 2])
    one = CycNum.one(32)
    d = ExtensionData(G, Action(G, [(3, 1), (0, 1)]), (one,) * 8, tuple((one,) * 8 for _ in range(8)), 32)
    H = build_hopf(d)
    with pytest.raises(UnsupportedFamily):
        enumerate_all(H)


# ---------------------------------------------------------------------------
# minimality


def test_k8_minimality(K8):
    R = k8_nontrivial(K8)
    rep = minimality(K8, R)
    assert rep.minimal and rep.consistent
    assert rep.block_ranks == (2, 2, 2, 2)
    assert rep.gamma == 1
    for T in enumerate_trivial(K8):
        assert not minimality(K8, T).minimal


def test_k16_never_minimal(K16):
    for R in enumerate_all(K16):
        rep = minimality(K16, R)
        assert not rep.minimal and rep.consistent


def test_k8_block_rank_full(K8):
    for m in block_matrices(k8_nontrivial(K8)):
        assert m.rank() == 2


@pytest.mark.parametrize("name", K8N)
def test_minimality_coherence(name):
    H = algebra(name)
    crit = minimality_criterion(H)
    reps = [minimality(H, R) for R in enumerate_nontrivial(H)]
    assert all(r.consistent for r in reps)
    assert crit.minimal == any(r.minimal for r in reps)


def test_criterion_examples(K8):
    crit = minimality_criterion(K8)
    assert crit.minimal and crit.omega_witnesses == [K8.one]
    H = algebra("k32")
    crit = minimality_criterion(H)
    assert crit.minimal
    a, _ = gens(H)
    zeta = H.data.sigma[a]
    for om in crit.omega_witnesses:
        assert om**4 == 1 and om**2 == -1 or is_primitive_root(om * om * H.data.sigma[H.group.power(a, 2)], 4)
    assert any(v == zeta**2 for v in crit.criterion_values)
    assert not minimality_criterion(algebra("k16")).minimal
    assert not minimality_criterion(algebra("flat2")).minimal


def test_criterion_needs_k8n_shape():
    with pytest.raises(NotK8nShape):
        minimality_criterion(algebra("h18"))


def test_flat_no_minimal_r():
    for n in (1, 2):
        H = build_hopf(k8n_custom(n))
        assert not any(minimality(H, R).minimal for R in enumerate_all(H))


# ---------------------------------------------------------------------------
# identities


@pytest.mark.parametrize("name", K8N)
def test_identity_suite(name):
    assert identity_suite(algebra(name).data) == []


@pytest.mark.parametrize("name", K8N)
def test_lr_symmetries(name):
    H = algebra(name)
    for R in enumerate_nontrivial(H):
        assert lr_symmetries(H, R) == []


def test_notation_degenerate_n1(K8):
    nc = NotationCache(K8.data)
    assert nc.P == [1, 1, 1]
    assert nc.lam(2, 1) == K8.data.sigma[gens(K8)[0]]


def test_json_roundtrip(K8):
    for R in enumerate_all(K8):
        assert RMatrix.from_json(K8, R.to_json()) == R
