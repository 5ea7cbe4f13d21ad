"""The acceptance suite: nine end-to-end checks over the example families.

Each check returns a CriterionResult; nothing here raises on a failed check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .abgroup import eta, obstruction_check, validate_extension
from .catalog import a2n2t, h2n2, k8, k8n_custom, k8n_sigma, k8n_zeta
from .exact import CycNum, is_primitive_root, solve_power
from .hopf import InvalidData, build_hopf, dual_presentation_check, dual_products, k8n_generators, verify_hopf_axioms
from .oracle import compare, solve_all
from .rmatrix import (
    classify_form,
    construct_R_alpha_beta,
    enumerate_all,
    enumerate_nontrivial,
    enumerate_trivial,
    identity_suite,
    lr_symmetries,
    minimality,
    minimality_criterion,
    sort_unique,
    verify_quasitriangular,
)

__all__ = ["CriterionResult", "CRITERIA", "SUBSETS", "run", "k8n_instances", "all_instances"]


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool = True
    details: list = field(default_factory=list)
    seconds: float = 0.0

    def check(self, cond: bool, what: str):
        self.details.append(("ok " if cond else "FAIL ") + what)
        if not cond:
            self.passed = False

    def line(self) -> str:
        return f"criterion {self.number} [{'PASS' if self.passed else 'FAIL'}] {self.title} ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "details": self.details,
            "seconds": round(self.seconds, 2),
        }


def k8n_instances():
    """K(8n)-shaped instances with n <= 4, labelled."""
    return [
        ("k8", k8()),
        ("h2n2 n=2", h2n2(2)),
        ("k8n_zeta n=2", k8n_zeta(2)),
        ("k8n_zeta n=2 root 1", k8n_zeta(2, 1)),
        ("k8n_zeta n=4", k8n_zeta(4)),
        ("k8n_sigma n=3", k8n_sigma(3, 12, 1)),
        ("k8n_custom n=1", k8n_custom(1)),
        ("k8n_custom n=2", k8n_custom(2)),
        ("k8n_custom n=3", k8n_custom(3)),
        ("k8n_custom n=4", k8n_custom(4)),
    ]


def all_instances():
    return k8n_instances() + [("h2n2 n=3", h2n2(3)), ("a2n2t n=3", a2n2t(3))]


def _build(res: CriterionResult, label: str, data):
    try:
        return build_hopf(data)
    except InvalidData as exc:
        res.check(False, f"{label}: {exc}")
        return None


def _zeta_instance(res: CriterionResult, n: int):
    """K(8n, zeta) for n >= 2; None (recorded as a failure) when the data is inconsistent."""
    try:
        return _build(res, f"K(8*{n}, zeta)", k8n_zeta(n))
    except ValueError as exc:
        res.check(False, f"K(8*{n}, zeta): {exc}")
        return None


# ---------------------------------------------------------------------------


def criterion_1() -> CriterionResult:
    res = CriterionResult(1, "K8 complete enumeration, closed forms vs oracle at M=8")
    H = build_hopf(k8())
    Rs = enumerate_all(H)
    triv = [R for R in Rs if classify_form(R) == "Trivial"]
    non = [R for R in Rs if classify_form(R) == "NonTrivial"]
    res.check(len(Rs) == 8, f"enumerate_all gives {len(Rs)} (expect 8)")
    res.check(len(triv) == 4 and len(non) == 4, f"{len(triv)} trivial + {len(non)} nontrivial")
    res.check(all(verify_quasitriangular(H, R).ok for R in Rs), "every R verifies exactly")
    _, a, b = k8n_generators(H.data)
    ab = H.group.mul[a][b]
    params_ok = all(R.get(4, a, a) ** 4 == -1 and R.get(4, a, ab) * R.get(4, a, a) == 1 for R in non)
    res.check(params_ok, "nontrivial members have alpha^4 = -1, beta = 1/alpha")
    gd_ok = all(R.get(1, a, a) ** 2 == 1 and R.get(1, b, b) ** 2 == 1 for R in triv)
    res.check(gd_ok, "trivial members have gamma^2 = delta^2 = 1")
    orc = solve_all(H, 8)
    res.check(orc.exhaustive, "oracle run is exhaustive")
    res.check(len(orc.solutions) == 8, f"oracle finds {len(orc.solutions)}")
    res.check(compare(orc, Rs).empty, "empty diff")
    return res


def criterion_2() -> CriterionResult:
    res = CriterionResult(2, "nontrivial count 4n for K(8n, zeta), n = 1..4")
    for n in (1, 2, 3, 4):
        # n = 1: the family starts at n = 2; its n = 1 member is K8
        H = build_hopf(k8()) if n == 1 else _zeta_instance(res, n)
        if H is None:
            continue
        cnt = len(enumerate_nontrivial(H))
        res.check(cnt == 4 * n, f"n={n}: {cnt} nontrivial (expect {4 * n})")
    return res


def criterion_3() -> CriterionResult:
    res = CriterionResult(3, "H18 and A18 admit only the 9 trivial R-matrices")
    for label, data, tag in (("h2n2 n=3", h2n2(3), "displacement"), ("a2n2t n=3", a2n2t(3), "odd_order")):
        H = build_hopf(data)
        Rs = enumerate_all(H)
        res.check(len(Rs) == 9, f"{label}: {len(Rs)} R-matrices (expect 9)")
        res.check(all(classify_form(R) == "Trivial" for R in Rs), f"{label}: all trivial")
        res.check(all(verify_quasitriangular(H, R).ok for R in Rs), f"{label}: all verify")
        ob = obstruction_check(data)
        res.check(not ob.possible and tag in ob.tags(), f"{label}: impossible, reasons {ob.tags()}")
    return res


def criterion_4() -> CriterionResult:
    res = CriterionResult(4, "minimality: span dim, block ranks and omega criterion agree")
    for label, data in k8n_instances():
        H = build_hopf(data)
        n, a, b = k8n_generators(data)
        minus = eta(data)(a, b) == -1
        crit = minimality_criterion(H)
        reps = [minimality(H, R) for R in enumerate_nontrivial(H)]
        res.check(all(r.consistent for r in reps), f"{label}: per-R agreement over {len(reps)} R")
        if minus:
            any_min = any(r.minimal for r in reps)
            res.check(crit.minimal == any_min, f"{label}: criterion '{crit.verdict}' matches span dims")
        else:
            res.check(not any(r.minimal for r in reps), f"{label}: eta(a,b) = 1, no minimal R")
    return res


def criterion_5() -> CriterionResult:
    res = CriterionResult(5, "K(8n, zeta) minimality: n=2 no, n=3 no, n=4 yes with explicit set")
    for n, want in ((2, False), (3, False), (4, True)):
        H = _zeta_instance(res, n)
        if H is None:
            continue
        crit = minimality_criterion(H)
        reps = {R: minimality(H, R) for R in enumerate_nontrivial(H)}
        res.check(crit.minimal == want, f"n={n}: criterion says {crit.verdict}")
        res.check(any(r.minimal for r in reps.values()) == want, f"n={n}: span dims agree")
        if not want:
            continue
        res.check(bool(crit.minimal_set), f"n={n}: minimal set has {len(crit.minimal_set)} members")
        res.check(all(minimality(H, R).minimal for R in crit.minimal_set), f"n={n}: each member minimal")
        res.check(
            crit.minimal_set == sort_unique(R for R, r in reps.items() if r.minimal),
            f"n={n}: minimal set equals the minimal R among all nontrivial ones",
        )
        res.check(crit.minimal_set == _zeta_minimal_set(H, n), f"n={n}: matches the zeta form of the set")
    return res


def _zeta_minimal_set(H, n):
    """{R_(alpha,beta): alpha^4 = omega^2/zeta^2, beta = omega/(alpha zeta), omega^n = 1, -(omega zeta)^2 primitive}."""
    _, a, _ = k8n_generators(H.data)
    M = H.order
    zeta = H.data.sigma[a]  # sigma(a) = zeta
    out = []
    for om in solve_power(CycNum.one(M), n):
        if not is_primitive_root(-((om * zeta) ** 2), n):
            continue
        for al in solve_power(om * om / zeta**2, 4):
            out.append(construct_R_alpha_beta(H, al, om / (al * zeta)))
    return sort_unique(out)


def criterion_6() -> CriterionResult:
    res = CriterionResult(6, "eta(a,b) = +1 branch on the sigma = tau = 1 instance of dim 8")
    data = k8n_custom(1)
    res.check(validate_extension(data).ok, "data validates")
    H = build_hopf(data)
    _, a, b = k8n_generators(data)
    res.check(eta(data)(a, b) == 1, "eta(a,b) = 1")
    non = enumerate_nontrivial(H)
    res.check(len(non) == 4 and all(verify_quasitriangular(H, R).ok for R in non), f"{len(non)} R' verify")
    Rs = enumerate_all(H)
    orc = solve_all(H, 8)
    res.check(orc.exhaustive and compare(orc, Rs).empty, f"oracle at M=8 matches {len(Rs)} R-matrices")
    res.check(not any(minimality(H, R).minimal for R in Rs), "no R is minimal")
    return res


def criterion_7() -> CriterionResult:
    res = CriterionResult(7, "identity suite on every K(8n) instance with n <= 4")
    for label, data in k8n_instances():
        H = build_hopf(data)
        bad = identity_suite(data)
        res.check(not bad, f"{label}: notation identities" + (f" {bad[:2]}" if bad else ""))
        res.check(dual_presentation_check(H).ok, f"{label}: dual presentation")
        res.check(dual_products(H).ok, f"{label}: dual products")
        lr = [f for R in enumerate_nontrivial(H) for f in lr_symmetries(H, R)]
        res.check(not lr, f"{label}: l/r symmetries")
    return res


def criterion_8() -> CriterionResult:
    res = CriterionResult(8, "Hopf axioms, S^2 = id included, on every catalog instance")
    for label, data in all_instances():
        rep = verify_hopf_axioms(build_hopf(data))
        res.check(rep.ok, f"{label}: {len(rep.checked)} axiom groups" + (f" {rep.failures[:2]}" if rep.failures else ""))
    return res


def criterion_9() -> CriterionResult:
    res = CriterionResult(9, "oracle completeness on K(16, zeta_4)")
    H = build_hopf(k8n_zeta(2))
    Rs = enumerate_all(H)
    triv = enumerate_trivial(H)
    orc = solve_all(H, 16)
    res.check(orc.exhaustive, "oracle run is exhaustive")
    res.check(len(orc.solutions) == 16, f"oracle finds {len(orc.solutions)} (expect 16)")
    res.check(len(triv) == 8 and len(Rs) == 16, f"closed forms give {len(triv)} + {len(Rs) - len(triv)}")
    res.check(compare(orc, Rs).empty, "empty diff")
    return res


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}

SUBSETS = {"k8": (1,), "oracle": (1, 6, 9), "minimal": (4, 5, 6), "all": tuple(CRITERIA)}


def run(numbers=None) -> list[CriterionResult]:
    out = []
    for k in numbers or CRITERIA:
        t = time.perf_counter()
        res = CRITERIA[k]()
        res.seconds = time.perf_counter() - t
        out.append(res)
    return out
