"""Brute-force enumeration of every universal R-matrix of a small H over Q(z_M).

No closed form is used.  The search runs in three stages:

1. Linear stage.  The intertwiner equations Delta^op(h) R = R Delta(h) for
   h in {e_g} and x are linear in the 4|G|^2 coefficients of R.  Their exact
   nullspace is computed; every coefficient turns out to be a fixed multiple of
   a single free parameter (or zero).
2. Zero/unit search.  The two hexagon equations, together with
   R (S x id)(R) = 1 (x) 1 = (S x id)(R) R (which every R-matrix satisfies), are
   polynomial in the parameters.  Each parameter is decided to be zero or
   nonzero by propagation plus branching, T x T (fourth block) parameters first.
3. Binomial stage.  Once every parameter is decided, each equation must have
   two surviving terms c m1 + d m2 = 0, i.e. a Laurent monomial equal to a
   constant.  Taking exponents over the roots of unity turns this into an
   integer system mod M, which is triangularized and solved one x^k = c at a time.

Every candidate is then passed through verify_quasitriangular.  Completeness is
relative to Q(z_M); the result is flagged non-exhaustive whenever a step above
could not be carried out in full.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import lcm

from .abgroup import ExtensionData, obstruction_check
from .exact import CycNum, RowSpace, embed, restrict, solve_power
from .hopf import HopfAlgebra, apply_comult, tmul
from .rmatrix import AmbientFieldTooSmall, RMatrix, _is_k8n, sort_unique, verify_quasitriangular

__all__ = [
    "LinearStage",
    "OracleResult",
    "DiffReport",
    "NonBinomialEquation",
    "DimensionCapExceeded",
    "solve_linear_stage",
    "solve_all",
    "compare",
    "dim_cap",
]

DEFAULT_DIM_CAP = 16


class NonBinomialEquation(ValueError):
    """A polynomial constraint kept three or more terms after all parameters were decided."""


class DimensionCapExceeded(ValueError):
    pass


def dim_cap() -> int:
    return int(os.environ.get("HQT_DIM_CAP", DEFAULT_DIM_CAP))


# ---------------------------------------------------------------------------
# linear stage


@dataclass
class LinearStage:
    """Solution space of the intertwiner equations.

    param_of[(i, j)] = (p, c) means r(b_i (x) b_j) = c * p_p; keys missing from
    param_of are forced to zero.  basis[p] is the space's p-th basis vector.
    """

    H: HopfAlgebra
    params: int
    param_of: dict
    monomial: bool = True

    @property
    def basis(self) -> list[dict]:
        out = [{} for _ in range(self.params)]
        for key, (p, c) in self.param_of.items():
            out[p][key] = c
        return out

    def support(self) -> set:
        return set(self.param_of)

    def keys_of(self, p: int) -> list:
        return [k for k, (q, _) in self.param_of.items() if q == p]

    def in_tt_block(self, p: int) -> bool:
        """True when p feeds e_g x (x) e_h x entries with g and h both moved by the action."""
        N = self.H.n_group
        act = self.H.data.act
        return any(
            i >= N and j >= N and act(i - N) != i - N and act(j - N) != j - N for i, j in self.keys_of(p)
        )


def _generators(H: HopfAlgebra):
    N = H.n_group
    gens = [{(g,): H.one} for g in range(N)]
    gens.append(H.x())
    return gens


def solve_linear_stage(H: HopfAlgebra) -> LinearStage:
    d = H.dim
    col = lambda i, j: i * d + j
    rows = {}
    for gi, h in enumerate(_generators(H)):
        D = apply_comult(H, h, 0)
        Dop = {(j, i): c for (i, j), c in D.items()}
        for i in range(d):
            for j in range(d):
                unit = {(i, j): H.one}
                left = tmul(H, Dop, unit)
                for key, c in left.items():
                    rows.setdefault((gi, key), {})[col(i, j)] = c
                for key, c in tmul(H, unit, D).items():
                    row = rows.setdefault((gi, key), {})
                    v = row.get(col(i, j), H.zero) - c
                    if v:
                        row[col(i, j)] = v
                    else:
                        row.pop(col(i, j), None)
    space = RowSpace()
    for key in sorted(rows):
        space.add(rows[key])
    piv = space.pivots
    # full back-reduction: a pivot row only refers to larger columns
    for p in sorted(piv, reverse=True):
        row = piv[p]
        for c in sorted(k for k in row if k != p and k in piv):
            f = row.get(c)
            if not f:
                continue
            for k, v in piv[c].items():
                new = row.get(k, H.zero) - f * v
                if new:
                    row[k] = new
                else:
                    row.pop(k, None)
    free = [c for c in range(d * d) if c not in piv]
    index = {c: n for n, c in enumerate(free)}
    param_of = {}
    monomial = True
    for c in free:
        param_of[divmod(c, d)] = (index[c], H.one)
    for p, row in piv.items():
        rest = [(k, v) for k, v in row.items() if k != p]
        if not rest:
            continue
        if len(rest) > 1:
            monomial = False
            continue
        k, v = rest[0]
        param_of[divmod(p, d)] = (index[k], -v)
    stage = LinearStage(H, len(free), param_of, monomial)
    if _is_k8n(H.data):
        _assert_k8n_support(stage)
    return stage


def _assert_k8n_support(stage: LinearStage):
    """Blocks: w2 vanishes on T x G, w3 on G x T, w4 on S x T and T x S."""
    H = stage.H
    N = H.n_group
    act = H.data.act
    moved = lambda g: act(g) != g
    for i, j in stage.param_of:
        g, h = i % N, j % N
        if i >= N and j < N:
            assert not moved(g), f"w2 support at moved point {H.labels[i]}"
        if i < N and j >= N:
            assert not moved(h), f"w3 support at moved point {H.labels[j]}"
        if i >= N and j >= N:
            assert moved(g) == moved(h), f"w4 support mixes S and T at {H.labels[i]}, {H.labels[j]}"


# ---------------------------------------------------------------------------
# polynomial system


def _padd(poly: dict, key, mono, c):
    eq = poly.setdefault(key, {})
    v = eq.get(mono)
    v = c if v is None else v + c
    if v:
        eq[mono] = v
    else:
        eq.pop(mono, None)


def _mono(*ps):
    return tuple(sorted(ps))


def _system(H: HopfAlgebra, stage: LinearStage) -> list[tuple]:
    """All polynomial equations as tuples of (monomial, coefficient) terms."""
    P = stage.param_of
    polys = []

    # (Delta x id) R - R13 R23 and (id x Delta) R - R13 R12
    h1, h2 = {}, {}
    for (i, j), (p, c) in P.items():
        for (a, b), d in H.comult[i]:
            _padd(h1, (a, b, j), (p,), c * d)
        for (a, b), d in H.comult[j]:
            _padd(h2, (i, a, b), (p,), c * d)
    by_second, by_first = {}, {}
    for (i, j), v in P.items():
        by_second.setdefault(j, []).append((i, v))
        by_first.setdefault(i, []).append((j, v))
    for (k, l), (q, c2) in P.items():
        for j, m, d in H._left[l]:
            for i, (p, c1) in by_second.get(j, ()):
                _padd(h1, (i, k, m), _mono(p, q), -(c1 * c2 * d))
        for i, m, d in H._left[k]:
            for j, (p, c1) in by_first.get(i, ()):
                _padd(h2, (m, l, j), _mono(p, q), -(c1 * c2 * d))
    polys += [h1, h2]

    # R (S x id)R = 1 (x) 1 and (S x id)R R = 1 (x) 1
    Sr = {}
    for (i, j), (p, c) in P.items():
        for k, s in H.antipode[i]:
            Sr[(k, j)] = (p, c * s)
    for left, right in ((P, Sr), (Sr, P)):
        poly = {}
        rb = {}
        for (k, l), v in right.items():
            rb.setdefault(k, []).append((l, v))
        for (i, j), (p, c1) in left.items():
            for k, m1, d1 in H._right[i]:
                for l, (q, c2) in rb.get(k, ()):
                    for m2, d2 in H.mult[j][l]:
                        _padd(poly, (m1, m2), _mono(p, q), c1 * c2 * d1 * d2)
        for g in range(H.n_group):
            for h in range(H.n_group):
                _padd(poly, (g, h), (), -H.one)
        polys.append(poly)

    seen = set()
    out = []
    for poly in polys:
        for key in sorted(poly):
            eq = tuple(sorted(poly[key].items()))
            if eq and eq not in seen:
                seen.add(eq)
                out.append(eq)
    return out


# ---------------------------------------------------------------------------
# zero/unit search

ZERO, UNIT = 0, 1


class _Conflict(Exception):
    pass


def _propagate(eqs, occ, vals, queue):
    while queue:
        e = queue.pop()
        alive = [t for t in eqs[e] if all(vals[p] != ZERO for p in t[0])]
        if not alive:
            continue
        known = [all(vals[p] == UNIT for p in t[0]) for t in alive]
        forced = None
        if len(alive) == 1:
            if known[0]:
                raise _Conflict(e)
            unk = {p for p in alive[0][0] if vals[p] is None}
            if len(unk) == 1:
                forced = (unk, ZERO)
        elif len(alive) == 2 and any(known):
            other = alive[1] if known[0] else alive[0]
            unk = {p for p in other[0] if vals[p] is None}
            if unk:
                forced = (unk, UNIT)
        if forced:
            for p in forced[0]:
                vals[p] = forced[1]
                queue.extend(occ[p])


@dataclass
class _Leaf:
    vals: list
    binomials: list


def _search(eqs, nparams, order):
    occ = [[] for _ in range(nparams)]
    for e, eq in enumerate(eqs):
        for p in {p for mono, _ in eq for p in mono}:
            occ[p].append(e)
    leaves = []

    def rec(vals, queue):
        try:
            _propagate(eqs, occ, vals, queue)
        except _Conflict:
            return
        p = next((q for q in order if vals[q] is None), None)
        if p is None:
            leaves.append(list(vals))
            return
        for choice in (ZERO, UNIT):
            nv = list(vals)
            nv[p] = choice
            rec(nv, list(occ[p]))

    rec([None] * nparams, list(range(len(eqs))))
    return leaves


# ---------------------------------------------------------------------------
# binomial stage


def _hermite(rows, ncols, M):
    """Integer row reduction of [A | e] to echelon form; returns (pivot rows, consistent)."""
    rows = [list(r) for r in rows]
    out = []
    for c in range(ncols):
        live = [r for r in rows if r[c]]
        rest = [r for r in rows if not r[c]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[c] // piv[c]
                r = [a - q * b for a, b in zip(r, piv)]
                r[-1] %= M
                (nxt if r[c] else rest).append(r)
            live = nxt
        if live:
            piv = live[0]
            if piv[c] < 0:
                piv = [-a for a in piv]
                piv[-1] %= M
            out.append((c, piv))
        rows = rest
    consistent = all(r[-1] % M == 0 for r in rows)
    return out, consistent


def _solve_binomials(binoms, units, M):
    """All exponent vectors y (x_p = z_M^y_p) solving every binomial; None if not determined."""
    pos = {p: n for n, p in enumerate(units)}
    m = len(units)
    rows = []
    issues = []
    for (m1, c1), (m2, c2) in binoms:
        K = -(c2 / c1)
        e = K.log()
        if e is None:
            issues.append(("constant_not_root_of_unity", repr(K)))
            continue
        a = [0] * (m + 1)
        for p in m1:
            a[pos[p]] += 1
        for p in m2:
            a[pos[p]] -= 1
        a[-1] = e
        rows.append(a)
    piv, consistent = _hermite(rows, m, M)
    if not consistent:
        return [], issues
    if len(piv) < m:
        issues.append(("free_parameter", m - len(piv)))
        return [], issues
    sols = [[0] * m]
    for c, row in reversed(piv):
        nxt = []
        for y in sols:
            rhs = row[-1] - sum(row[j] * y[j] for j in range(c + 1, m))
            for x in solve_power(CycNum.zeta(M, rhs), row[c]):
                z = list(y)
                z[c] = x.log()
                nxt.append(z)
        sols = nxt
    return sols, issues


# ---------------------------------------------------------------------------
# driver


@dataclass
class OracleResult:
    solutions: list
    ambient_order: int
    exhaustive: bool
    issues: list = field(default_factory=list)
    branches: int = 0
    rejected: int = 0

    def to_json(self) -> dict:
        return {
            "ambient_order": self.ambient_order,
            "exhaustive": self.exhaustive,
            "solutions": [R.to_json() for R in self.solutions],
        }


def _retarget(data: ExtensionData, M: int) -> ExtensionData:
    def move(v):
        if M % v.order == 0:
            return embed(v, M)
        try:
            return restrict(v, M)
        except ValueError as exc:
            raise AmbientFieldTooSmall(f"extension data does not lie in Q(z_{M})") from exc

    sigma = tuple(move(v) for v in data.sigma)
    tau = tuple(tuple(move(v) for v in r) for r in data.tau)
    return ExtensionData(data.group, data.action, sigma, tau, M)


def _allowed(H: HopfAlgebra) -> bool:
    if H.dim <= dim_cap():
        return True
    # a trivial-only instance of dimension 18 stays cheap
    return H.dim <= 18 and not obstruction_check(H.data).possible


def solve_all(H: HopfAlgebra, M: int | None = None) -> OracleResult:
    """Every R-matrix of H with coefficients in Q(z_M); M defaults to H.order."""
    if not _allowed(H):
        raise DimensionCapExceeded(f"dim {H.dim} exceeds the oracle cap {dim_cap()} (HQT_DIM_CAP)")
    M = H.order if M is None else M
    if M % 2:
        M *= 2  # Q(z_M) = Q(z_2M) for odd M
    HM = H if M == H.order else HopfAlgebra(_retarget(H.data, M))

    stage = solve_linear_stage(HM)
    issues = []
    if not stage.monomial:
        issues.append(("linear_stage_not_monomial", None))
    eqs = _system(HM, stage)
    w4 = [p for p in range(stage.params) if stage.in_tt_block(p)]
    order = w4 + [p for p in range(stage.params) if p not in set(w4)]
    leaves = _search(eqs, stage.params, order)

    found = []
    rejected = 0
    for vals in leaves:
        binoms = []
        bad = False
        for eq in eqs:
            alive = [t for t in eq if all(vals[p] == UNIT for p in t[0])]
            if len(alive) == 1:
                bad = True
                break
            if len(alive) == 2:
                binoms.append(tuple(alive))
            elif len(alive) > 2:
                issues.append(("non_binomial", str(NonBinomialEquation(len(alive)))))
                bad = True
                break
        if bad:
            continue
        units = [p for p in range(stage.params) if vals[p] == UNIT]
        sols, extra = _solve_binomials(binoms, units, M)
        issues += extra
        hits = []
        for y in sols:
            value = [HM.zero] * stage.params
            for p, e in zip(units, y):
                value[p] = CycNum.zeta(M, e)
            t = {k: c * value[p] for k, (p, c) in stage.param_of.items() if value[p]}
            R = RMatrix.from_tensor(HM, t)
            if verify_quasitriangular(HM, R, stop_early=True).ok:
                hits.append(R)
            else:
                rejected += 1
        if hits:
            pattern = {vals[p] for p in w4}
            assert len(pattern) <= 1, "fourth block is neither identically zero nor nowhere zero"
        found += hits

    if M != H.order and H.order % M == 0:
        found = [RMatrix(H, [{k: embed(v, H.order) for k, v in b.items()} for b in R.w]) for R in found]
    return OracleResult(sort_unique(found), M, not issues, issues, len(leaves), rejected)


# ---------------------------------------------------------------------------
# comparison


@dataclass
class DiffReport:
    only_oracle: list
    only_constructed: list

    @property
    def empty(self) -> bool:
        return not self.only_oracle and not self.only_constructed

    @property
    def size(self) -> int:
        return len(self.only_oracle) + len(self.only_constructed)


def _canon(R: RMatrix, L: int):
    return tuple(tuple(sorted((k, embed(v, L).terms) for k, v in b.items())) for b in R.w)


def compare(oracle: OracleResult, constructed) -> DiffReport:
    """Symmetric difference of two R-matrix lists, both embedded into one field."""
    constructed = list(constructed)
    L = lcm(*(R.H.order for R in oracle.solutions + constructed), 1)
    a = {_canon(R, L): R for R in oracle.solutions}
    b = {_canon(R, L): R for R in constructed}
    return DiffReport(
        sort_unique(a[k] for k in set(a) - set(b)),
        sort_unique(b[k] for k in set(b) - set(a)),
    )
