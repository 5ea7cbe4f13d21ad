"""Universal R-matrices of k^G #_{sigma,tau} kZ_2: verification, construction, minimality.

An R-matrix is stored as four sparse blocks over G x G:
    w1(g, h) on e_g (x) e_h,      w2(g, h) on e_g x (x) e_h,
    w3(g, h) on e_g (x) e_h x,    w4(g, h) on e_g x (x) e_h x.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .abgroup import eta, enumerate_bicharacters, obstruction_check, st_partition
from .exact import CycMatrix, CycNum, NoRoot, RowSpace, embed, is_primitive_root, solve_power
from .hopf import HopfAlgebra, NotK8nShape, apply_comult, k8n_generators, tmul

__all__ = [
    "RMatrix",
    "VerifyReport",
    "MinimalityReport",
    "CriterionReport",
    "NotationCache",
    "VerificationFailed",
    "ParameterConstraintViolated",
    "VariantMismatch",
    "AmbientFieldTooSmall",
    "UnsupportedFamily",
    "ConditionViolated",
    "verify_quasitriangular",
    "verify_block_conditions",
    "classify_form",
    "construct_trivial",
    "enumerate_trivial",
    "construct_R_alpha_beta",
    "enumerate_nontrivial",
    "enumerate_all",
    "minimality",
    "minimality_criterion",
    "l_map",
    "r_map",
    "lr_symmetries",
    "identity_suite",
    "perturb",
]


class VerificationFailed(AssertionError):
    pass


class ParameterConstraintViolated(ValueError):
    pass


class VariantMismatch(ValueError):
    pass


class AmbientFieldTooSmall(ValueError):
    pass


class UnsupportedFamily(ValueError):
    pass


class ConditionViolated(ValueError):
    """A bicharacter breaks w(g<|x, h<|x) = w(g, h) eta(g, h); args[0] is the pair."""


class RMatrix:
    """Element of H (x) H in block form; blocks are dicts {(g, h): nonzero CycNum}."""

    def __init__(self, H: HopfAlgebra, blocks):
        self.H = H
        self.w = tuple({k: v for k, v in b.items() if v} for b in blocks)
        if len(self.w) != 4:
            raise ValueError("an R-matrix has four blocks")
        self._key = None

    @classmethod
    def from_tensor(cls, H: HopfAlgebra, t: dict) -> RMatrix:
        N = H.n_group
        blocks = ({}, {}, {}, {})
        for (i, j), c in t.items():
            blk = (i >= N) + 2 * (j >= N)
            blocks[blk][(i % N, j % N)] = c
        return cls(H, blocks)

    def tensor(self) -> dict:
        N = self.H.n_group
        out = {}
        for blk, (di, dj) in enumerate([(0, 0), (N, 0), (0, N), (N, N)]):
            for (g, h), c in self.w[blk].items():
                out[(g + di, h + dj)] = c
        return out

    def get(self, blk: int, g: int, h: int) -> CycNum:
        """blk in 1..4."""
        return self.w[blk - 1].get((g, h), self.H.zero)

    def key(self):
        if self._key is None:
            N = self.H.n_group
            phi = len(self.H.zero.coeffs)
            stream = []
            for b in self.w:
                for g in range(N):
                    for h in range(N):
                        v = b.get((g, h))
                        dense = [0] * phi
                        if v is not None:
                            for e, c in v.terms:
                                dense[e] = c
                        stream.extend(dense)
            self._key = tuple(stream)
        return self._key

    def __eq__(self, other):
        return isinstance(other, RMatrix) and self.w == other.w

    def __hash__(self):
        return hash(tuple(tuple(sorted(b.items())) for b in self.w))

    def __lt__(self, other):
        return self.key() < other.key()

    def embed(self, order: int) -> RMatrix:
        return RMatrix(self.H, [{k: embed(v, order) for k, v in b.items()} for b in self.w])

    def to_json(self) -> dict:
        G = self.H.group
        out = {}
        for i, b in enumerate(self.w, start=1):
            out[f"w{i}"] = {f"{G.label(g)}|{G.label(h)}": b[(g, h)].to_json() for (g, h) in sorted(b)}
        return out

    @classmethod
    def from_json(cls, H: HopfAlgebra, obj: dict) -> RMatrix:
        G = H.group
        blocks = []
        for i in range(1, 5):
            b = {}
            for k, v in obj[f"w{i}"].items():
                left, right = k.split("|")
                b[(G.parse(left), G.parse(right))] = embed(CycNum.from_json(v), H.order)
            blocks.append(b)
        return cls(H, blocks)

    def __repr__(self):
        return "RMatrix(%s)" % ", ".join(f"w{i + 1}:{len(b)}" for i, b in enumerate(self.w))


def sort_unique(Rs) -> list[RMatrix]:
    return sorted(set(Rs), key=RMatrix.key)


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerifyReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, name, witness):
        self.failures.append((name, witness))


def _put(out, key, v):
    w = out.get(key)
    w = v if w is None else w + v
    if w:
        out[key] = w
    else:
        out.pop(key, None)


def _by_slot(R: dict, slot: int) -> dict:
    out = {}
    for (i, j), c in R.items():
        out.setdefault((i, j)[slot], []).append(((i, j)[1 - slot], c))
    return out


def r13_r23(H: HopfAlgebra, R: dict) -> dict:
    # sum r(i,j) r(k,l) b_i (x) b_k (x) b_j b_l
    by_second = _by_slot(R, 1)
    out = {}
    for (k, l), c2 in R.items():
        for j, m, d in H._left[l]:
            for i, c1 in by_second.get(j, ()):
                _put(out, (i, k, m), c1 * c2 * d)
    return out


def r13_r12(H: HopfAlgebra, R: dict) -> dict:
    # sum r(i,j) r(k,l) b_i b_k (x) b_l (x) b_j
    by_first = _by_slot(R, 0)
    out = {}
    for (k, l), c2 in R.items():
        for i, m, d in H._left[k]:
            for j, c1 in by_first.get(i, ()):
                _put(out, (m, l, j), c1 * c2 * d)
    return out


def _first_diff(x: dict, y: dict):
    for k in sorted(set(x) | set(y)):
        if x.get(k) != y.get(k):
            return k
    return None


def is_invertible(H: HopfAlgebra, R: dict) -> bool:
    """Rank of left multiplication by R on H (x) H equals dim^2."""
    space = RowSpace()
    d = H.dim
    by_first = _by_slot(R, 0)
    flat = lambda i, j: i * d + j
    for p in range(d):
        for q in range(d):
            img = {}
            for i, m1, c1 in H._left[p]:
                for j, c in by_first.get(i, ()):
                    for k2, c2 in H.mult[j][q]:
                        _put(img, flat(m1, k2), c * c1 * c2)
            if not space.add(img):
                return False
    return space.rank == d * d


def verify_quasitriangular(H: HopfAlgebra, R: RMatrix | dict, stop_early: bool = False) -> VerifyReport:
    """Invertibility, both hexagon equations and the intertwiner equation for every basis element."""
    t = R.tensor() if isinstance(R, RMatrix) else R
    rep = VerifyReport()
    lab = H.labels
    name = lambda key: " (x) ".join(lab[i] for i in key)

    lhs = apply_comult(H, t, 0)
    k = _first_diff(lhs, r13_r23(H, t))
    if k is not None:
        rep.fail("(Delta x id)R = R13 R23", name(k))
        if stop_early:
            return rep
    lhs = apply_comult(H, t, 1)
    k = _first_diff(lhs, r13_r12(H, t))
    if k is not None:
        rep.fail("(id x Delta)R = R13 R12", name(k))
        if stop_early:
            return rep
    for h in range(H.dim):
        D = apply_comult(H, {(h,): H.one}, 0)
        Dop = {(j, i): c for (i, j), c in D.items()}
        k = _first_diff(tmul(H, Dop, t), tmul(H, t, D))
        if k is not None:
            rep.fail("Delta^op(h) R = R Delta(h)", f"h={lab[h]} at {name(k)}")
            if stop_early:
                return rep
    if not is_invertible(H, t):
        rep.fail("invertible", None)
    return rep


def l_map(H: HopfAlgebra, R: RMatrix, f: dict) -> dict:
    """l(f) = (f (x) id)(R) for f given in dual-basis coordinates."""
    out = {}
    for (i, j), c in R.tensor().items():
        if i in f:
            _put(out, (j,), f[i] * c)
    return out


def r_map(H: HopfAlgebra, R: RMatrix, f: dict) -> dict:
    """r(f) = (id (x) f)(R)."""
    out = {}
    for (i, j), c in R.tensor().items():
        if j in f:
            _put(out, (i,), f[j] * c)
    return out


def _lr_tables(H, R):
    t = R.tensor()
    L = [dict() for _ in range(H.dim)]
    Rr = [dict() for _ in range(H.dim)]
    for (i, j), c in t.items():
        L[i][(j,)] = c
        Rr[j][(i,)] = c
    return L, Rr


def _combine(H, rows, f):
    out = {}
    for k, c in f.items():
        for key, v in rows[k].items():
            _put(out, key, c * v)
    return out


def classify_form(R: RMatrix) -> str:
    H = R.H
    part = st_partition(H.data)
    S, T = set(part.S), set(part.T)
    w1, w2, w3, w4 = R.w
    if not w2 and not w3 and not w4:
        return "Trivial"
    inside = lambda blk, A, B: all(g in A and h in B for (g, h) in blk)
    if (
        inside(w1, S, S)
        and inside(w2, S, T)
        and inside(w3, T, S)
        and inside(w4, T, T)
        and len(w4) == len(T) * len(T)
    ):
        return "NonTrivial"
    return "Neither"


def verify_block_conditions(H: HopfAlgebra, R: RMatrix) -> VerifyReport:
    """The five-condition criterion for R in the nontrivial block form on K(8n) data."""
    k8n_generators(H.data)
    data = H.data
    G, act, t = data.group, data.act, data.tau
    et = eta(data)
    part = st_partition(data)
    S, T = part.S, part.T
    rep = VerifyReport()
    lab = G.label
    if classify_form(R) != "NonTrivial":
        rep.fail("form", classify_form(R))
        return rep
    for s1 in S:
        for s2 in S:
            if t[s1][s2] != t[s2][s1]:
                rep.fail("tau_symmetric_on_S", (lab(s1), lab(s2)))
    for s in S:
        for u in T:
            if R.get(2, s, act(u)) != R.get(2, s, u) * et(s, u):
                rep.fail("w2_twist", (lab(s), lab(u)))
            if R.get(3, act(u), s) != R.get(3, u, s) * et(u, s):
                rep.fail("w3_twist", (lab(u), lab(s)))
    for t1 in T:
        for t2 in T:
            if t[t2][t1] * R.get(4, act(t1), act(t2)) != t[act(t1)][act(t2)] * R.get(4, t1, t2):
                rep.fail("w4_twist", (lab(t1), lab(t2)))
    L, Rr = _lr_tables(H, R)
    D = H.dual_mult
    for p in range(H.dim):
        for q in range(H.dim):
            prod_ = D[p][q]
            if _combine(H, L, prod_) != tmul(H, L[p], L[q]):
                rep.fail("l_multiplicative", (H.labels[p], H.labels[q]))
                return rep
            if _combine(H, Rr, prod_) != tmul(H, Rr[q], Rr[p]):
                rep.fail("r_antimultiplicative", (H.labels[p], H.labels[q]))
                return rep
    return rep


def perturb(R: RMatrix, rng: random.Random) -> RMatrix:
    """Multiply one random nonzero entry by a random root of unity other than 1."""
    M = R.H.order
    entries = [(b, k) for b in range(4) for k in sorted(R.w[b])]
    b, k = rng.choice(entries)
    blocks = [dict(x) for x in R.w]
    blocks[b][k] = blocks[b][k] * CycNum.zeta(M, rng.randrange(1, M))
    return RMatrix(R.H, blocks)


# ---------------------------------------------------------------------------
# trivial form


def _condition_ii(H: HopfAlgebra, w):
    act = H.data.act
    et = eta(H.data)
    N = H.n_group
    for g in range(N):
        for h in range(N):
            if w(act(g), act(h)) != w(g, h) * et(g, h):
                return (g, h)
    return None


def construct_trivial(H: HopfAlgebra, w) -> RMatrix:
    """R = sum w(g, h) e_g (x) e_h for a bicharacter w with w(g<|x, h<|x) = w(g, h) eta(g, h).

    Raises ConditionViolated with the first failing pair otherwise.
    """
    bad = _condition_ii(H, w)
    if bad is not None:
        G = H.group
        raise ConditionViolated((G.label(bad[0]), G.label(bad[1])))
    N = H.n_group
    R = RMatrix(H, [{(g, h): w(g, h) for g in range(N) for h in range(N)}, {}, {}, {}])
    rep = verify_quasitriangular(H, R)
    if not rep.ok:
        raise VerificationFailed(f"trivial-form R failed {rep.failures[0]}")
    return R


def enumerate_trivial(H: HopfAlgebra) -> list[RMatrix]:
    out = []
    for w in enumerate_bicharacters(H.group, H.order):
        try:
            out.append(construct_trivial(H, w))
        except ConditionViolated:
            continue
    return sort_unique(out)


# ---------------------------------------------------------------------------
# K(8n) notation and the nontrivial families


class NotationCache:
    """P_i, lambda_{i,j}, h(t1, t2) and the seeds S_{j,0}, S_{j,1} for K(8n) data."""

    def __init__(self, data, alpha: CycNum | None = None, beta: CycNum | None = None):
        n, a, b = k8n_generators(data)
        self.data, self.n, self.a, self.b = data, n, a, b
        G = data.group
        self.G = G
        M = data.order
        t = data.tau
        one = CycNum.one(M)
        P = [one, one]
        for i in range(2, 2 * n + 1):
            P.append(P[-1] * t[a][G.power(a, i - 1)])
        self.P = P
        self.alpha = None if alpha is None else embed(alpha, M)
        self.beta = None if beta is None else embed(beta, M)

    def A(self, i: int, j: int = 0) -> int:
        """a^i b^j."""
        return self.G.element(i, j)

    def sigma(self, g: int) -> CycNum:
        return self.data.sigma[g]

    def tau(self, g: int, h: int) -> CycNum:
        return self.data.tau[g][h]

    def lam(self, m: int, j: int) -> CycNum:
        """lambda_{m,j} = P_m^-1 sigma(a^j)^(m // 2)."""
        return self.P[m].inv() * self.sigma(self.A(j)) ** (m // 2)

    def h(self, t1: int, t2: int) -> CycNum:
        act = self.data.act
        return self.tau(t1, t2) / self.tau(act(t2), act(t1))

    def S0(self, j: int) -> CycNum:
        return self.lam(2 * j + 1, 1) * self.alpha ** (j + 1) * self.beta**j

    def S1(self, j: int) -> CycNum:
        return self.h(self.a, self.A(2 * j + 1, 1)) * self.lam(2 * j + 1, 1) * self.alpha**j * self.beta ** (j + 1)


def _check_params(nc: NotationCache):
    a, b, n = nc.a, nc.b, nc.n
    al, be = nc.alpha, nc.beta
    if not al or not be:
        raise ParameterConstraintViolated("alpha and beta must be nonzero")
    if (al * be) ** n * nc.lam(2 * n, 1) != 1:
        raise ParameterConstraintViolated("(alpha beta)^n lambda_{2n,1} != 1")
    if be * be / (al * al) != nc.tau(b, b) / nc.tau(b, a) ** 2:
        raise ParameterConstraintViolated("beta^2/alpha^2 != tau(b,b)/tau(b,a)^2")


def construct_R_alpha_beta(H: HopfAlgebra, alpha: CycNum, beta: CycNum, variant: int | None = None) -> RMatrix:
    """Fill the four blocks from the closed-form tables and verify the result.

    variant is eta(a, b) = -1 or +1; the +1 tables drop every sign in w1, w2, w3.
    """
    nc = NotationCache(H.data, alpha, beta)
    n, a, b, A = nc.n, nc.a, nc.b, nc.A
    e_ab = eta(H.data)(a, b)
    actual = -1 if e_ab == -1 else 1
    if variant is None:
        variant = actual
    if variant != actual:
        raise VariantMismatch(f"eta(a,b) = {actual}, tables for {variant} requested")
    _check_params(nc)
    al, be = nc.alpha, nc.beta
    sgn = -1 if variant == -1 else 1
    w1, w2, w3, w4 = {}, {}, {}, {}
    ratio = lambda k: nc.tau(b, a) * be / (nc.tau(b, A(k)) * al)
    for i in range(n):
        for j in range(n):
            v = nc.lam(2 * j, 1) ** (2 * i) * (al * be) ** (2 * i * j) * nc.sigma(A(2 * j)) ** i
            w1[(A(2 * i), A(2 * j))] = v
            w1[(A(2 * i, 1), A(2 * j))] = v
            w1[(A(2 * i), A(2 * j, 1))] = v
            w1[(A(2 * i, 1), A(2 * j, 1))] = sgn * v

            base = nc.lam(2 * i, 2 * j + 1) * (nc.S0(j) * nc.S1(j)) ** i
            w2[(A(2 * i), A(2 * j + 1))] = base
            w2[(A(2 * i), A(2 * j + 1, 1))] = base
            w2[(A(2 * i, 1), A(2 * j + 1))] = ratio(2 * i) * base
            w2[(A(2 * i, 1), A(2 * j + 1, 1))] = sgn * ratio(2 * i) * base

            base = nc.lam(2 * j, 2 * i + 1) * (nc.S0(i) * nc.S1(i)) ** j
            w3[(A(2 * i + 1), A(2 * j))] = base
            w3[(A(2 * i + 1, 1), A(2 * j))] = base
            w3[(A(2 * i + 1), A(2 * j, 1))] = sgn * ratio(2 * j) * base
            w3[(A(2 * i + 1, 1), A(2 * j, 1))] = ratio(2 * j) * base

            lam4 = nc.lam(2 * i + 1, 2 * j + 1)
            s0, s1 = nc.S0(j), nc.S1(j)
            w4[(A(2 * i + 1), A(2 * j + 1))] = lam4 * s0 ** (i + 1) * s1**i
            w4[(A(2 * i + 1), A(2 * j + 1, 1))] = lam4 * s0**i * s1 ** (i + 1)
            t1, t2 = A(2 * i + 1, 1), A(2 * j + 1)
            w4[(t1, t2)] = nc.h(t1, t2) * lam4 * s0**i * s1 ** (i + 1)
            t2 = A(2 * j + 1, 1)
            w4[(t1, t2)] = nc.h(t1, t2) * lam4 * s0 ** (i + 1) * s1**i
    R = RMatrix(H, [w1, w2, w3, w4])
    rep = verify_quasitriangular(H, R)
    if not rep.ok:
        raise VerificationFailed(f"R_(alpha,beta) failed {rep.failures[0]}")
    return R


def nontrivial_parameters(data) -> list[tuple[CycNum, CycNum]]:
    """All (alpha, beta) in Q(z_M) with (alpha beta)^n lambda_{2n,1} = 1 and beta^2/alpha^2 = tau(b,b)/tau(b,a)^2."""
    nc = NotationCache(data)
    n, a, b = nc.n, nc.a, nc.b
    c = nc.tau(b, b) / nc.tau(b, a) ** 2
    out = []
    try:
        for u in solve_power(nc.lam(2 * n, 1).inv(), n):  # u = alpha beta
            for al in solve_power(u * u / c, 4):
                out.append((al, u / al))
    except NoRoot as exc:
        raise AmbientFieldTooSmall(str(exc)) from exc
    if not out:
        raise AmbientFieldTooSmall(f"no (alpha, beta) in Q(z_{data.order})")
    return out


def enumerate_nontrivial(H: HopfAlgebra) -> list[RMatrix]:
    return sort_unique(construct_R_alpha_beta(H, al, be) for al, be in nontrivial_parameters(H.data))


def _is_k8n(data) -> bool:
    try:
        k8n_generators(data)
        return True
    except NotK8nShape:
        return False


def enumerate_all(H: HopfAlgebra) -> list[RMatrix]:
    """Trivial family plus, for K(8n) data, the nontrivial family.

    Data that is not K(8n)-shaped is supported only when nontrivial R-matrices
    are ruled out by the necessary conditions.
    """
    out = enumerate_trivial(H)
    if _is_k8n(H.data):
        out += enumerate_nontrivial(H)
    elif obstruction_check(H.data).possible:
        raise UnsupportedFamily("nontrivial R-matrices are possible but no closed form is known; use the oracle")
    return sort_unique(out)


# ---------------------------------------------------------------------------
# minimality


@dataclass
class MinimalityReport:
    span_dim: int
    dim: int
    form: str
    block_ranks: tuple | None = None
    gamma: CycNum | None = None
    gamma_primitive: bool | None = None
    omega_witnesses: list = field(default_factory=list)
    consistent: bool = True

    @property
    def minimal(self) -> bool:
        return self.span_dim == self.dim

    @property
    def verdict(self) -> str:
        return "minimal" if self.minimal else "not minimal"


def interleaved_order(data):
    """s_j = a^(2j-2), s_(n+j) = a^(2j-2) b and t_j = a^(2j-1), t_(n+j) = a^(2j-1) b."""
    n, a, b = k8n_generators(data)
    G = data.group
    S = [G.element(2 * j, 0) for j in range(n)] + [G.element(2 * j, 1) for j in range(n)]
    T = [G.element(2 * j + 1, 0) for j in range(n)] + [G.element(2 * j + 1, 1) for j in range(n)]
    return S, T


def block_matrices(R: RMatrix):
    S, T = interleaved_order(R.H.data)
    rows = lambda blk, X, Y: CycMatrix([[R.get(blk, x, y) for y in Y] for x in X])
    return rows(1, S, S), rows(2, S, T), rows(3, T, S), rows(4, T, T)


def span_dim(H: HopfAlgebra, R: RMatrix) -> int:
    """dim of H_l H_r, spanned by the products l(f) r(g) over dual-basis pairs.

    Products are only formed for l(f), r(g) from independent subsets of the
    images; by bilinearity this spans the same space.
    """
    L, Rr = _lr_tables(H, R)
    pick = []
    for vecs in (L, Rr):
        sp, keep = RowSpace(), []
        for v in vecs:
            if sp.add({k[0]: c for k, c in v.items()}):
                keep.append(v)
        pick.append(keep)
    space = RowSpace()
    for u in pick[0]:
        for v in pick[1]:
            space.add({k[0]: c for k, c in tmul(H, u, v).items()})
            if space.rank == H.dim:
                return H.dim
    return space.rank


def minimality(H: HopfAlgebra, R: RMatrix) -> MinimalityReport:
    form = classify_form(R)
    rep = MinimalityReport(span_dim(H, R), H.dim, form)
    if form == "Trivial":
        rep.consistent = not rep.minimal
        return rep
    if form == "NonTrivial" and _is_k8n(H.data):
        n, a, b = k8n_generators(H.data)
        G = H.group
        blocks = block_matrices(R)
        rep.block_ranks = tuple(m.rank() for m in blocks)
        full = all(r == 2 * n for r in rep.block_ranks)
        al, be = R.get(4, a, a), R.get(4, a, G.mul[a][b])
        s, t = H.data.sigma, H.data.tau
        omega = s[a] * al * be
        rep.gamma = omega**2 * s[G.power(a, 2)] / t[a][a] ** 2
        rep.gamma_primitive = is_primitive_root(rep.gamma, n)
        if rep.gamma_primitive:
            rep.omega_witnesses = [omega]
        if eta(H.data)(a, b) == -1:
            rep.consistent = rep.minimal == full == rep.gamma_primitive
        else:
            rep.consistent = rep.minimal == full
    return rep


@dataclass
class CriterionReport:
    eta_ab: int
    verdict: str
    omegas: list = field(default_factory=list)
    criterion_values: list = field(default_factory=list)
    omega_witnesses: list = field(default_factory=list)
    minimal_set: list = field(default_factory=list)

    @property
    def minimal(self) -> bool:
        return self.verdict == "minimal"


def minimality_criterion(H: HopfAlgebra) -> CriterionReport:
    """Algebra-level decision from omega^n = P_2n and omega^2 sigma(a^2) tau(a,a)^-2 primitive."""
    nc = NotationCache(H.data)
    n, a = nc.n, nc.a
    e_ab = -1 if eta(H.data)(a, nc.b) == -1 else 1
    if e_ab == 1:
        return CriterionReport(1, "not minimal")
    rep = CriterionReport(-1, "not minimal")
    s_a, s_a2, t_aa = nc.sigma(a), nc.sigma(nc.A(2)), nc.tau(a, a)
    rep.omegas = solve_power(nc.P[2 * n], n)
    for om in rep.omegas:
        val = om * om * s_a2 / t_aa**2
        rep.criterion_values.append(val)
        if is_primitive_root(val, n):
            rep.omega_witnesses.append(om)
    if rep.omega_witnesses:
        rep.verdict = "minimal"
        Rs = []
        for om in rep.omega_witnesses:
            for al in solve_power(-om * om * t_aa**2 / s_a2, 4):
                Rs.append(construct_R_alpha_beta(H, al, om / (s_a * al)))
        rep.minimal_set = sort_unique(Rs)
    return rep


# ---------------------------------------------------------------------------
# identity suite


def lr_symmetries(H: HopfAlgebra, R: RMatrix) -> list:
    """l(X_t) = r(X_t), l(E_t) = r(E_(t<|x)), l(E_s) = r(E_s); returns the failures."""
    part = st_partition(H.data)
    N, act = H.n_group, H.data.act
    L, Rr = _lr_tables(H, R)
    bad = []
    for u in part.T:
        if L[N + u] != Rr[N + u]:
            bad.append(("l(X_t)=r(X_t)", u))
        if L[u] != Rr[act(u)]:
            bad.append(("l(E_t)=r(E_t<|x)", u))
    for s in part.S:
        if L[s] != Rr[s]:
            bad.append(("l(E_s)=r(E_s)", s))
    return bad


def identity_suite(data) -> list:
    """The P/lambda/h identities on K(8n) data; returns the failures."""
    nc = NotationCache(data)
    n, a, b, A = nc.n, nc.a, nc.b, nc.A
    P, s, t = nc.P, nc.sigma, nc.tau
    e_ab = eta(data)(a, b)
    part = st_partition(data)
    act = data.act
    bad = []
    if s(b).inv() != t(b, b):
        bad.append(("sigma(b)^-1 = tau(b,b)", None))
    for i in range(n):
        for j in range(n):
            if P[2 * j] ** (2 * i) / P[2 * i] ** (2 * j) != s(A(2 * j)) ** i / s(A(2 * i)) ** j:
                bad.append(("P_even_even", (i, j)))
            lhs = P[2 * i + 1] ** (2 * j) * s(a) ** j * s(A(2 * j)) ** i
            rhs = P[2 * j] ** (2 * i) * s(A(2 * i + 1)) ** j * (t(b, a) / t(b, A(2 * i + 1))) ** j
            if lhs != rhs:
                bad.append(("P_odd_even", (i, j)))
            lhs = P[2 * i + 1] ** (2 * j) * (s(A(2 * j + 1)) / s(a)) ** i * (t(b, a) / t(b, A(2 * j + 1))) ** i
            rhs = P[2 * j + 1] ** (2 * i) * (s(A(2 * i + 1)) / s(a)) ** j * (t(b, a) / t(b, A(2 * i + 1))) ** j
            if lhs != rhs:
                bad.append(("P_odd_odd", (i, j)))
    for t1 in part.T:
        for t2 in part.T:
            if nc.h(t1, t2) * nc.h(act(t1), act(t2)) != 1 or nc.h(t1, t2) != nc.h(t2, t1):
                bad.append(("h_symmetric", (t1, t2)))
    if e_ab == -1:
        for i in range(n):
            if nc.h(a, A(2 * i + 1, 1)) != t(b, a) / t(b, A(2 * i + 1)):
                bad.append(("h_a_odd", i))
    return bad
