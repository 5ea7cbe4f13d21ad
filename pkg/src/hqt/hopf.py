"""The Hopf algebra k^G #_{sigma,tau} kZ_2 as explicit structure constants.

Basis index i < |G| is e_g with g = i; index |G| + g is e_g x.  Every product of
two basis elements is a scalar multiple of one basis element (or zero), so the
tables keep only the nonzero entries; `dense_*` accessors rebuild full grids.

Elements of H, H (x) H and H (x) H (x) H are dicts from index tuples to CycNum.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abgroup import ExtensionData, eta, validate_extension
from .exact import CycNum, RowSpace

__all__ = [
    "HopfAlgebra",
    "InvalidData",
    "DimensionMismatch",
    "NotK8nShape",
    "AxiomReport",
    "build_hopf",
    "verify_hopf_axioms",
    "tmul",
    "tadd",
    "tsub",
    "tscale",
    "apply_comult",
    "lift",
    "dual_products",
    "dual_presentation_check",
    "k8n_generators",
]


class InvalidData(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class NotK8nShape(ValueError):
    pass


class HopfAlgebra:
    def __init__(self, data: ExtensionData):
        self.data = data
        G = data.group
        self.group = G
        self.order = data.order
        N = G.order
        self.n_group = N
        self.dim = 2 * N
        M = data.order
        one = CycNum.one(M)
        self.zero = CycNum.zero(M)
        self.one = one
        s, t, act, mul, inv = data.sigma, data.tau, data.act, G.mul, G.inv
        self.labels = [f"e[{G.label(g)}]" for g in range(N)] + [f"e[{G.label(g)}]x" for g in range(N)]

        m = [[() for _ in range(2 * N)] for _ in range(2 * N)]
        for g in range(N):
            m[g][g] = ((g, one),)
            m[g][N + g] = ((N + g, one),)
            h = act(g)  # e_g x e_h nonzero iff h<|x = g
            m[N + g][h] = ((N + g, one),)
            m[N + g][N + h] = ((g, s[g]),)
        self.mult = tuple(tuple(r) for r in m)

        cm = []
        for g in range(N):
            cm.append(tuple(((h, mul[inv[h]][g]), one) for h in range(N)))
        for g in range(N):
            terms = []
            for h in range(N):
                k = mul[inv[h]][g]
                terms.append(((N + h, N + k), t[h][k]))
            cm.append(tuple(terms))
        self.comult = tuple(cm)

        self.counit = tuple([one if g == 0 else self.zero for g in range(N)] * 2)
        ant = [((inv[g], one),) for g in range(N)]
        for g in range(N):
            gi = inv[g]
            c = (s[gi] * t[gi][g]).inv()
            ant.append(((N + act(gi), c),))
        self.antipode = tuple(ant)
        self.unit = {(g,): one for g in range(N)}

        # partner lists for fast products: right[i] = [(j, k, c)] with b_i b_j = c b_k
        self._right = [[(j, k, c) for j in range(2 * N) for k, c in m[i][j]] for i in range(2 * N)]
        self._left = [[(i, k, c) for i in range(2 * N) for k, c in m[i][j]] for j in range(2 * N)]
        self._dual = None

    def is_x(self, i: int) -> bool:
        return i >= self.n_group

    def elem(self, i: int) -> int:
        return i % self.n_group

    def e(self, g: int) -> int:
        return g

    def ex(self, g: int) -> int:
        return self.n_group + g

    def basis(self, i: int) -> dict:
        return {(i,): self.one}

    def x(self) -> dict:
        return {(self.n_group + g,): self.one for g in range(self.n_group)}

    def tensor_unit(self, arity: int) -> dict:
        out = {(): self.one}
        for _ in range(arity):
            out = {k + (g,): c for k, c in out.items() for g in range(self.n_group)}
        return out

    # dense views --------------------------------------------------------

    def dense_mult(self):
        out = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                vec = [self.zero] * self.dim
                for k, c in self.mult[i][j]:
                    vec[k] = c
                row.append(vec)
            out.append(row)
        return out

    def dense_comult(self):
        out = []
        for k in range(self.dim):
            grid = [[self.zero] * self.dim for _ in range(self.dim)]
            for (i, j), c in self.comult[k]:
                grid[i][j] = c
            out.append(grid)
        return out

    def dense_antipode(self):
        mat = [[self.zero] * self.dim for _ in range(self.dim)]
        for i in range(self.dim):
            for k, c in self.antipode[i]:
                mat[k][i] = c
        return mat

    def __eq__(self, other):
        return (
            isinstance(other, HopfAlgebra)
            and self.data == other.data
            and self.mult == other.mult
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    __hash__ = None

    # dual algebra -------------------------------------------------------

    @property
    def dual_mult(self):
        """dual_mult[i][j] = {k: c}: product of dual basis elements i, j."""
        if self._dual is None:
            d = [[{} for _ in range(self.dim)] for _ in range(self.dim)]
            for k in range(self.dim):
                for (i, j), c in self.comult[k]:
                    d[i][j][k] = c
            self._dual = d
        return self._dual

    def dual_times(self, f: dict, g: dict) -> dict:
        out = {}
        D = self.dual_mult
        for i, a in f.items():
            for j, b in g.items():
                for k, c in D[i][j].items():
                    v = out.get(k, self.zero) + a * b * c
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return out

    def dual_unit(self) -> dict:
        return {i: c for i, c in enumerate(self.counit) if c}

    def dual_power(self, f: dict, k: int) -> dict:
        out = self.dual_unit()
        for _ in range(k):
            out = self.dual_times(out, f)
        return out


def build_hopf(data: ExtensionData, check: bool = True) -> HopfAlgebra:
    if check:
        rep = validate_extension(data)
        if not rep.ok:
            raise InvalidData(f"invalid extension data: {rep.failures[:3]}")
    return HopfAlgebra(data)


# ---------------------------------------------------------------------------
# tensor arithmetic


_ONE = ((0, 1),)


def _put(out, key, v):
    w = out.get(key)
    w = v if w is None else w + v
    if w:
        out[key] = w
    else:
        out.pop(key, None)


def tadd(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        _put(out, k, v)
    return out


def tscale(x: dict, c) -> dict:
    return {k: v * c for k, v in x.items() if v * c}


def tsub(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        _put(out, k, -v)
    return out


def tmul(H: HopfAlgebra, x: dict, y: dict) -> dict:
    """Product in H^(x)n, componentwise."""
    if not x or not y:
        return {}
    n = len(next(iter(x)))
    if len(next(iter(y))) != n:
        raise DimensionMismatch("tensor arities differ")
    mult = H.mult
    out = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            key = []
            scal = []
            for a, b in zip(kx, ky):
                p = mult[a][b]
                if not p:
                    break
                k, c = p[0]
                key.append(k)
                if c.terms != _ONE:
                    scal.append(c)
            else:
                coef = cx * cy
                for c in scal:
                    coef = coef * c
                _put(out, tuple(key), coef)
    return out


def apply_comult(H: HopfAlgebra, x: dict, pos: int = 0, opposite: bool = False) -> dict:
    """Apply Delta (or Delta^op) to tensor slot `pos`."""
    out = {}
    for key, c in x.items():
        for (i, j), d in H.comult[key[pos]]:
            pair = (j, i) if opposite else (i, j)
            _put(out, key[:pos] + pair + key[pos + 1 :], c * d)
    return out


def lift(H: HopfAlgebra, R: dict, slots: tuple[int, int], arity: int = 3) -> dict:
    """R_{ij}: place the two legs of R in the given slots, unit elsewhere."""
    if len(slots) != 2 or max(slots) >= arity:
        raise DimensionMismatch("bad slots for lift")
    out = {}
    rest = [s for s in range(arity) if s not in slots]
    fill = H.tensor_unit(len(rest))
    for (i, j), c in R.items():
        for key, u in fill.items():
            full = [None] * arity
            full[slots[0]], full[slots[1]] = i, j
            for s, g in zip(rest, key):
                full[s] = g
            _put(out, tuple(full), c * u)
    return out


def apply_linear(H: HopfAlgebra, table, x: dict, pos: int = 0) -> dict:
    """Apply a linear map given as table[i] = ((k, c), ...) to slot pos."""
    out = {}
    for key, c in x.items():
        for k, d in table[key[pos]]:
            _put(out, key[:pos] + (k,) + key[pos + 1 :], c * d)
    return out


def counit_slot(H: HopfAlgebra, x: dict, pos: int) -> dict:
    out = {}
    for key, c in x.items():
        e = H.counit[key[pos]]
        if e:
            _put(out, key[:pos] + key[pos + 1 :], c * e)
    return out


def multiply_slots(H: HopfAlgebra, x: dict) -> dict:
    """m: H (x) H -> H."""
    out = {}
    for (i, j), c in x.items():
        for k, d in H.mult[i][j]:
            _put(out, (k,), c * d)
    return out


# ---------------------------------------------------------------------------
# axioms


@dataclass
class AxiomReport:
    failures: list = field(default_factory=list)
    checked: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_hopf_axioms(H: HopfAlgebra) -> AxiomReport:
    """Exhaustive basis checks of every Hopf algebra axiom, including S o S = id."""
    rep = AxiomReport()
    d = H.dim
    B = [H.basis(i) for i in range(d)]
    one = H.unit

    def check(name, cond, witness):
        if not cond and not any(f[0] == name for f in rep.failures):
            rep.failures.append((name, witness))

    def run(name, fn):
        rep.checked.append(name)
        fn()

    def assoc():
        for i in range(d):
            for j in range(d):
                ij = tmul(H, B[i], B[j])
                for k in range(d):
                    check("associativity", tmul(H, ij, B[k]) == tmul(H, B[i], tmul(H, B[j], B[k])), (i, j, k))

    def unit():
        for i in range(d):
            check("unit", tmul(H, one, B[i]) == B[i] == tmul(H, B[i], one), i)

    def coassoc():
        for i in range(d):
            D = apply_comult(H, B[i])
            check("coassociativity", apply_comult(H, D, 0) == apply_comult(H, D, 1), i)

    def counit():
        for i in range(d):
            D = apply_comult(H, B[i])
            check("counit", counit_slot(H, D, 0) == B[i] == counit_slot(H, D, 1), i)

    def comult_alg():
        Ds = [apply_comult(H, B[i]) for i in range(d)]
        check("comult_unit", apply_comult(H, one) == H.tensor_unit(2), None)
        for i in range(d):
            for j in range(d):
                lhs = apply_comult(H, tmul(H, B[i], B[j]))
                check("comult_multiplicative", lhs == tmul(H, Ds[i], Ds[j]), (i, j))

    def counit_alg():
        eps = lambda x: sum((c * H.counit[k[0]] for k, c in x.items()), H.zero)
        check("counit_unit", eps(one) == 1, None)
        for i in range(d):
            for j in range(d):
                check("counit_multiplicative", eps(tmul(H, B[i], B[j])) == H.counit[i] * H.counit[j], (i, j))

    def antipode():
        for i in range(d):
            D = apply_comult(H, B[i])
            target = tscale(one, H.counit[i]) if H.counit[i] else {}
            left = multiply_slots(H, apply_linear(H, H.antipode, D, 0))
            right = multiply_slots(H, apply_linear(H, H.antipode, D, 1))
            check("antipode_left", left == target, i)
            check("antipode_right", right == target, i)

    def s_squared():
        for i in range(d):
            check("antipode_square", apply_linear(H, H.antipode, apply_linear(H, H.antipode, B[i])) == B[i], i)

    for name, fn in [
        ("associativity", assoc),
        ("unit", unit),
        ("coassociativity", coassoc),
        ("counit", counit),
        ("comult_algebra_map", comult_alg),
        ("counit_algebra_map", counit_alg),
        ("antipode", antipode),
        ("antipode_square", s_squared),
    ]:
        run(name, fn)
    return rep


def x_inverse(H: HopfAlgebra) -> dict:
    """Solve x * y = 1 for y by linear algebra."""
    from .exact import CycMatrix

    d = H.dim
    xe = H.x()
    cols = []
    for j in range(d):
        prod_ = tmul(H, xe, H.basis(j))
        cols.append([prod_.get((i,), H.zero) for i in range(d)])
    A = CycMatrix([[cols[j][i] for j in range(d)] for i in range(d)])
    rhs = [H.unit.get((i,), H.zero) for i in range(d)]
    sol = A.solve(rhs)
    return {(i,): v for i, v in enumerate(sol) if v}


# ---------------------------------------------------------------------------
# dual side


def dual_products(H: HopfAlgebra) -> AxiomReport:
    """E_g E_h = E_gh, E_g X_h = X_h E_g = 0, X_g X_h = tau(g, h) X_gh."""
    rep = AxiomReport(checked=["EE", "EX", "XE", "XX"])
    G, N, t = H.group, H.n_group, H.data.tau
    D = H.dual_mult
    for g in range(N):
        for h in range(N):
            gh = G.mul[g][h]
            if D[g][h] != {gh: H.one}:
                rep.failures.append(("EE", (g, h)))
            if D[g][N + h]:
                rep.failures.append(("EX", (g, h)))
            if D[N + h][g]:
                rep.failures.append(("XE", (h, g)))
            if D[N + g][N + h] != {N + gh: t[g][h]}:
                rep.failures.append(("XX", (g, h)))
    return rep


def k8n_generators(data: ExtensionData):
    """(n, a, b) when data has the K(8n) shape: G = Z_2n x Z_2, a<|x = ab, b<|x = b."""
    G = data.group
    inv = G.invariants
    if len(inv) != 2 or inv[1] != 2 or inv[0] % 2:
        raise NotK8nShape(f"group {list(inv)} is not Z_2n x Z_2")
    a, b = G.element(1, 0), G.element(0, 1)
    if data.act(a) != G.mul[a][b] or data.act(b) != b:
        raise NotK8nShape("action is not a -> ab, b -> b")
    return inv[0] // 2, a, b


def dual_presentation_check(H: HopfAlgebra) -> AxiomReport:
    n, a, b = k8n_generators(H.data)
    G, N, t = H.group, H.n_group, H.data.tau
    et = eta(H.data)
    E = lambda g: {g: H.one}
    X = lambda g: {N + g: H.one}
    times, power = H.dual_times, H.dual_power
    rep = AxiomReport()

    def check(name, lhs, rhs):
        rep.checked.append(name)
        if lhs != rhs:
            rep.failures.append((name, None))

    Pn = H.one
    for i in range(1, 2 * n):
        Pn = Pn * t[a][G.power(a, i)]
    check("X_a^2n", power(X(a), 2 * n), {N: Pn})
    check("X_b^2", power(X(b), 2), {N: t[b][b]})
    check("X_bX_a", times(X(b), X(a)), {k: v * et(a, b) for k, v in times(X(a), X(b)).items()})
    check("E_a^2n", power(E(a), 2 * n), E(0))
    check("E_b^2", power(E(b), 2), E(0))
    check("E_aE_b", times(E(a), E(b)), times(E(b), E(a)))
    check("X_1E_1", times(X(0), E(0)), {})
    check("E_1X_1", times(E(0), X(0)), {})
    space = RowSpace()
    for i in range(1, 2 * n + 1):
        for j in range(1, 3):
            space.add(times(power(X(a), i), power(X(b), j)))
            space.add(times(power(E(a), i), power(E(b), j)))
    rep.checked.append("spanning")
    if space.rank != H.dim:
        rep.failures.append(("spanning", space.rank))
    return rep
