"""Finite abelian groups, involutive actions, and the extension datum (G, <|, sigma, tau).

Group elements are handled by their index in the lexicographic listing of
exponent vectors; index 0 is the identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, prod

from .exact import CycNum, embed

__all__ = [
    "AbelianGroup",
    "Action",
    "ExtensionData",
    "Bicharacter",
    "STPartition",
    "Obstruction",
    "ValidationReport",
    "NotABicharacter",
    "validate_extension",
    "eta",
    "st_partition",
    "obstruction_check",
    "enumerate_bicharacters",
]


class NotABicharacter(ValueError):
    pass


class AbelianGroup:
    """Z_{n_1} x ... x Z_{n_k} with elements listed lexicographically."""

    def __init__(self, invariants):
        self.invariants = tuple(int(n) for n in invariants)
        if any(n < 1 for n in self.invariants):
            raise ValueError("cyclic orders must be positive")
        self.elements = tuple(itertools.product(*(range(n) for n in self.invariants)))
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.order = len(self.elements)
        self.mul = [[self.index[self._add(g, h)] for h in self.elements] for g in self.elements]
        self.inv = [self.index[tuple(-e % n for e, n in zip(g, self.invariants))] for g in self.elements]
        self.identity = 0

    def _add(self, g, h):
        return tuple((a + b) % n for a, b, n in zip(g, h, self.invariants))

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.invariants == other.invariants

    def __hash__(self):
        return hash(self.invariants)

    def __repr__(self):
        return "AbelianGroup(%s)" % list(self.invariants)

    def element(self, *exps) -> int:
        return self.index[tuple(e % n for e, n in zip(exps, self.invariants))]

    def generator(self, i: int) -> int:
        return self.element(*(1 if j == i else 0 for j in range(len(self.invariants))))

    def power(self, g: int, k: int) -> int:
        return self.element(*(k * e for e in self.elements[g]))

    def element_order(self, g: int) -> int:
        out = 1
        for e, n in zip(self.elements[g], self.invariants):
            out = out * (n // gcd(e, n)) // gcd(out, n // gcd(e, n))
        return out

    def label(self, g: int) -> str:
        return ",".join(str(e) for e in self.elements[g])

    def parse(self, key: str) -> int:
        parts = [int(p) for p in key.split(",")] if key else []
        if len(parts) != len(self.invariants):
            raise ValueError(f"bad element key {key!r}")
        return self.element(*parts)


class Action:
    """The automorphism g -> g<|x, given by images of the generators."""

    def __init__(self, group: AbelianGroup, images):
        self.group = group
        self.images = tuple(tuple(int(e) for e in im) for im in images)
        if len(self.images) != len(group.invariants):
            raise ValueError("need one image per generator")
        self.perm = [
            group.element(*(sum(e * im[k] for e, im in zip(g, self.images)) for k in range(len(group.invariants))))
            for g in group.elements
        ]

    def __call__(self, g: int) -> int:
        return self.perm[g]

    def __eq__(self, other):
        return isinstance(other, Action) and self.group == other.group and self.images == other.images

    def problems(self) -> list[tuple[str, object]]:
        G = self.group
        out = []
        for i, (n, im) in enumerate(zip(G.invariants, self.images)):
            if G.power(G.element(*im), n) != G.identity:
                out.append(("action_not_homomorphism", G.label(G.generator(i))))
        if len(set(self.perm)) != G.order:
            out.append(("action_not_bijective", None))
        if all(self.perm[g] == g for g in range(G.order)):
            out.append(("action_trivial", None))
        for g in range(G.order):
            if self.perm[self.perm[g]] != g:
                out.append(("action_not_involution", G.label(g)))
                break
        return out


@dataclass(frozen=True, eq=False)
class ExtensionData:
    """(G, <|, sigma, tau); sigma and tau are full tables over G and G x G."""

    group: AbelianGroup
    action: Action
    sigma: tuple
    tau: tuple
    order: int  # ambient cyclotomic order of every value

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionData)
            and self.order == other.order
            and self.action == other.action
            and self.sigma == other.sigma
            and self.tau == other.tau
        )

    def __hash__(self):
        return hash((self.group, self.action.images, self.sigma))

    @classmethod
    def from_functions(cls, group, images, sigma, tau, order) -> ExtensionData:
        """Tabulate sigma(g) and tau(g, h) given as functions of exponent vectors."""
        els = group.elements
        s = tuple(_lift(sigma(g), order) for g in els)
        t = tuple(tuple(_lift(tau(g, h), order) for h in els) for g in els)
        return cls(group, Action(group, images), s, t, order)

    def act(self, g: int) -> int:
        return self.action.perm[g]


def _lift(v, order):
    if isinstance(v, CycNum):
        return embed(v, order) if v.order != order else v
    return CycNum.rational(order, v)


@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, name, witness):
        self.failures.append((name, witness))


def validate_extension(data: ExtensionData, limit: int = 20) -> ValidationReport:
    """Check every condition on (G, <|, sigma, tau) by full enumeration."""
    G = data.group
    rep = ValidationReport()
    for name, w in data.action.problems():
        rep.add(name, w)
    if not rep.ok:
        return rep
    N, act, s, t = G.order, data.act, data.sigma, data.tau
    mul = G.mul
    lab = G.label

    def add(name, *w):
        if sum(1 for f in rep.failures if f[0] == name) < limit:
            rep.add(name, tuple(lab(g) for g in w))

    for g in range(N):
        if not s[g]:
            add("sigma_zero", g)
        for h in range(N):
            if not t[g][h]:
                add("tau_zero", g, h)
    if not rep.ok:
        return rep
    if s[0] != 1:
        add("sigma_unit", 0)
    for g in range(N):
        if s[act(g)] != s[g]:
            add("sigma_invariance", g)
        if t[0][g] != 1 or t[g][0] != 1:
            add("tau_unital", g)
    for g in range(N):
        for h in range(N):
            gh = mul[g][h]
            tgh = t[g][h]
            for k in range(N):
                if tgh * t[gh][k] != t[h][k] * t[g][mul[h][k]]:
                    add("tau_cocycle", g, h, k)
            if s[gh] != s[g] * s[h] * tgh * t[act(g)][act(h)]:
                add("compatibility", g, h)
    return rep


class Bicharacter:
    """Full table w(g, h) of a bicharacter on G."""

    def __init__(self, group: AbelianGroup, table):
        self.group = group
        self.table = tuple(tuple(r) for r in table)

    def __call__(self, g: int, h: int) -> CycNum:
        return self.table[g][h]

    def __eq__(self, other):
        return isinstance(other, Bicharacter) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def check(self) -> list[tuple]:
        G, w = self.group, self.table
        bad = []
        for g in range(G.order):
            for h in range(G.order):
                for k in range(G.order):
                    if w[G.mul[g][h]][k] != w[g][k] * w[h][k]:
                        bad.append(("left", g, h, k))
                    if w[g][G.mul[h][k]] != w[g][h] * w[g][k]:
                        bad.append(("right", g, h, k))
                if len(bad) > 5:
                    return bad
        return bad


def eta(data: ExtensionData) -> Bicharacter:
    """eta(g, h) = tau(g, h) / tau(h, g), checked to be a bicharacter."""
    N, t = data.group.order, data.tau
    b = Bicharacter(data.group, [[t[g][h] / t[h][g] for h in range(N)] for g in range(N)])
    bad = b.check()
    if bad:
        raise NotABicharacter(f"eta fails multiplicativity at {bad[0]}")
    return b


@dataclass(frozen=True)
class STPartition:
    S: tuple
    T: tuple


def st_partition(data: ExtensionData) -> STPartition:
    G, act = data.group, data.act
    S = tuple(g for g in range(G.order) if act(g) == g)
    T = tuple(g for g in range(G.order) if act(g) != g)
    Sset = set(S)
    for s1 in S:
        for s2 in S:
            assert G.mul[s1][s2] in Sset, "fixed points must form a subgroup"
    if T:
        TT = {G.mul[t1][t2] for t1 in T for t2 in T}
        assert Sset <= TT, "every fixed point must be a product of two moved points"
    return STPartition(S, T)


@dataclass(frozen=True)
class Obstruction:
    possible: bool
    reasons: tuple = ()  # (tag, message, witness)
    b: int | None = None

    def tags(self):
        return [r[0] for r in self.reasons]


def obstruction_check(data: ExtensionData) -> Obstruction:
    """Necessary conditions for a nontrivial R-matrix; every failing one is reported."""
    G, act = data.group, data.act
    part = st_partition(data)
    S, T = part.S, part.T
    lab = G.label
    reasons = []
    if G.order % 2:
        reasons.append(("odd_order", f"|G|={G.order} is odd", None))
    if len(S) != len(T):
        reasons.append(("unbalanced", f"|S|={len(S)} differs from |T|={len(T)}", None))
    b = None
    if T:
        t0 = T[0]
        disp = G.mul[G.inv[t0]][act(t0)]
        for t in T[1:]:
            d = G.mul[G.inv[t]][act(t)]
            if d != disp:
                reasons.append(
                    (
                        "displacement",
                        f"t^-1(t<|x) differs between t={lab(t0)} and t={lab(t)}",
                        (lab(t0), lab(t)),
                    )
                )
                break
        else:
            if disp in set(S) and G.mul[disp][disp] == G.identity:
                b = disp
            else:
                reasons.append(("no_b", f"t^-1(t<|x)={lab(disp)} is not an involution in S", lab(disp)))
    else:
        reasons.append(("no_moved_points", "T is empty", None))
    return Obstruction(not reasons, tuple(reasons), b if not reasons else None)


def enumerate_bicharacters(group: AbelianGroup, order: int) -> list[Bicharacter]:
    """Every bicharacter of G with values in Q(z_order), in a fixed order.

    The value on a generator pair (g_i, g_j) ranges over the gcd(n_i, n_j)-th
    roots of unity; the count is the product of those gcds.
    """
    inv = group.invariants
    k = len(inv)
    pairs = [(i, j) for i in range(k) for j in range(k)]
    gcds = [gcd(inv[i], inv[j]) for i, j in pairs]
    for d in gcds:
        if order % d:
            raise ValueError(f"Q(z_{order}) lacks the {d}-th roots of unity")
    els = group.elements
    out = []
    for choice in itertools.product(*(range(d) for d in gcds)):
        # log of w(g_i, g_j) in units of z_order
        logs = {p: c * (order // d) for p, c, d in zip(pairs, choice, gcds)}
        table = [
            [CycNum.zeta(order, sum(g[i] * h[j] * logs[(i, j)] for i, j in pairs)) for h in els] for g in els
        ]
        out.append(Bicharacter(group, table))
    assert len(out) == prod(gcds)
    return out
