"""Example families of extension data, tabulated exactly.

Each constructor first computes every sigma and tau value as an exponent of a
base root of unity, then picks the ambient order
    M = 4 * lcm(2|G|, orders of the sigma and tau values, 8)
and embeds everything into Q(z_M).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from math import gcd, lcm
from pathlib import Path

from .abgroup import AbelianGroup, Action, ExtensionData
from .exact import CycNum, embed

__all__ = [
    "FAMILIES",
    "CatalogSpec",
    "InvalidSpec",
    "ambient_order",
    "primitive_exponent",
    "k8",
    "k8n_sigma",
    "k8n_zeta",
    "k8n_custom",
    "h2n2",
    "a2n2t",
    "from_spec",
    "extension_to_json",
    "extension_from_json",
    "canonical_json",
    "fingerprint",
]

FAMILIES = ("k8", "h2n2", "a2n2t", "k8n_zeta", "k8n_custom", "flat_custom")


class InvalidSpec(ValueError):
    pass


def primitive_exponent(k: int, index: int = 0) -> int:
    """The index-th r (ascending) with gcd(r, k) = 1; z_k^r is then primitive."""
    choices = [r for r in range(1, k + 1) if gcd(r, k) == 1] if k > 1 else [0]
    if not 0 <= index < len(choices):
        raise InvalidSpec(f"root index {index} out of range for order {k} ({len(choices)} choices)")
    return choices[index]


def ambient_order(group_order: int, value_orders) -> int:
    return 4 * lcm(2 * group_order, 8, *value_orders)


def _from_exponents(group, images, base, sigma_exp, tau_exp) -> ExtensionData:
    """Values z_base^e; sigma_exp(g) and tau_exp(g, h) act on exponent vectors."""
    els = group.elements
    se = [sigma_exp(g) % base for g in els]
    te = [[tau_exp(g, h) % base for h in els] for g in els]
    orders = {base // gcd(e, base) for e in se} | {base // gcd(e, base) for r in te for e in r}
    M = ambient_order(group.order, orders)
    step = M // base
    sigma = tuple(CycNum.zeta(M, e * step) for e in se)
    tau = tuple(tuple(CycNum.zeta(M, e * step) for e in r) for r in te)
    return ExtensionData(group, Action(group, images), sigma, tau, M)


def k8() -> ExtensionData:
    """Kac-Paljutkin data on Z_2 x Z_2 with a<|x = ab."""
    G = AbelianGroup([2, 2])
    return _from_exponents(
        G,
        [(1, 1), (0, 1)],
        2,
        lambda g: (g[0] - g[1]) * g[1],
        lambda g, h: g[1] * (h[0] - h[1]),
    )


def k8n_sigma(n: int, base: int, s_exp: int) -> ExtensionData:
    """K(8n) shape with sigma(a^i b^j) = (-1)^(i(i-1)/2) s^i, s = z_base^s_exp, tau = (-1)^(jk).

    The pair (sigma, tau) is consistent exactly when s^(2n) = (-1)^n.
    """
    if base % 2:
        raise InvalidSpec("base order must be even")
    G = AbelianGroup([2 * n, 2])
    half = base // 2  # -1 = z_base^half
    return _from_exponents(
        G,
        [(1, 1), (0, 1)],
        base,
        lambda g: half * (g[0] * (g[0] - 1) // 2) + s_exp * g[0],
        lambda g, h: half * g[1] * h[0],
    )


def k8n_zeta(n: int, root_index: int = 0) -> ExtensionData:
    """sigma(a^i b^j) = (-1)^(i(i-1)/2) zeta^i, tau(a^i b^j, a^k b^l) = (-1)^(jk), zeta of order 2n.

    Only even n give consistent data: sigma(a^2n) = (-1)^n must equal sigma(1) = 1.
    """
    if n < 2:
        raise InvalidSpec("k8n_zeta needs n >= 2")
    return k8n_sigma(n, 2 * n, primitive_exponent(2 * n, root_index))


def k8n_custom(n: int, data: ExtensionData | None = None) -> ExtensionData:
    """K(8n)-shaped data; without a file this is the untwisted sigma = tau = 1 instance."""
    if data is not None:
        from .hopf import k8n_generators

        if k8n_generators(data)[0] != n:
            raise InvalidSpec(f"data has n={k8n_generators(data)[0]}, expected {n}")
        return data
    G = AbelianGroup([2 * n, 2])
    return _from_exponents(G, [(1, 1), (0, 1)], 1, lambda g: 0, lambda g, h: 0)


def h2n2(n: int, root_index: int = 0) -> ExtensionData:
    """sigma(a^i b^j) = w^(ij), tau(a^i b^j, a^k b^l) = w^(jk) on Z_n x Z_n with a<|x = b.

    For n = 2 the data is rewritten in the generators a' = a, b' = ab, which puts
    it in the K(8n) shape (a'<|x = a'b', b'<|x = b').
    """
    if n < 2:
        raise InvalidSpec("h2n2 needs n >= 2")
    r = primitive_exponent(n, root_index)
    sig = lambda i, j: r * i * j
    ta = lambda g, h: r * g[1] * h[0]
    if n == 2:
        old = lambda g: (g[0] + g[1], g[1])
        G = AbelianGroup([2, 2])
        return _from_exponents(
            G,
            [(1, 1), (0, 1)],
            n,
            lambda g: sig(*old(g)),
            lambda g, h: ta(old(g), old(h)),
        )
    G = AbelianGroup([n, n])
    return _from_exponents(G, [(0, 1), (1, 0)], n, lambda g: sig(*g), ta)


def a2n2t(n: int, root_index: int = 0) -> ExtensionData:
    """sigma = 1, tau(a^i b^j, a^k b^l) = t^(jk) on Z_n x Z_n, a<|x = a^-1, b<|x = b; n odd."""
    if n < 3 or n % 2 == 0:
        raise InvalidSpec("a2n2t needs an odd n >= 3")
    r = primitive_exponent(n, root_index)
    G = AbelianGroup([n, n])
    return _from_exponents(G, [(n - 1, 0), (0, 1)], n, lambda g: 0, lambda g, h: r * g[1] * h[0])


# ---------------------------------------------------------------------------
# JSON


def _key(G, g):
    return G.label(g)


def extension_to_json(data: ExtensionData) -> dict:
    G = data.group
    N = G.order
    return {
        "invariants": list(G.invariants),
        "action": {f"gen_{i}": list(im) for i, im in enumerate(data.action.images)},
        "sigma": {_key(G, g): data.sigma[g].to_json() for g in range(N)},
        "tau": {f"{_key(G, g)}|{_key(G, h)}": data.tau[g][h].to_json() for g in range(N) for h in range(N)},
    }


def extension_from_json(obj: dict) -> ExtensionData:
    if "data" in obj and "invariants" not in obj:
        obj = obj["data"]
    try:
        G = AbelianGroup(obj["invariants"])
        images = [obj["action"][f"gen_{i}"] for i in range(len(G.invariants))]
        sig = {G.parse(k): CycNum.from_json(v) for k, v in obj["sigma"].items()}
        tau = {}
        for k, v in obj["tau"].items():
            left, right = k.split("|")
            tau[(G.parse(left), G.parse(right))] = CycNum.from_json(v)
    except (KeyError, ValueError, TypeError) as exc:
        raise InvalidSpec(f"malformed extension data: {exc}") from exc
    N = G.order
    if len(sig) != N or len(tau) != N * N:
        raise InvalidSpec("sigma and tau tables must be complete")
    values = list(sig.values()) + list(tau.values())
    orders = []
    for v in values:
        e = v.log()
        orders.append(v.order // gcd(e, v.order) if e is not None else v.order)
    M2 = lcm(ambient_order(N, orders), *(v.order for v in values))
    sigma = tuple(embed(sig[g], M2) for g in range(N))
    tau_t = tuple(tuple(embed(tau[(g, h)], M2) for h in range(N)) for g in range(N))
    return ExtensionData(G, Action(G, images), sigma, tau_t, M2)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def fingerprint(data: ExtensionData) -> str:
    return hashlib.sha256(canonical_json(extension_to_json(data)).encode()).hexdigest()[:16]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogSpec:
    family: str
    n: int | None = None
    root_index: int = 0
    data_file: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidSpec(f"unknown family {self.family!r}")


def from_spec(spec: CatalogSpec) -> ExtensionData:
    fam, n = spec.family, spec.n
    loaded = None
    if spec.data_file is not None:
        loaded = extension_from_json(json.loads(Path(spec.data_file).read_text()))
    if fam == "k8":
        return k8()
    if fam == "flat_custom":
        if loaded is None:
            raise InvalidSpec("flat_custom needs --data")
        return loaded
    if n is None:
        raise InvalidSpec(f"family {fam} needs --n")
    if fam == "k8n_zeta":
        return k8n_zeta(n, spec.root_index)
    if fam == "k8n_custom":
        return k8n_custom(n, loaded)
    if fam == "h2n2":
        return h2n2(n, spec.root_index)
    if fam == "a2n2t":
        return a2n2t(n, spec.root_index)
    raise InvalidSpec(fam)
