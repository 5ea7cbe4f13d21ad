"""Exact arithmetic in cyclotomic fields Q(zeta_M) and exact linear algebra over them.

A CycNum is stored on the power basis 1, z, ..., z^(phi(M)-1) after reduction
modulo the M-th cyclotomic polynomial, so equal values have equal storage.
Only the nonzero coefficients are kept.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy import Matrix, Poly, QQ, cyclotomic_poly, divisors, invert, symbols, totient

__all__ = [
    "CycNum",
    "CycMatrix",
    "DivisionByZero",
    "IncompatibleOrders",
    "NotADivisor",
    "Singular",
    "NoRoot",
    "RowSpace",
    "embed",
    "restrict",
    "roots_of_unity",
    "is_primitive_root",
    "solve_power",
    "root_log",
]


class DivisionByZero(ZeroDivisionError):
    pass


class IncompatibleOrders(ValueError):
    pass


class NotADivisor(ValueError):
    pass


class Singular(ValueError):
    pass


class NoRoot(ValueError):
    """x^k = c has no solution we can produce inside Q(zeta_M)."""


_X = symbols("x")


def _clean(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class _Field:
    """Per-order tables: reductions of z^e for 0 <= e < M and a discrete log."""

    def __init__(self, order: int):
        self.order = order
        self.phi = int(totient(order))
        poly = Poly(cyclotomic_poly(order, _X), _X)
        # coefficients low -> high, monic of degree phi
        self.poly = [int(c) for c in reversed(poly.all_coeffs())]
        self.red = self._reductions()
        self._log = None

    def _reductions(self):
        phi, M = self.phi, self.order
        tail = [-c for c in self.poly[:phi]]  # z^phi = sum tail[k] z^k
        cur = [0] * phi
        cur[0] = 1
        out = []
        for _ in range(M):
            out.append(tuple((k, c) for k, c in enumerate(cur) if c))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c + top * t for c, t in zip(cur, tail)]
        return tuple(out)

    @property
    def log(self):
        if self._log is None:
            self._log = {terms: e for e, terms in enumerate(self.red)}
        return self._log


@lru_cache(maxsize=None)
def _field(order: int) -> _Field:
    if order < 1:
        raise ValueError("order must be positive")
    return _Field(order)


class CycNum:
    """An element of Q(zeta_M)."""

    __slots__ = ("order", "terms", "_hash")

    def __init__(self, order: int, terms=()):
        # terms: canonical tuple of (exponent, coefficient) with exponent < phi(M)
        self.order = order
        self.terms = terms
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, order: int, coeffs) -> CycNum:
        """Build from any coefficient list on 1, z, z^2, ...; reduces as needed."""
        F = _field(order)
        acc = {}
        for e, c in enumerate(coeffs):
            c = Fraction(c)
            if c:
                _accumulate(acc, F.red[e % order], c)
        return cls._from_acc(order, acc)

    @classmethod
    def rational(cls, order: int, value) -> CycNum:
        value = _clean(Fraction(value))
        return cls(order, ((0, value),) if value else ())

    @classmethod
    def zero(cls, order: int) -> CycNum:
        return cls(order, ())

    @classmethod
    def one(cls, order: int) -> CycNum:
        return cls(order, ((0, 1),))

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> CycNum:
        """z_M^k."""
        return cls(order, _field(order).red[k % order])

    @classmethod
    def _from_acc(cls, order, acc):
        return cls(order, tuple(sorted((e, _clean(c)) for e, c in acc.items() if c)))

    # inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> list:
        out = [Fraction(0)] * _field(self.order).phi
        for e, c in self.terms:
            out[e] = Fraction(c)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def sort_key(self):
        return tuple(self.coeffs)

    def log(self):
        """The exponent e with self = z_M^e, or None if self is not in mu_M."""
        return _field(self.order).log.get(self.terms)

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.order == self.order:
                return self, other
            if other.order % self.order == 0:
                return embed(self, other.order), other
            if self.order % other.order == 0:
                return self, embed(other, self.order)
            raise IncompatibleOrders(f"orders {self.order} and {other.order}")
        if isinstance(other, (int, Fraction)):
            return self, CycNum.rational(self.order, other)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if not b.terms:
            return a
        if not a.terms:
            return b
        acc = dict(a.terms)
        for e, c in b.terms:
            acc[e] = acc.get(e, 0) + c
        return CycNum._from_acc(a.order, acc)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.order, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if not a.terms or not b.terms:
            return CycNum(a.order, ())
        M = a.order
        red = _field(M).red
        if len(a.terms) == 1 and len(b.terms) == 1:
            (ea, ca), (eb, cb) = a.terms[0], b.terms[0]
            c = ca * cb
            r = red[(ea + eb) % M]
            if len(r) == 1:
                return CycNum(M, ((r[0][0], _clean(c * r[0][1])),))
        acc = {}
        for ea, ca in a.terms:
            for eb, cb in b.terms:
                _accumulate(acc, red[(ea + eb) % M], ca * cb)
        return CycNum._from_acc(M, acc)

    __rmul__ = __mul__

    def inv(self) -> CycNum:
        if not self.terms:
            raise DivisionByZero("inverse of zero")
        M = self.order
        if len(self.terms) == 1:
            e, c = self.terms[0]
            return CycNum.zeta(M, -e) * CycNum.rational(M, 1 / Fraction(c))
        F = _field(M)
        num = Poly(list(reversed(self.coeffs)), _X, domain=QQ)
        mod = Poly(list(reversed(F.poly)), _X, domain=QQ)
        res = invert(num, mod)
        coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(res.all_coeffs())]
        return CycNum.from_coeffs(M, coeffs)

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inv()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base, k = self.inv(), -k
        if len(base.terms) == 1 and base.terms[0][1] in (1, -1):
            e, c = base.terms[0]
            sign = c ** (k % 2) if c == -1 else 1
            out = CycNum.zeta(base.order, e * k)
            return -out if sign == -1 else out
        result = CycNum.one(base.order)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycNum):
            if other.order == self.order:
                return self.terms == other.terms
            try:
                a, b = self._coerce(other)
            except IncompatibleOrders:
                M = self.order * other.order // gcd(self.order, other.order)
                a, b = embed(self, M), embed(other, M)
            return a.terms == b.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == CycNum.rational(self.order, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.terms))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}")
        return f"<{' + '.join(parts)} in Q(z_{self.order})>"

    # serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> CycNum:
        order = int(obj["order"])
        coeffs = [Fraction(c) for c in obj["coeffs"]]
        if len(coeffs) != _field(order).phi:
            raise ValueError(f"expected {_field(order).phi} coefficients for order {order}")
        return cls.from_coeffs(order, coeffs)


def _accumulate(acc, reduced, c):
    for k, r in reduced:
        acc[k] = acc.get(k, 0) + c * r


def embed(a: CycNum, new_order: int) -> CycNum:
    """Image of a under z_m -> z_{M'}^{M'/m}."""
    if new_order % a.order:
        raise NotADivisor(f"{a.order} does not divide {new_order}")
    if new_order == a.order:
        return a
    step = new_order // a.order
    red = _field(new_order).red
    acc = {}
    for e, c in a.terms:
        _accumulate(acc, red[e * step], c)
    return CycNum._from_acc(new_order, acc)


def restrict(a: CycNum, order: int) -> CycNum:
    """Inverse of embed: express a as an element of the subfield Q(z_order)."""
    if a.order % order:
        raise NotADivisor(f"{order} does not divide {a.order}")
    if order == a.order:
        return a
    # solve a = sum c_k z_order^k over Q against the images of the subfield basis
    cols = [embed(CycNum.zeta(order, k), a.order).coeffs for k in range(_field(order).phi)]
    A = Matrix([[col[r] for col in cols] for r in range(_field(a.order).phi)])
    try:
        sol, params = A.gauss_jordan_solve(Matrix(a.coeffs))
    except ValueError:
        raise NotADivisor(f"value does not lie in Q(z_{order})") from None
    assert not params.free_symbols, "subfield basis images are independent"
    return CycNum.from_coeffs(order, [Fraction(int(c.p), int(c.q)) for c in sol])


def roots_of_unity(M: int, k: int) -> list[CycNum]:
    """All x in Q(z_M) with x^k = 1, listed as z^0, z^(M/d), z^(2M/d), ..."""
    if M % 2:
        # Q(z_M) = Q(z_2M) for odd M; the roots of unity in it form mu_2M
        d = gcd(k, 2 * M)
        return [embed_down(2 * M, (2 * M // d) * j, M) for j in range(d)]
    d = gcd(k, M)
    return [CycNum.zeta(M, (M // d) * j) for j in range(d)]


def embed_down(big: int, e: int, M: int) -> CycNum:
    # z_big^e as an element of Q(z_M) when Q(z_big) = Q(z_M) (big = 2M, M odd)
    if e % 2 == 0:
        return CycNum.zeta(M, e // 2)
    # z_{2M} = -z_M^{(M+1)/2}
    return -CycNum.zeta(M, (e * (M + 1) // 2))


def is_primitive_root(x: CycNum, n: int) -> bool:
    if x ** n != 1:
        return False
    return all(x ** d != 1 for d in divisors(n) if d < n)


def root_log(c: CycNum) -> int:
    """Exponent e with c = z_M^e; raises NoRoot when c is not an M-th root of unity."""
    e = c.log()
    if e is None:
        raise NoRoot(f"{c!r} is not a root of unity of order dividing {c.order}")
    return e


def solve_power(c: CycNum, k: int) -> list[CycNum]:
    """All x in Q(z_M) with x^k = c, for c a root of unity; sorted by exponent.

    Since M is even in every use, every root of unity of Q(z_M) lies in mu_M,
    and x^k = c forces x to be a root of unity, so the list is complete.
    """
    M = c.order
    if M % 2:
        raise ValueError("solve_power needs an even ambient order")
    e = root_log(c)
    d = gcd(k, M)
    if e % d:
        return []
    m = M // d
    y0 = (e // d) * pow(k // d, -1, m) % m if m > 1 else 0
    return [CycNum.zeta(M, y) for y in sorted((y0 + m * j) % M for j in range(d))]


# ---------------------------------------------------------------------------
# linear algebra


class RowSpace:
    """Incremental row echelon form over Q(z_M) with sparse rows {col: CycNum}.

    Pivots are taken at the first nonzero column of each reduced row.
    """

    def __init__(self):
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v}
        heap = [c for c in row if c in self.pivots]
        heapq.heapify(heap)
        seen = set(heap)
        while heap:
            c = heapq.heappop(heap)
            f = row.get(c)
            if f is None:
                continue
            for k, v in self.pivots[c].items():
                new = row.get(k)
                new = -(f * v) if new is None else new - f * v
                if new:
                    row[k] = new
                    if k in self.pivots and k not in seen:
                        seen.add(k)
                        heapq.heappush(heap, k)
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns True if it was independent of the current span."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = row[p].inv()
        self.pivots[p] = {k: v * inv for k, v in row.items()}
        return True


class CycMatrix:
    """Dense matrix of CycNum sharing one ambient order."""

    def __init__(self, entries):
        self.entries = [list(r) for r in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        orders = {x.order for r in self.entries for x in r}
        if len(orders) > 1:
            raise IncompatibleOrders(f"mixed orders {sorted(orders)}")
        self.order = orders.pop() if orders else 1

    @classmethod
    def from_ints(cls, order: int, rows) -> CycMatrix:
        return cls([[CycNum.rational(order, v) for v in r] for r in rows])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, CycMatrix) and self.entries == other.entries

    def _sparse(self):
        return [{j: v for j, v in enumerate(r) if v} for r in self.entries]

    def rref(self):
        """Reduced row echelon form; returns (rows as dicts, pivot columns)."""
        rows = self._sparse()
        pivots = []
        r = 0
        for c in range(self.cols):
            piv = next((i for i in range(r, len(rows)) if c in rows[i]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = rows[r][c].inv()
            rows[r] = {k: v * inv for k, v in rows[r].items()}
            for i in range(len(rows)):
                if i != r and c in rows[i]:
                    f = rows[i][c]
                    row = dict(rows[i])
                    for k, v in rows[r].items():
                        new = row.get(k, 0) - f * v
                        if new:
                            row[k] = new
                        else:
                            row.pop(k, None)
                    rows[i] = row
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return rows[:r], pivots

    def rank(self) -> int:
        space = RowSpace()
        for row in self._sparse():
            space.add(row)
        return space.rank

    def nullspace(self) -> list[list[CycNum]]:
        """Basis of the right kernel, one vector per free column."""
        rows, pivots = self.rref()
        zero = CycNum.zero(self.order)
        free = [c for c in range(self.cols) if c not in set(pivots)]
        basis = []
        for f in free:
            vec = [zero] * self.cols
            vec[f] = CycNum.one(self.order)
            for row, p in zip(rows, pivots):
                v = row.get(f)
                if v:
                    vec[p] = -v
            basis.append(vec)
        return basis

    def inverse(self) -> CycMatrix:
        if self.rows != self.cols:
            raise Singular("inverse of a non-square matrix")
        n = self.rows
        one, zero = CycNum.one(self.order), CycNum.zero(self.order)
        aug = CycMatrix([r + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.entries)])
        rows, pivots = aug.rref()
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise Singular("matrix is not invertible")
        return CycMatrix([[rows[i].get(n + j, zero) for j in range(n)] for i in range(n)])

    def solve(self, rhs) -> list[CycNum]:
        """One solution x of self @ x = rhs; raises Singular if inconsistent."""
        zero = CycNum.zero(self.order)
        aug = CycMatrix([r + [b] for r, b in zip(self.entries, rhs)])
        rows, pivots = aug.rref()
        if self.cols in pivots:
            raise Singular("inconsistent system")
        x = [zero] * self.cols
        for row, p in zip(rows, pivots):
            x[p] = row.get(self.cols, zero)
        return x
