"""Left-symmetric, Novikov and Balinsky-Novikov product tables.

A product table stores ``m[i][j][k]`` with ``e_i . e_j = sum_k m[i][j][k] e_k``.
Coefficients only need ring operations, so the same code runs on Scalars
and on the formal unknowns of :mod:`superqf.obstruction`.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from .checks import CheckReport
from .lie import LieSuperStructure
from .scalar import ZERO, as_scalar
from .superspace import MixedParityTerm, Parity, SuperSpace, sign

HALF = Fraction(1, 2)


class ProductTable:
    def __init__(self, space: SuperSpace, m=None, zero=ZERO, check=True):
        self.space = space
        self.zero = zero
        n = space.dim
        self.m = m if m is not None else [[[zero] * n for _ in range(n)] for _ in range(n)]
        if check:
            for i, j, k in product(range(n), repeat=3):
                if self.m[i][j][k] and space.parity(k) != space.parity(i) + space.parity(j):
                    raise MixedParityTerm(
                        f"{space.labels[i]}.{space.labels[j]} has a component on {space.labels[k]} of the wrong parity"
                    )

    @classmethod
    def from_products(cls, space: SuperSpace, products) -> "ProductTable":
        n = space.dim
        m = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), rhs in products.items():
            i = space.index(i) if isinstance(i, str) else i
            j = space.index(j) if isinstance(j, str) else j
            for k, c in rhs.items():
                k = space.index(k) if isinstance(k, str) else k
                m[i][j][k] = m[i][j][k] + as_scalar(c)
        return cls(space, m)

    @property
    def dim(self):
        return self.space.dim

    def mul(self, x, y):
        n = self.dim
        out = [self.zero] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                mij = self.m[i][j]
                f = x[i] * y[j]
                for k in range(n):
                    if mij[k]:
                        out[k] = out[k] + f * mij[k]
        return out

    def basis(self, i):
        v = [self.zero] * self.dim
        v[i] = self.zero + 1
        return v

    def parameters(self):
        return {p for a in self.m for b in a for x in b for p in x.parameters()}

    def subs(self, assignment):
        return ProductTable(self.space, [[[x.subs(assignment) for x in b] for b in a] for a in self.m])


def _lin(*pairs):
    """sum of c * v over (c, v) pairs of equal-length vectors."""
    out = None
    for c, v in pairs:
        scaled = [c * x for x in v]
        out = scaled if out is None else [a + b for a, b in zip(out, scaled)]
    return out


def associator(P: ProductTable, x, y, z):
    """(x.y).z - x.(y.z)."""
    a = P.mul(P.mul(x, y), z)
    b = P.mul(x, P.mul(y, z))
    return [u - v for u, v in zip(a, b)]


def t_functional(P: ProductTable, i: int, j: int, k: int):
    """(x,y,z) - (-1)^{|x||y|} (y,x,z) on basis vectors."""
    V = P.space
    x, y, z = P.basis(i), P.basis(j), P.basis(k)
    s = sign(V.parity(i) * V.parity(j))
    return _lin((1, associator(P, x, y, z)), (-s, associator(P, y, x, z)))


def n_functional(P: ProductTable, i: int, j: int, k: int):
    """(z.x).y - (-1)^{|x||y|} (z.y).x on basis vectors x=e_i, y=e_j, z=e_k."""
    V = P.space
    x, y, z = P.basis(i), P.basis(j), P.basis(k)
    s = sign(V.parity(i) * V.parity(j))
    return _lin((1, P.mul(P.mul(z, x), y)), (-s, P.mul(P.mul(z, y), x)))


def _labels(V, *idx):
    return [V.labels[i] for i in idx]


def _fmt(V, vec):
    return {V.labels[k]: str(c) for k, c in enumerate(vec) if c}


def is_left_symmetric(P: ProductTable) -> CheckReport:
    rep = CheckReport("left-symmetric")
    V = P.space
    for i, j, k in product(range(P.dim), repeat=3):
        t = t_functional(P, i, j, k)
        if any(t):
            rep.fail({"triple": _labels(V, i, j, k), "defect": _fmt(V, t)})
    return rep


def novikov_right_report(P: ProductTable):
    """Right-multiplication law split by parity agreement of (x, y)."""
    same = CheckReport("novikov-right")
    mixed = CheckReport("novikov-right-mixed")
    V = P.space
    for i, j, k in product(range(P.dim), repeat=3):
        nval = n_functional(P, i, j, k)
        if any(nval):
            target = same if V.parity(i) == V.parity(j) else mixed
            target.fail({"x": V.labels[i], "y": V.labels[j], "z": V.labels[k], "value": _fmt(V, nval)})
    return same, mixed


def is_novikov(P: ProductTable) -> CheckReport:
    """Left symmetry plus the right-multiplication law for same-parity x, y.

    Mixed-parity instances are reported in ``detail['mixed']`` and do not
    affect the verdict.
    """
    rep = CheckReport("novikov")
    lsa = is_left_symmetric(P)
    rep.merge(lsa, "left-symmetric")
    same, mixed = novikov_right_report(P)
    rep.merge(same, "novikov-right")
    rep.detail["left_symmetric"] = lsa.ok
    rep.detail["mixed_ok"] = mixed.ok
    rep.detail["mixed"] = mixed.failures[:8]
    return rep


def induced_bracket(P: ProductTable) -> LieSuperStructure:
    V = P.space
    n = V.dim
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i, j in product(range(n), repeat=2):
        s = sign(V.parity(i) * V.parity(j))
        c[i][j] = [a - s * b for a, b in zip(P.m[i][j], P.m[j][i])]
    return LieSuperStructure(V, c)


def bn_induced_bracket(P: ProductTable) -> LieSuperStructure:
    V = P.space
    n = V.dim
    c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i, j in product(range(n), repeat=2):
        pi, pj = V.parity(i), V.parity(j)
        if pi == Parity.EVEN and pj == Parity.EVEN:
            c[i][j] = [a - b for a, b in zip(P.m[i][j], P.m[j][i])]
        elif pi == Parity.EVEN and pj == Parity.ODD:
            c[i][j] = [a - HALF * b for a, b in zip(P.m[i][j], P.m[j][i])]
        elif pi == Parity.ODD and pj == Parity.EVEN:
            c[i][j] = [-(a - HALF * b) for a, b in zip(P.m[j][i], P.m[i][j])]
        else:
            c[i][j] = list(P.m[i][j])
    return LieSuperStructure(V, c)


def compatibility(bracket: LieSuperStructure, target: LieSuperStructure) -> CheckReport:
    """Exact equality of two bracket tables on the same basis."""
    rep = CheckReport("compatibility")
    V = target.space
    for i, j in product(range(V.dim), repeat=2):
        diff = [a - b for a, b in zip(bracket.c[i][j], target.c[i][j])]
        if any(diff):
            rep.fail({"pair": _labels(V, i, j), "induced": _fmt(V, bracket.c[i][j]), "expected": _fmt(V, target.c[i][j])})
    return rep


def is_balinsky_novikov(P: ProductTable) -> CheckReport:
    rep = CheckReport("balinsky-novikov")
    V = P.space
    n = P.dim
    E, O = Parity.EVEN, Parity.ODD
    patterns = {(E, E, E), (E, E, O), (E, O, E), (O, E, E)}
    b = [P.basis(i) for i in range(n)]
    mul = P.mul

    def sub(u, v):
        return [p - q for p, q in zip(u, v)]

    for i, j, k in product(range(n), repeat=3):
        pat = (V.parity(i), V.parity(j), V.parity(k))
        x, y, z = b[i], b[j], b[k]
        trip = _labels(V, i, j, k)
        if pat in patterns:
            lhs = sub(associator(P, x, y, z), associator(P, y, x, z))
            if any(lhs):
                rep.fail({"axiom": "left-symmetry", "triple": trip, "value": _fmt(V, lhs)})
            rc = sub(mul(mul(x, y), z), mul(mul(x, z), y))
            if any(rc):
                rep.fail({"axiom": "right-commutativity", "triple": trip, "value": _fmt(V, rc)})
        if pat == (O, O, E):
            r = sub(mul(mul(x, y), z), mul(mul(x, z), y))
            if any(r):
                rep.fail({"axiom": "compat-1", "triple": trip, "value": _fmt(V, r)})
        if pat == (E, O, O):
            r = sub(mul(x, mul(y, z)), [p + q for p, q in zip(mul(mul(x, y), z), mul(y, mul(x, z)))])
            if any(r):
                rep.fail({"axiom": "compat-2", "triple": trip, "value": _fmt(V, r)})
        if pat == (O, O, O):
            r = sub(mul(x, mul(y, z)), [p + q for p, q in zip(mul(mul(x, y), z), mul(mul(x, z), y))])
            if any(r):
                rep.fail({"axiom": "compat-3", "triple": trip, "value": _fmt(V, r)})
    for i, j in product(range(n), repeat=2):
        if V.parity(i) == O and V.parity(j) == O:
            d = sub(P.m[i][j], P.m[j][i])
            if any(d):
                rep.fail({"axiom": "odd-commutativity", "pair": _labels(V, i, j), "value": _fmt(V, d)})
    return rep
